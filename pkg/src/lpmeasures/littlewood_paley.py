"""Dyadic Littlewood-Paley sums on sampled signals.

All operators here are Fourier multipliers built from exact profiles in
:mod:`lpmeasures.kernels` and applied bin-wise on a :class:`~lpmeasures.grid.Grid`.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np
import scipy.fft

from .grid import AliasingError, Grid, GridSignal, frequencies, from_spectrum, sample_profile_kernel, spectrum
from .kernels import (
    FrequencyProfile,
    fejer_profile,
    h_profile,
    mn_profile,
    partition_profile,
    profile_combine,
    two_sided_profile,
    vdp_profile,
)

__all__ = [
    "SignPattern",
    "ResolutionError",
    "DecompositionReport",
    "VdpResidual",
    "lp_partial_sum",
    "two_sided_partial",
    "reconstruct_vdp_identity",
    "reconstruction_residual",
    "unconditional_ratio",
    "split_K",
    "hormander_integral",
    "hormander_sup",
    "geometric_shifts",
]


class ResolutionError(ValueError):
    """The lowest dyadic block is finer than the grid's frequency resolution."""


@dataclass(frozen=True)
class SignPattern:
    """Signs ``eps_n`` for ``n = start .. start + len(values) - 1``."""

    values: tuple[int, ...]
    start: int = 0

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if any(v not in (-1, 1) for v in values):
            raise ValueError("sign patterns take values in {-1, +1} only")
        object.__setattr__(self, "values", values)

    @classmethod
    def ones(cls, count: int, start: int = 0) -> "SignPattern":
        return cls((1,) * count, start)

    @classmethod
    def random(cls, rng: np.random.Generator, count: int, start: int = 0) -> "SignPattern":
        return cls(tuple(rng.choice((-1, 1), size=count).tolist()), start)

    @property
    def stop(self) -> int:
        return self.start + len(self.values)

    def __neg__(self) -> "SignPattern":
        return SignPattern(tuple(-v for v in self.values), self.start)

    def __getitem__(self, n: int) -> int:
        return self.values[n - self.start]


def _require_nyquist(grid: Grid, N: int) -> None:
    if 2.0 ** (N + 1) >= grid.nyquist:
        raise AliasingError(f"block {N} reaches {2 ** (N + 1)} >= Nyquist {grid.nyquist:.4g}")


def _require_resolution(grid: Grid, M: int) -> None:
    if 2.0 ** (-M - 1) <= grid.resolution:
        raise ResolutionError(
            f"block {-M} starts at {2.0 ** (-M - 1):.4g}, below the resolution {grid.resolution:.4g}"
        )


def _block_spectra(f: GridSignal, ns: Sequence[int]) -> np.ndarray:
    s = frequencies(f.grid)
    F = spectrum(f)
    return np.stack([mn_profile(n).evaluate(s) * F for n in ns])


def lp_partial_sum(f: GridSignal, eps: SignPattern | Sequence[int], N: int) -> GridSignal:
    """``h*f + sum_{n=0}^N eps_n m_n*f``."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    _require_nyquist(f.grid, N)
    signs = eps.values if isinstance(eps, SignPattern) else tuple(eps)
    profile = partition_profile(signs, N)
    return from_spectrum(spectrum(f) * profile.evaluate(frequencies(f.grid)), f.grid)


def two_sided_partial(f: GridSignal, eps: SignPattern | Sequence[int], M: int, N: int) -> GridSignal:
    """``sum_{n=-M}^N eps_n m_n*f``."""
    _require_nyquist(f.grid, N)
    _require_resolution(f.grid, M)
    signs = eps.values if isinstance(eps, SignPattern) else tuple(eps)
    profile = two_sided_profile(signs, M, N)
    return from_spectrum(spectrum(f) * profile.evaluate(frequencies(f.grid)), f.grid)


@dataclass(frozen=True)
class VdpResidual:
    residual: float
    precondition_ok: bool
    negative_energy: float


def reconstruct_vdp_identity(f: GridSignal, N: int, tol: float = 1e-12) -> VdpResidual:
    """``||V_{2^N}*f - (h*f + sum_{n<=N} m_n*f)||_1``.

    The residual multiplier vanishes on ``[-1/2, inf)``, so for ``f`` with no
    spectrum at ``s <= -1/2`` the residual is pure round-off. Otherwise
    ``precondition_ok`` is False and the number has no meaning.
    """
    _require_nyquist(f.grid, N)
    s = frequencies(f.grid)
    F = spectrum(f)
    diff = profile_combine([(1, vdp_profile(N)), (-1, partition_profile(None, N))])
    r = from_spectrum(F * diff.evaluate(s), f.grid)
    bad = np.abs(F[s <= -0.5]) ** 2
    total = float((np.abs(F) ** 2).sum())
    neg = float(bad.sum()) / total if total > 0 else 0.0
    return VdpResidual(r.norm1(), neg <= tol**2, neg)


def reconstruction_residual(f: GridSignal, N: int) -> float:
    """``||f - (h*f + sum_{n<=N} m_n*f)||_1``."""
    return (f - lp_partial_sum(f, SignPattern.ones(N + 1), N)).norm1()


@dataclass
class DecompositionReport:
    N: int
    trials: int
    seed: int
    max_ratio: float
    reconstruction_residual: float
    ratios: list[float] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)


def unconditional_ratio(f: GridSignal, N: int, trials: int, seed: int, chunk: int = 16) -> DecompositionReport:
    """Sample ``||h*f + sum eps_n m_n*f||_1 / ||f||_1`` over random signs.

    The all ``+1`` and all ``-1`` patterns are evaluated first, then
    ``trials`` i.i.d. uniform patterns drawn from ``default_rng(seed)``.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    _require_nyquist(f.grid, N)
    rng = np.random.default_rng(seed)
    patterns = np.ones((trials + 2, N + 1))
    patterns[1] = -1
    patterns[2:] = rng.choice((-1.0, 1.0), size=(trials, N + 1))

    s = frequencies(f.grid)
    F = spectrum(f)
    phase = np.exp(1j * s * f.grid.x0)
    low = h_profile().evaluate(s) * F
    blocks = _block_spectra(f, range(N + 1))
    norm = f.norm1()
    ratios = []
    for i in range(0, len(patterns), chunk):
        eps = patterns[i : i + chunk]
        spec = low[None, :] + eps @ blocks
        out = scipy.fft.ifft(spec * phase[None, :], axis=1)
        ratios.extend((np.abs(out).sum(axis=1) / norm).tolist())
    resid = reconstruction_residual(f, N) / norm
    return DecompositionReport(N, trials, seed, float(max(ratios)), resid, ratios)


def split_K(eps: SignPattern, M: int, N: int, grid: Grid) -> tuple[GridSignal, GridSignal, GridSignal, GridSignal]:
    """The four partial kernels of ``sum_{n=-M}^N eps_n m_n``.

    ``K1``/``K2`` collect ``exp(i 2^n x) k_{2^(n-1)}`` for ``n < 0`` / ``n >= 0``;
    ``K3``/``K4`` collect ``1/2 exp(i 3 2^(n-1) x) k_{2^(n-1)}`` likewise.
    """
    if eps.start != -M or eps.stop != N + 1:
        raise ValueError(f"sign pattern must cover blocks {-M}..{N}")
    _require_nyquist(grid, N)
    if M > 0:
        _require_resolution(grid, M)
    profiles = _split_profiles(eps, M, N)
    return tuple(sample_profile_kernel(p, grid) for p in profiles)


def _split_profiles(eps: SignPattern, M: int, N: int) -> tuple[FrequencyProfile, ...]:
    def tri(n):
        return fejer_profile(Fraction(2) ** (n - 1))

    half = Fraction(1, 2)
    k1 = [(eps[n], tri(n).shift(Fraction(2) ** n)) for n in range(-M, 0)]
    k2 = [(eps[n], tri(n).shift(Fraction(2) ** n)) for n in range(0, N + 1)]
    k3 = [(half * eps[n], tri(n).shift(3 * Fraction(2) ** (n - 1))) for n in range(-M, 0)]
    k4 = [(half * eps[n], tri(n).shift(3 * Fraction(2) ** (n - 1))) for n in range(0, N + 1)]
    return tuple(profile_combine(t) for t in (k1, k2, k3, k4))


def geometric_shifts(grid: Grid) -> np.ndarray:
    """``{delta * 2^j}`` up to a quarter of the window."""
    out = []
    y = grid.delta
    while 2 * y < grid.length / 2:
        out.append(y)
        y *= 2
    return np.array(out)


def hormander_integral(K: GridSignal, y: float) -> float:
    """``int_{|x|>2y} |K(x-y) - K(x)| dx`` on the grid (periodic shift).

    ``y`` is rounded to the nearest grid multiple.
    """
    g = K.grid
    k = int(round(y / g.delta))
    if k < 1 or 2 * k * g.delta >= g.length / 2:
        raise ValueError(f"shift {y} outside the representable range for this grid")
    x = g.x
    shifted = np.roll(K.samples, k)  # shifted[j] = K(x_j - y)
    mask = np.abs(x) > 2 * k * g.delta
    return g.delta * float(np.abs(shifted[mask] - K.samples[mask]).sum())


def hormander_sup(K: GridSignal, shifts: Sequence[float] | None = None) -> tuple[float, np.ndarray]:
    """Empirical Hormander constant ``B_emp`` over a shift family."""
    ys = geometric_shifts(K.grid) if shifts is None else np.asarray(shifts, dtype=float)
    values = np.array([hormander_integral(K, y) for y in ys])
    return float(values.max()), values
