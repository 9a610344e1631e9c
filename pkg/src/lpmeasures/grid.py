"""Uniformly sampled signals on a window of the real line.

A :class:`Grid` is the point set ``x_j = x0 + j*delta``, ``j = 0..n-1``.
Spectral operations treat the window as one period of length ``n*delta``;
the discrete transform used throughout is the Riemann sum

    f^(s_k) = delta * sum_j f_j exp(-i s_k x_j),   s_k = 2pi k / (n delta)

so multiplying by a band-limited profile and inverting is an exact periodic
convolution with the periodized kernel. Linear (non-periodic) convolution of
two signals is :func:`convolve_grid`, which zero-pads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
import scipy.fft

from .kernels import FrequencyProfile

__all__ = [
    "Grid",
    "GridSignal",
    "AliasingError",
    "WraparoundError",
    "DEFAULT_GRID",
    "frequencies",
    "spectrum",
    "from_spectrum",
    "apply_profile",
    "sample_profile_kernel",
    "convolve_grid",
    "spectral_projection",
    "make_h1_test",
]


class AliasingError(ValueError):
    """A frequency profile reaches past the Nyquist frequency of the grid."""


class WraparoundError(ValueError):
    """A convolution does not fit the requested output window."""


@dataclass(frozen=True)
class Grid:
    x0: float
    delta: float
    n: int

    def __post_init__(self):
        if not self.delta > 0:
            raise ValueError(f"grid spacing must be positive, got {self.delta}")
        if self.n < 1:
            raise ValueError("grid needs at least one point")

    @classmethod
    def centered(cls, delta: float, n: int) -> "Grid":
        """Grid on ``[-n*delta/2, n*delta/2)``; contains 0 when ``n`` is even."""
        return cls(-(n // 2) * delta, delta, n)

    @classmethod
    def window(cls, delta: float, half_width: float) -> "Grid":
        return cls.centered(delta, int(round(2 * half_width / delta)))

    @property
    def x(self) -> np.ndarray:
        return self.x0 + self.delta * np.arange(self.n)

    @property
    def length(self) -> float:
        return self.n * self.delta

    @property
    def nyquist(self) -> float:
        return math.pi / self.delta

    @property
    def resolution(self) -> float:
        return 2 * math.pi / self.length

    def frequencies(self) -> np.ndarray:
        return frequencies(self)

    def halved(self) -> "Grid":
        """Same window, half the spacing."""
        return Grid(self.x0, self.delta / 2, 2 * self.n)

    def to_dict(self) -> dict:
        return {"x0": self.x0, "delta": self.delta, "n": self.n}


# Desk-scale default: room for dyadic blocks with 2^(n+1) < pi/0.02, i.e. n <= 6.
DEFAULT_GRID = Grid.window(0.02, 160.0)


@dataclass(frozen=True, eq=False)
class GridSignal:
    grid: Grid
    samples: np.ndarray = field(repr=False)

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=complex).reshape(-1)
        if samples.size != self.grid.n:
            raise ValueError(f"expected {self.grid.n} samples, got {samples.size}")
        samples.setflags(write=False)
        object.__setattr__(self, "samples", samples)

    @classmethod
    def zeros(cls, grid: Grid) -> "GridSignal":
        return cls(grid, np.zeros(grid.n, dtype=complex))

    @classmethod
    def from_function(cls, grid: Grid, fn: Callable[[np.ndarray], np.ndarray]) -> "GridSignal":
        return cls(grid, fn(grid.x))

    @property
    def x(self) -> np.ndarray:
        return self.grid.x

    def norm1(self) -> float:
        return self.grid.delta * float(np.abs(self.samples).sum())

    def norm2(self) -> float:
        return math.sqrt(self.grid.delta * float((np.abs(self.samples) ** 2).sum()))

    def __add__(self, other: "GridSignal") -> "GridSignal":
        _check_grid(self.grid, other.grid)
        return GridSignal(self.grid, self.samples + other.samples)

    def __sub__(self, other: "GridSignal") -> "GridSignal":
        _check_grid(self.grid, other.grid)
        return GridSignal(self.grid, self.samples - other.samples)

    def __mul__(self, scalar) -> "GridSignal":
        return GridSignal(self.grid, self.samples * scalar)

    __rmul__ = __mul__

    def __neg__(self) -> "GridSignal":
        return GridSignal(self.grid, -self.samples)

    def to_csv(self, path) -> None:
        with open(path, "w") as fh:
            fh.write("x,re,im\n")
            for x, v in zip(self.x.tolist(), self.samples.tolist()):
                fh.write(f"{x!r},{v.real!r},{v.imag!r}\n")


def _check_grid(a: Grid, b: Grid) -> None:
    if a != b:
        raise ValueError(f"signals live on different grids: {a} vs {b}")


def frequencies(grid: Grid) -> np.ndarray:
    """Angular frequency of each FFT bin, in numpy's bin order."""
    return 2 * math.pi * np.fft.fftfreq(grid.n, grid.delta)


def spectrum(f: GridSignal) -> np.ndarray:
    g = f.grid
    return g.delta * np.exp(-1j * frequencies(g) * g.x0) * scipy.fft.fft(f.samples)


def from_spectrum(values: np.ndarray, grid: Grid) -> GridSignal:
    values = np.asarray(values, dtype=complex)
    return GridSignal(grid, scipy.fft.ifft(values * np.exp(1j * frequencies(grid) * grid.x0)) / grid.delta)


def _check_nyquist(p: FrequencyProfile, grid: Grid) -> None:
    if p.radius >= grid.nyquist:
        raise AliasingError(
            f"profile support radius {p.radius:g} reaches Nyquist {grid.nyquist:g} (delta={grid.delta:g})"
        )


def apply_profile(f: GridSignal, p: FrequencyProfile) -> GridSignal:
    """Periodic convolution of ``f`` with the kernel whose transform is ``p``."""
    _check_nyquist(p, f.grid)
    return from_spectrum(spectrum(f) * p.evaluate(frequencies(f.grid)), f.grid)


def sample_profile_kernel(p: FrequencyProfile, grid: Grid) -> GridSignal:
    """Time-domain samples of the (periodized) kernel with transform ``p``."""
    _check_nyquist(p, grid)
    return from_spectrum(p.evaluate(frequencies(grid)), grid)


def convolve_grid(f: GridSignal, g: GridSignal, out: Grid | None = None, rtol: float = 1e-12) -> GridSignal:
    """Linear convolution ``(f*g)(x) = delta * sum_j f_j g(x - x_j)``.

    The full result lives on a grid of ``n_f + n_g - 1`` points starting at
    ``x0_f + x0_g``. With ``out`` the result is cropped to that grid, which
    must be aligned with the full one; mass falling outside raises
    :class:`WraparoundError`.
    """
    if not math.isclose(f.grid.delta, g.grid.delta, rel_tol=1e-12):
        raise ValueError(f"grid spacings differ: {f.grid.delta} vs {g.grid.delta}")
    delta = f.grid.delta
    n_full = f.grid.n + g.grid.n - 1
    nfft = scipy.fft.next_fast_len(n_full)
    full = scipy.fft.ifft(scipy.fft.fft(f.samples, nfft) * scipy.fft.fft(g.samples, nfft))[:n_full] * delta
    full_grid = Grid(f.grid.x0 + g.grid.x0, delta, n_full)
    if out is None:
        return GridSignal(full_grid, full)

    if not math.isclose(out.delta, delta, rel_tol=1e-12):
        raise ValueError("output grid spacing differs from the inputs")
    offset = (out.x0 - full_grid.x0) / delta
    k = int(round(offset))
    if abs(offset - k) > 1e-6:
        raise ValueError("output grid is not aligned with the convolution grid")
    result = np.zeros(out.n, dtype=complex)
    lo, hi = max(k, 0), min(k + out.n, n_full)
    if lo < hi:
        result[lo - k : hi - k] = full[lo:hi]
    total = np.abs(full).sum()
    lost = total - np.abs(full[lo:hi]).sum() if lo < hi else total
    if lost > rtol * max(total, np.finfo(float).tiny):
        raise WraparoundError(f"convolution mass {lost * delta:.3g} falls outside the output window")
    return GridSignal(out, result)


def spectral_projection(f: GridSignal, S: Callable[[np.ndarray], np.ndarray]) -> GridSignal:
    """Zero every frequency bin ``s`` with ``S(s)`` false."""
    s = frequencies(f.grid)
    mask = np.asarray(S(s), dtype=bool)
    return from_spectrum(np.where(mask, spectrum(f), 0), f.grid)


def make_h1_test(seed: int, band: tuple[float, float], grid: Grid, n_bumps: int = 4, spread: float = 4.0) -> GridSignal:
    """Random smooth signal with transform supported inside ``band``.

    The transform is a raised-cosine envelope in log-frequency times a
    random phase field ``sum_k c_k exp(-i s x_k)``, so the signal is a sum
    of a few shifted copies of one localized wave packet. The result is
    normalized to ``||f||_1 = 1`` and has no energy at ``s <= 0``.
    """
    lo, hi = map(float, band)
    if not 0 < lo < hi:
        raise ValueError(f"band must satisfy 0 < lo < hi, got {band}")
    if hi >= grid.nyquist:
        raise AliasingError(f"band top {hi:g} reaches Nyquist {grid.nyquist:g}")
    rng = np.random.default_rng(seed)
    s = frequencies(grid)
    inside = (s > lo) & (s < hi)
    u = np.zeros_like(s)
    u[inside] = np.log(s[inside] / lo) / math.log(hi / lo)
    envelope = np.where(inside, np.sin(math.pi * u) ** 2, 0.0)
    centers = rng.uniform(-spread, spread, n_bumps)
    coeffs = rng.normal(size=n_bumps) + 1j * rng.normal(size=n_bumps)
    phase = (coeffs[None, :] * np.exp(-1j * s[:, None] * centers[None, :])).sum(axis=1)
    f = from_spectrum(envelope * phase, grid)
    return f * (1.0 / f.norm1())
