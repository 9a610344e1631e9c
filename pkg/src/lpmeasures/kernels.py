"""Piecewise-linear frequency profiles and the dyadic kernel family.

Fourier convention on the line::

    f^(s) = int f(x) exp(-i s x) dx,    f(x) = (1/2pi) int f^(s) exp(i s x) ds

so that multiplying a kernel by ``exp(i w x)`` moves its transform to be
centred at ``w``.

Every breakpoint of the kernels used here (Fejer triangles, the dyadic
blocks ``m_n``, the low-pass ``h`` and de la Vallee Poussin trapezoids) is
a dyadic rational, and profiles store breakpoints and values as
:class:`fractions.Fraction`. Evaluating at a dyadic point is therefore
exact; float arrays go through :func:`numpy.interp`.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "FrequencyProfile",
    "fejer_profile",
    "mn_profile",
    "h_profile",
    "vdp_profile",
    "profile_combine",
    "partition_profile",
    "two_sided_profile",
    "fejer_time",
    "mn_time",
]


def _exact(v):
    if isinstance(v, (Rational, int)):
        return Fraction(v)
    if isinstance(v, float):
        # every finite float is a dyadic rational
        return Fraction(v)
    raise TypeError(f"cannot represent {v!r} exactly")


@dataclass(frozen=True)
class FrequencyProfile:
    """Compactly supported continuous piecewise-linear function of frequency.

    ``breakpoints`` is a tuple of ``(s, value)`` pairs with strictly
    increasing ``s``. The profile vanishes outside ``[s_first, s_last]`` and
    is linear between consecutive breakpoints. End values must be zero so
    the profile is continuous.
    """

    breakpoints: tuple[tuple[Fraction, Fraction], ...] = ()

    def __post_init__(self):
        pts = tuple((_exact(s), _exact(v)) for s, v in self.breakpoints)
        for (s0, _), (s1, _) in zip(pts, pts[1:]):
            if not s0 < s1:
                raise ValueError("breakpoints must be strictly increasing")
        if pts and (pts[0][1] != 0 or pts[-1][1] != 0):
            raise ValueError("profile must vanish at its first and last breakpoint")
        object.__setattr__(self, "breakpoints", pts)

    @property
    def support(self) -> tuple[Fraction, Fraction] | None:
        if not self.breakpoints:
            return None
        return self.breakpoints[0][0], self.breakpoints[-1][0]

    @property
    def radius(self) -> float:
        """Largest ``|s|`` in the support (0 for the empty profile)."""
        if not self.breakpoints:
            return 0.0
        lo, hi = self.support
        return float(max(abs(lo), abs(hi)))

    def __call__(self, s):
        if isinstance(s, (Rational, int)):
            return self.exact(s)
        return self.evaluate(s)

    def exact(self, s) -> Fraction:
        s = _exact(s)
        pts = self.breakpoints
        if not pts or s < pts[0][0] or s > pts[-1][0]:
            return Fraction(0)
        xs = [p[0] for p in pts]
        i = bisect.bisect_left(xs, s)
        if xs[i] == s:
            return pts[i][1]
        (s0, v0), (s1, v1) = pts[i - 1], pts[i]
        return v0 + (v1 - v0) * (s - s0) / (s1 - s0)

    def evaluate(self, s) -> np.ndarray:
        s = np.asarray(s, dtype=float)
        if not self.breakpoints:
            return np.zeros_like(s)
        xs = np.array([float(p[0]) for p in self.breakpoints])
        vs = np.array([float(p[1]) for p in self.breakpoints])
        return np.interp(s, xs, vs, left=0.0, right=0.0)

    def shift(self, center) -> "FrequencyProfile":
        """Profile of ``exp(i c x) k(x)``: breakpoints moved by ``c``."""
        c = _exact(center)
        return FrequencyProfile(tuple((s + c, v) for s, v in self.breakpoints))

    def scale(self, coefficient) -> "FrequencyProfile":
        return profile_combine([(coefficient, self)])

    def sup_abs(self) -> Fraction:
        """Exact ``sup |p|``; attained at a breakpoint."""
        return max((abs(v) for _, v in self.breakpoints), default=Fraction(0))

    def to_csv(self, path, dense: int = 0) -> None:
        """Write ``s,value`` rows at the breakpoints, plus ``dense`` extra samples."""
        rows = [(float(s), float(v)) for s, v in self.breakpoints]
        if dense and self.breakpoints:
            lo, hi = self.support
            grid = np.linspace(float(lo), float(hi), dense)
            rows.extend(zip(grid.tolist(), self.evaluate(grid).tolist()))
            rows.sort()
        with open(path, "w") as fh:
            fh.write("s,value\n")
            for s, v in rows:
                fh.write(f"{s!r},{v!r}\n")


def profile_combine(terms: Iterable[tuple[object, FrequencyProfile]]) -> FrequencyProfile:
    """Exact linear combination ``sum c_j p_j`` on the merged breakpoint set."""
    terms = [(_exact(c), p) for c, p in terms]
    knots = sorted({s for _, p in terms for s, _ in p.breakpoints})
    if not knots:
        return FrequencyProfile()
    values = [sum((c * p.exact(s) for c, p in terms), Fraction(0)) for s in knots]
    pts = list(zip(knots, values))
    # interior knots collinear with their neighbours carry no information
    keep = [pts[0]]
    for (s0, v0), (s, v), (s1, v1) in zip(pts, pts[1:], pts[2:]):
        if v0 + (v1 - v0) * (s - s0) / (s1 - s0) != v:
            keep.append((s, v))
    if len(pts) > 1:
        keep.append(pts[-1])
    while len(keep) > 1 and keep[1][1] == 0 and keep[0][1] == 0:
        keep.pop(0)
    while len(keep) > 1 and keep[-2][1] == 0 and keep[-1][1] == 0:
        keep.pop()
    if all(v == 0 for _, v in keep):
        return FrequencyProfile()
    return FrequencyProfile(tuple(keep))


def fejer_profile(a) -> FrequencyProfile:
    """Triangle ``(1 - |s|/a)^+``, the transform of the Fejer kernel ``k_a``."""
    if not a > 0:
        raise ValueError(f"Fejer width must be positive, got {a}")
    a = _exact(a)
    return FrequencyProfile(((-a, 0), (0, 1), (a, 0)))


def mn_profile(n: int) -> FrequencyProfile:
    """Transform of the dyadic block ``m_n``, supported on ``[2^(n-1), 2^(n+1)]``."""
    p = Fraction(2) ** n
    return FrequencyProfile(((p / 2, 0), (p, 1), (3 * p / 2, Fraction(1, 2)), (2 * p, 0)))


def h_profile() -> FrequencyProfile:
    """Low-pass transform: 1 on ``[-1/2, 1/2]``, 0 outside ``[-1, 1]``."""
    half = Fraction(1, 2)
    return FrequencyProfile(((-1, 0), (-half, 1), (half, 1), (1, 0)))


def vdp_profile(N: int) -> FrequencyProfile:
    """de la Vallee Poussin trapezoid of order ``2^N``."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    p = Fraction(2) ** N
    return FrequencyProfile(((-2 * p, 0), (-p, 1), (p, 1), (2 * p, 0)))


def partition_profile(signs: Sequence[int] | None, N: int) -> FrequencyProfile:
    """``h^ + sum_{n=0}^N eps_n m_n^`` (all signs +1 when ``signs`` is None)."""
    signs = [1] * (N + 1) if signs is None else list(signs)
    if len(signs) != N + 1:
        raise ValueError(f"need {N + 1} signs, got {len(signs)}")
    return profile_combine([(1, h_profile())] + [(e, mn_profile(n)) for n, e in enumerate(signs)])


def two_sided_profile(signs: Sequence[int] | None, M: int, N: int) -> FrequencyProfile:
    """``sum_{n=-M}^N eps_n m_n^``; ``signs[0]`` is the sign of block ``-M``."""
    count = M + N + 1
    signs = [1] * count if signs is None else list(signs)
    if len(signs) != count:
        raise ValueError(f"need {count} signs, got {len(signs)}")
    return profile_combine([(e, mn_profile(n)) for n, e in zip(range(-M, N + 1), signs)])


def fejer_time(a: float, x):
    """Fejer kernel ``k_a(x) = (a / 2pi) (sin(a x / 2) / (a x / 2))^2``."""
    if not a > 0:
        raise ValueError(f"Fejer width must be positive, got {a}")
    x = np.asarray(x, dtype=float)
    # np.sinc(u) = sin(pi u)/(pi u)
    out = (a / (2 * math.pi)) * np.sinc(a * x / (2 * math.pi)) ** 2
    return out if out.ndim else float(out)


def mn_time(n: int, x):
    """``m_n(x) = exp(i 2^n x) k_{2^(n-1)}(x) + 1/2 exp(i 3 2^(n-1) x) k_{2^(n-1)}(x)``."""
    a = 2.0 ** (n - 1)
    x = np.asarray(x, dtype=float)
    k = fejer_time(a, x)
    out = (np.exp(1j * 2.0**n * x) + 0.5 * np.exp(1j * 3 * a * x)) * k
    return out if out.ndim else complex(out)
