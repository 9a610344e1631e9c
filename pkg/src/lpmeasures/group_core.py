"""Finite abelian groups, their characters and the L^1 convolution algebra.

A finite abelian group is stored as the list of cyclic orders of its
factors, ``Z_{N_1} x ... x Z_{N_k}``. Elements and characters are both
indexed by residue tuples and enumerated in lexicographic order, so a
function on the group is a flat complex vector of length ``|G|``.

Haar measure is counting measure, hence ``||delta_t||_1 = 1`` and
measures on ``G`` coincide with functions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

__all__ = [
    "FiniteAbelianGroup",
    "GroupFunction",
    "GroupMismatchError",
    "dft",
    "inverse_dft",
    "convolve",
    "idempotent",
    "delta",
]


class GroupMismatchError(ValueError):
    """Raised when two objects live on different groups."""


@dataclass(frozen=True)
class FiniteAbelianGroup:
    factors: tuple[int, ...]

    def __post_init__(self):
        factors = tuple(int(n) for n in self.factors)
        if not factors:
            raise ValueError("a group needs at least one cyclic factor")
        if any(n < 1 for n in factors):
            raise ValueError(f"cyclic orders must be >= 1, got {factors}")
        object.__setattr__(self, "factors", factors)

    @classmethod
    def cyclic(cls, n: int) -> "FiniteAbelianGroup":
        return cls((n,))

    @classmethod
    def parse(cls, text: str) -> "FiniteAbelianGroup":
        """Parse names like ``"Z8"`` or ``"Z2xZ4"``."""
        parts = text.replace(" ", "").upper().split("X")
        try:
            return cls(tuple(int(p.lstrip("Z")) for p in parts))
        except ValueError:
            raise ValueError(f"cannot parse group name {text!r}") from None

    @cached_property
    def order(self) -> int:
        return int(np.prod(self.factors))

    @property
    def name(self) -> str:
        return "x".join(f"Z{n}" for n in self.factors)

    def elements(self) -> Iterator[tuple[int, ...]]:
        return itertools.product(*(range(n) for n in self.factors))

    @cached_property
    def residues(self) -> np.ndarray:
        """All elements as an ``(|G|, k)`` integer array, lexicographic."""
        return np.array(list(self.elements()), dtype=np.int64).reshape(self.order, len(self.factors))

    def index(self, element: Sequence[int]) -> int:
        element = tuple(int(r) % n for r, n in zip(element, self.factors))
        return int(np.ravel_multi_index(element, self.factors))

    def element(self, index: int) -> tuple[int, ...]:
        return tuple(int(r) for r in np.unravel_index(index, self.factors))

    def add(self, s, t) -> tuple[int, ...]:
        return tuple((a + b) % n for a, b, n in zip(s, t, self.factors))

    def neg(self, t) -> tuple[int, ...]:
        return tuple((-a) % n for a, n in zip(t, self.factors))

    @cached_property
    def negation_index(self) -> np.ndarray:
        """``negation_index[i]`` is the index of ``-t_i``."""
        neg = (-self.residues) % np.array(self.factors)
        return np.ravel_multi_index(neg.T, self.factors)

    @cached_property
    def addition_table(self) -> np.ndarray:
        """``addition_table[i, j]`` is the index of ``t_i + t_j``."""
        r = self.residues
        s = (r[:, None, :] + r[None, :, :]) % np.array(self.factors)
        return np.ravel_multi_index(np.moveaxis(s, -1, 0), self.factors)

    @cached_property
    def character_table(self) -> np.ndarray:
        """``X[a, t] = chi_a(t) = exp(2 pi i sum_i a_i t_i / N_i)``."""
        r = self.residues.astype(float)
        phase = (r[:, None, :] * r[None, :, :] / np.array(self.factors, dtype=float)).sum(-1)
        return np.exp(2j * np.pi * phase)

    def character(self, a: Sequence[int]) -> np.ndarray:
        """Values of the character with residues ``a`` at every element."""
        return self.character_table[self.index(a)]


@dataclass(frozen=True, eq=False)
class GroupFunction:
    """A complex function (equivalently a measure) on a finite abelian group."""

    group: FiniteAbelianGroup
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        values = np.asarray(self.values, dtype=complex).reshape(-1)
        if values.size != self.group.order:
            raise ValueError(f"expected {self.group.order} values, got {values.size}")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    def norm1(self) -> float:
        return float(np.abs(self.values).sum())

    def __add__(self, other: "GroupFunction") -> "GroupFunction":
        _check_same(self.group, other.group)
        return GroupFunction(self.group, self.values + other.values)

    def __sub__(self, other: "GroupFunction") -> "GroupFunction":
        _check_same(self.group, other.group)
        return GroupFunction(self.group, self.values - other.values)

    def __mul__(self, scalar) -> "GroupFunction":
        return GroupFunction(self.group, self.values * scalar)

    __rmul__ = __mul__

    def translate(self, a: Sequence[int]) -> "GroupFunction":
        """``(delta_a * f)(t) = f(t - a)``."""
        G = self.group
        idx = [G.index(G.add(t, G.neg(a))) for t in G.elements()]
        return GroupFunction(G, self.values[idx])


def _check_same(g1: FiniteAbelianGroup, g2: FiniteAbelianGroup) -> None:
    if g1 != g2:
        raise GroupMismatchError(f"group mismatch: {g1.name} vs {g2.name}")


def delta(group: FiniteAbelianGroup, t: Sequence[int] | None = None) -> GroupFunction:
    values = np.zeros(group.order, dtype=complex)
    values[0 if t is None else group.index(t)] = 1.0
    return GroupFunction(group, values)


def dft(f: GroupFunction) -> np.ndarray:
    """Fourier transform ``f^(chi) = sum_t f(t) conj(chi(t))``.

    The result is indexed by characters in the same lexicographic order as
    the group elements.
    """
    G = f.group
    return np.fft.fftn(f.values.reshape(G.factors)).reshape(-1)


def inverse_dft(coefficients: np.ndarray, group: FiniteAbelianGroup) -> GroupFunction:
    coefficients = np.asarray(coefficients, dtype=complex)
    return GroupFunction(group, np.fft.ifftn(coefficients.reshape(group.factors)).reshape(-1))


def convolve(f: GroupFunction, g: GroupFunction) -> GroupFunction:
    """``(f*g)(t) = sum_s f(s) g(t - s)``."""
    _check_same(f.group, g.group)
    return inverse_dft(dft(f) * dft(g), f.group)


def idempotent(group: FiniteAbelianGroup, a: Sequence[int]) -> GroupFunction:
    """The minimal idempotent ``e_chi = chi / |G|`` whose transform is ``1_{chi}``."""
    return GroupFunction(group, group.character(a) / group.order)
