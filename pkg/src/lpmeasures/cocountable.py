"""Symbolic measures on the countable/co-countable sigma algebra of the line.

No grid represents this sigma algebra, so sets and measures are kept
symbolic. A set is either ``Countable(points)`` or ``CoCountable(excluded)``
with a finite list of points, and a measure is ``c * nu + sum m_p delta_p``
where ``nu`` is 1 on co-countable and 0 on countable sets. Points are held
as exact rationals, so membership tests after translation are exact.

Translation follows the package convention ``T_t mu(A) = mu(A + t)``; an
atom at ``p`` therefore moves to ``p - t`` while ``nu`` is invariant.

The module also holds the product model ``(countable/co-countable) x
(Borel with Gaussian density)`` under the diagonal action
``(x, y) -> (x + t, y + t)``, and the Gaussian trajectory that witnesses a
non-analytic singular part.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .analytic import analytic_defect
from .grid import Grid, GridSignal

__all__ = [
    "Countable",
    "CoCountable",
    "MalformedSetError",
    "SymbolicCoCountMeasure",
    "SetTrajectory",
    "CoCountableReport",
    "cocountable_demo",
    "example_measure",
    "ProductModel",
    "gaussian_interval_mass",
    "gaussian_counterexample_trajectory",
]


class MalformedSetError(ValueError):
    """A symbolic set was built from something other than finitely many reals."""


def _points(points) -> frozenset:
    if isinstance(points, (str, bytes)) or not isinstance(points, Iterable):
        raise MalformedSetError(f"expected a finite collection of reals, got {points!r}")
    out = set()
    for p in points:
        if isinstance(p, bool) or not isinstance(p, (int, float, Fraction, np.integer, np.floating)):
            raise MalformedSetError(f"{p!r} is not a real number")
        if isinstance(p, (float, np.floating)) and not math.isfinite(p):
            raise MalformedSetError(f"{p!r} is not finite")
        out.add(Fraction(p) if not isinstance(p, np.generic) else Fraction(p.item()))
    return frozenset(out)


@dataclass(frozen=True)
class Countable:
    """The finite set ``points``; all countable sets used here are finite."""

    points: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "points", _points(self.points))

    def __contains__(self, x) -> bool:
        return Fraction(x) in self.points


@dataclass(frozen=True)
class CoCountable:
    """The complement of the finite set ``excluded``."""

    excluded: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "excluded", _points(self.excluded))

    def __contains__(self, x) -> bool:
        return Fraction(x) not in self.excluded


def _check_set(A) -> None:
    if not isinstance(A, (Countable, CoCountable)):
        raise MalformedSetError(f"expected Countable or CoCountable, got {type(A).__name__}")


@dataclass(frozen=True)
class SymbolicCoCountMeasure:
    """``diffuse * nu + sum_p atoms[p] * delta_p``."""

    diffuse: complex = 0.0
    atoms: dict = field(default_factory=dict)

    def __post_init__(self):
        atoms = {}
        for p, m in dict(self.atoms).items():
            q = next(iter(_points([p])))
            if m != 0:
                atoms[q] = atoms.get(q, 0) + complex(m)
        object.__setattr__(self, "atoms", atoms)
        object.__setattr__(self, "diffuse", complex(self.diffuse))

    def norm(self) -> float:
        """Atoms are ``nu``-null, so the variation adds up."""
        return abs(self.diffuse) + sum(abs(m) for m in self.atoms.values())

    def __call__(self, A) -> complex:
        _check_set(A)
        if isinstance(A, Countable):
            return complex(sum((m for p, m in self.atoms.items() if p in A.points), 0))
        return self.diffuse + sum((m for p, m in self.atoms.items() if p not in A.excluded), 0)

    def translate(self, t) -> "SymbolicCoCountMeasure":
        """``T_t``: ``nu`` is invariant, ``delta_p`` becomes ``delta_{p - t}``."""
        t = Fraction(t)
        return SymbolicCoCountMeasure(self.diffuse, {p - t: m for p, m in self.atoms.items()})

    def generic_value(self, A) -> complex:
        """``T_t mu(A)`` for every ``t`` outside :meth:`exceptional_times`."""
        _check_set(A)
        if isinstance(A, Countable):
            return 0j
        return self.diffuse + sum(self.atoms.values(), 0j)

    def exceptional_times(self, A) -> frozenset:
        """The finite set of ``t`` where an atom of ``T_t mu`` lands on ``A``'s point list."""
        _check_set(A)
        listed = A.points if isinstance(A, Countable) else A.excluded
        return frozenset(p - a for p in self.atoms for a in listed)


def example_measure() -> SymbolicCoCountMeasure:
    """``nu - delta_0``."""
    return SymbolicCoCountMeasure(1.0, {0: -1.0})


@dataclass
class SetTrajectory:
    set_repr: str
    generic_value: complex
    exceptional_times: list
    nonzero_times: list
    vanishes_off_exceptional: bool

    def to_dict(self) -> dict:
        return {
            "set": self.set_repr,
            "generic_value": [self.generic_value.real, self.generic_value.imag],
            "exceptional_times": [float(t) for t in self.exceptional_times],
            "nonzero_times": [float(t) for t in self.nonzero_times],
            "vanishes_off_exceptional": self.vanishes_off_exceptional,
        }


@dataclass
class CoCountableReport:
    norm: float
    alpha: float
    trajectories: list
    not_sup_path_attaining: bool
    conclusion: str

    @property
    def passed(self) -> bool:
        return self.not_sup_path_attaining

    def to_dict(self) -> dict:
        return {
            "norm": self.norm,
            "alpha": self.alpha,
            "trajectories": [t.to_dict() for t in self.trajectories],
            "not_sup_path_attaining": self.not_sup_path_attaining,
            "conclusion": self.conclusion,
            "pass": self.passed,
        }


def _set_repr(A) -> str:
    if isinstance(A, Countable):
        return "Countable(" + ",".join(str(p) for p in sorted(A.points)) + ")"
    return "CoCountable(" + ",".join(str(p) for p in sorted(A.excluded)) + ")"


def cocountable_demo(mu: SymbolicCoCountMeasure, sets: Sequence, t_samples: Sequence, alpha: float = 0.0) -> CoCountableReport:
    """Evaluate ``t -> T^alpha_t mu(A) = exp(i alpha t) mu(A + t)`` symbolically.

    For each set the samples where the trajectory is nonzero are collected
    and compared with the finite exceptional set. If every trajectory
    vanishes off a finite set while ``||mu|| > 0``, no sup path attaining
    representation can act this way: such a representation forces a
    measure whose trajectories all vanish almost everywhere to be zero.
    """
    samples = [Fraction(t) for t in _points(t_samples)]
    samples.sort()
    trajectories = []
    for A in sets:
        _check_set(A)
        exc = mu.exceptional_times(A)
        nonzero = []
        for t in samples:
            value = cmath.exp(1j * alpha * float(t)) * mu.translate(t)(A)
            if value != 0:
                nonzero.append(t)
        generic = mu.generic_value(A)
        vanish = generic == 0 and all(t in exc for t in nonzero)
        trajectories.append(SetTrajectory(_set_repr(A), generic, sorted(exc), nonzero, vanish))
    norm = mu.norm()
    verdict = norm > 0 and all(tr.vanishes_off_exceptional for tr in trajectories)
    if verdict:
        conclusion = (f"||mu|| = {norm:g} > 0 yet every tested trajectory vanishes off a finite set: "
                      "the representation is not sup path attaining")
    else:
        conclusion = "no conclusion: some trajectory is nonzero on a co-finite set of samples, or mu = 0"
    return CoCountableReport(norm, float(alpha), trajectories, verdict, conclusion)


# ---------------------------------------------------------------------------
# product model and the Gaussian trajectory

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(64)


def gaussian_interval_mass(a, b) -> np.ndarray:
    """``int_a^b exp(-y^2) dy`` by 64-point Gauss-Legendre, vectorised over ``a, b``."""
    a, b = np.broadcast_arrays(np.asarray(a, dtype=float), np.asarray(b, dtype=float))
    half = (b - a) / 2
    mid = (b + a) / 2
    y = mid[..., None] + half[..., None] * _GL_NODES
    return (half * (np.exp(-y * y) @ _GL_WEIGHTS)).astype(float)


@dataclass(frozen=True)
class ProductModel:
    """``first (x) nu_2`` with ``nu_2(B) = int_B exp(-y^2) dy``, acted on diagonally.

    ``T_t mu(A_1 x A_2) = first(A_1 + t) * nu_2(A_2 + t)``: the action is a
    product action, so rectangle values factorize.
    """

    first: SymbolicCoCountMeasure

    def evaluate(self, A1, A2: tuple[float, float], t) -> complex:
        a, b = A2
        return self.first.translate(t)(A1) * float(gaussian_interval_mass(a + float(t), b + float(t)))

    def trajectory(self, A1, A2: tuple[float, float], grid: Grid) -> GridSignal:
        """Almost-everywhere representative of ``t -> T_t mu(A_1 x A_2)`` on ``grid``.

        The first factor is replaced by its generic value, which differs
        from the true one only on the finite exceptional set.
        """
        a, b = A2
        t = grid.x
        return GridSignal(grid, self.first.generic_value(A1) * gaussian_interval_mass(a + t, b + t))

    def lebesgue_parts(self) -> tuple["ProductModel", "ProductModel"]:
        """Split against ``nu_1 (x) nu_2``: diffuse part and atomic part."""
        return (ProductModel(SymbolicCoCountMeasure(self.first.diffuse, {})),
                ProductModel(SymbolicCoCountMeasure(0, self.first.atoms)))

    def norm(self) -> float:
        return self.first.norm() * math.sqrt(math.pi)


def gaussian_counterexample_trajectory(grid: Grid | None = None) -> tuple[GridSignal, float]:
    """``g(t) = int_{-1}^1 exp(-(x - t)^2) dx`` on ``grid`` and its analytic defect.

    ``g`` is real, even and nonconstant, so its spectrum is symmetric and
    about half its energy sits at negative frequencies.
    """
    grid = grid or Grid.window(0.01, 40.0)
    t = grid.x
    g = gaussian_interval_mass(-1 - t, 1 - t)
    defect = analytic_defect(g, grid.delta)
    return GridSignal(grid, g), float(defect)
