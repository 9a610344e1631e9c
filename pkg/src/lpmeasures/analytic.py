"""Measures on the line under translation, and their analytic structure.

The line is modelled by a periodic :class:`~lpmeasures.grid.Grid`: a
:class:`LineMeasure` is a sampled density plus finitely many atoms sitting
on grid points, and the action is translation by grid multiples,

    T_t mu(A) = mu(A + t),

so the density moves by ``-t`` and an atom at ``p`` moves to ``p - t``.
Translations are then exact isometries and every trajectory
``t -> T_t mu(A)`` is an exactly computable periodic sequence.

A measure is weakly analytic when each such trajectory has no spectrum on
the negative half-line. Here that is tested bin by bin: the analytic
defect of a trajectory is its energy at ``s <= -guard`` over its total
energy, with ``guard`` two frequency bins.

:class:`FiberedMeasure` is the same model on the circle times a finite
fiber set, translating along the circle only. It supplies quasi-invariant
measures whose support is a proper subset of the space.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Callable, Sequence

import numpy as np
import scipy.fft

from .grid import Grid, GridSignal, apply_profile, frequencies, from_spectrum, spectrum
from .kernels import h_profile, mn_profile
from .littlewood_paley import SignPattern, _require_nyquist
from .transference import FiniteMeasure, RepresentationModel, _masses

__all__ = [
    "LineMeasure",
    "FiberedMeasure",
    "AnalyticityError",
    "CommutationError",
    "IsometryError",
    "AnalyticReport",
    "DecompositionPieces",
    "translate_measure",
    "set_trajectory",
    "analytic_defect",
    "default_test_sets",
    "weakly_analytic_check",
    "lp_decompose_measure",
    "orbit_continuity_modulus",
    "modulus_decrease_factors",
    "TranslationOperator",
    "identity_operator",
    "convolution_operator",
    "reflection_operator",
    "commuting_operator_check",
    "lebesgue_decompose",
    "mutually_singular",
    "absolutely_continuous",
    "random_phased_permutation",
    "isometry_preservation_check",
    "quasi_invariant_check",
    "analytic_lebesgue_parts",
]

# relative energy below which a trajectory counts as identically zero
ENERGY_FLOOR = 1e-26
# defect floor used when scaling tolerances off an exactly analytic input
DEFECT_FLOOR = 1e-12


class AnalyticityError(ValueError):
    """A weak-analyticity precondition fails."""


class CommutationError(ValueError):
    """An operator does not commute with translation."""


class IsometryError(ValueError):
    """A map is not an isometry for the total-variation norm."""


@dataclass(frozen=True, eq=False)
class LineMeasure:
    """Density on a periodic grid plus atoms ``{grid index: mass}``."""

    density: GridSignal
    atoms: dict = field(default_factory=dict)

    def __post_init__(self):
        n = self.density.grid.n
        atoms = {}
        for i, m in dict(self.atoms).items():
            if int(i) != i:
                raise ValueError(f"atom index {i!r} is not an integer")
            if m != 0:
                atoms[int(i) % n] = atoms.get(int(i) % n, 0) + complex(m)
        object.__setattr__(self, "atoms", atoms)

    @classmethod
    def from_density(cls, density: GridSignal) -> "LineMeasure":
        return cls(density, {})

    @classmethod
    def atom(cls, grid: Grid, x: float, mass: complex = 1.0) -> "LineMeasure":
        """Point mass at the grid point ``x``."""
        return cls(GridSignal.zeros(grid), {_grid_index(grid, x): mass})

    @classmethod
    def zero(cls, grid: Grid) -> "LineMeasure":
        return cls(GridSignal.zeros(grid), {})

    @property
    def grid(self) -> Grid:
        return self.density.grid

    def norm(self) -> float:
        return self.density.norm1() + float(sum(abs(m) for m in self.atoms.values()))

    def cell_masses(self) -> np.ndarray:
        """Mass per grid cell: ``delta * density`` plus the atoms."""
        w = self.grid.delta * np.array(self.density.samples)
        for i, m in self.atoms.items():
            w[i] += m
        return w

    def as_density(self) -> GridSignal:
        """Atoms smeared over one cell; used where only a density makes sense."""
        return GridSignal(self.grid, self.cell_masses() / self.grid.delta)

    def __add__(self, other: "LineMeasure") -> "LineMeasure":
        atoms = dict(self.atoms)
        for i, m in other.atoms.items():
            atoms[i] = atoms.get(i, 0) + m
        return LineMeasure(self.density + other.density, atoms)

    def __neg__(self) -> "LineMeasure":
        return self * -1

    def __sub__(self, other: "LineMeasure") -> "LineMeasure":
        return self + (-other)

    def __mul__(self, scalar) -> "LineMeasure":
        return LineMeasure(self.density * scalar, {i: m * scalar for i, m in self.atoms.items()})

    __rmul__ = __mul__


@dataclass(frozen=True, eq=False)
class FiberedMeasure:
    """Measure on ``circle x {0..m-1}``; ``fibers[k]`` lives on fiber ``k``."""

    fibers: tuple

    def __post_init__(self):
        fibers = tuple(self.fibers)
        if not fibers:
            raise ValueError("need at least one fiber")
        if any(f.grid != fibers[0].grid for f in fibers):
            raise ValueError("all fibers must share one grid")
        object.__setattr__(self, "fibers", fibers)

    @property
    def grid(self) -> Grid:
        return self.fibers[0].grid

    def norm(self) -> float:
        return sum(f.norm() for f in self.fibers)

    def __add__(self, other):
        return FiberedMeasure(tuple(a + b for a, b in zip(self.fibers, other.fibers)))

    def __sub__(self, other):
        return FiberedMeasure(tuple(a - b for a, b in zip(self.fibers, other.fibers)))

    def __mul__(self, scalar):
        return FiberedMeasure(tuple(f * scalar for f in self.fibers))

    __rmul__ = __mul__


def _grid_index(grid: Grid, x: float) -> int:
    k = (x - grid.x0) / grid.delta
    j = int(round(k))
    if abs(k - j) > 1e-9 * max(1.0, abs(k)):
        raise ValueError(f"{x} is not a grid point")
    return j % grid.n


def _shift_steps(grid: Grid, t: float) -> int:
    k = t / grid.delta
    j = int(round(k))
    if abs(k - j) > 1e-9 * max(1.0, abs(k)):
        raise ValueError(f"shift {t} is not a multiple of the grid spacing {grid.delta}")
    return j


def translate_measure(mu, t: float):
    """``T_t mu(A) = mu(A + t)``: the density moves by ``-t``, atoms too.

    ``t`` must be a multiple of the grid spacing. Fibered measures move
    along the circle coordinate only.
    """
    if isinstance(mu, FiberedMeasure):
        return FiberedMeasure(tuple(translate_measure(f, t) for f in mu.fibers))
    k = _shift_steps(mu.grid, t)
    n = mu.grid.n
    density = GridSignal(mu.grid, np.roll(mu.density.samples, -k))
    return LineMeasure(density, {(i - k) % n: m for i, m in mu.atoms.items()})


# ---------------------------------------------------------------------------
# trajectories and the analytic defect


def _interval_mask(grid: Grid, interval: tuple[float, float]) -> np.ndarray:
    a, b = interval
    if not a < b:
        raise ValueError(f"empty interval {interval}")
    x = grid.x
    return (x >= a - 1e-9 * grid.delta) & (x < b - 1e-9 * grid.delta)


def set_trajectory(mu, A) -> np.ndarray:
    """``g(t_k) = T_{t_k} mu(A)`` for ``t_k = k * delta``, ``k = 0..n-1``.

    ``A`` is an interval ``(a, b)`` (half open, grid points ``a <= x < b``)
    or, for fibered measures, a pair ``(interval, fibers)``. The
    trajectory is a periodic cross-correlation, computed by FFT.
    """
    if isinstance(mu, FiberedMeasure):
        interval, which = A
        return sum(set_trajectory(mu.fibers[k], interval) for k in which)
    w = mu.cell_masses()
    ind = _interval_mask(mu.grid, A).astype(float)
    # g(k) = sum_j 1_A(j) w(j + k)
    return scipy.fft.ifft(np.conj(scipy.fft.fft(ind)) * scipy.fft.fft(w))


def analytic_defect(g: np.ndarray, delta: float, guard_bins: int = 2) -> float | None:
    """Fraction of the energy of ``g`` at frequencies ``s <= -guard``.

    ``g`` is one period of a sequence sampled with spacing ``delta``.
    Returns None when ``g`` has no energy to classify.
    """
    g = np.asarray(g, dtype=complex)
    n = g.size
    G = scipy.fft.fft(g)
    energy = np.abs(G) ** 2
    total = float(energy.sum())
    scale = float(n * (np.abs(g) ** 2).sum())
    if total <= 0 or scale <= 0:
        return None
    s = 2 * math.pi * np.fft.fftfreq(n, delta)
    guard = guard_bins * 2 * math.pi / (n * delta)
    return float(energy[s <= -guard].sum() / total)


def _energy_floor(mu) -> float:
    return ENERGY_FLOOR * max(mu.norm(), 0.0) ** 2


def default_test_sets(grid: Grid, fibers: int | None = None) -> list:
    """A handful of intervals of different lengths and positions."""
    L = grid.length
    centre = grid.x0 + L / 2
    out = []
    for width in (grid.delta * 8, L / 64, L / 8, L / 3):
        for offset in (0.0, L / 5):
            a = centre - width / 2 + offset
            out.append((a, a + width))
    if fibers is None:
        return out
    sets = [(A, (k,)) for A in out[::2] for k in range(fibers)]
    sets += [(A, tuple(range(fibers))) for A in out[1::2]]
    return sets


@dataclass
class AnalyticReport:
    defects: list
    tol: float
    status: str
    worst: float | None = None
    sets: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        out = asdict(self)
        out["pass"] = self.passed
        return out


def weakly_analytic_check(mu, test_sets: Sequence | None = None, tol: float = 1e-6) -> AnalyticReport:
    """Analytic defect of ``t -> T_t mu(A)`` for each test set ``A``.

    ``status`` is ``"pass"`` when every defect is at most ``tol``,
    ``"fail"`` when some defect exceeds it, and ``"indeterminate"`` when no
    trajectory carries energy above the numerical floor (e.g. ``mu = 0``).
    """
    if not tol > 0:
        raise ValueError("tolerance must be positive")
    if test_sets is None:
        test_sets = default_test_sets(mu.grid, len(mu.fibers) if isinstance(mu, FiberedMeasure) else None)
    floor = _energy_floor(mu)
    defects = []
    for A in test_sets:
        g = set_trajectory(mu, A)
        if floor == 0 or float((np.abs(g) ** 2).sum()) <= floor * g.size:
            defects.append(None)
        else:
            defects.append(analytic_defect(g, mu.grid.delta))
    known = [d for d in defects if d is not None]
    if not known:
        status, worst = "indeterminate", None
    else:
        worst = max(known)
        status = "pass" if worst <= tol else "fail"
    return AnalyticReport(defects, tol, status, worst, [list(map(_jsonable, A)) for A in test_sets])


def _jsonable(v):
    if isinstance(v, tuple):
        return [_jsonable(x) for x in v]
    return float(v) if isinstance(v, (float, np.floating)) else v


def trajectory_to_csv(g: np.ndarray, delta: float, path) -> None:
    """Write ``t,re,im`` rows."""
    with open(path, "w") as fh:
        fh.write("t,re,im\n")
        for k, v in enumerate(np.asarray(g, dtype=complex).tolist()):
            fh.write(f"{k * delta!r},{v.real!r},{v.imag!r}\n")


# ---------------------------------------------------------------------------
# Littlewood-Paley decomposition of a measure


@dataclass
class DecompositionPieces:
    """``h *_T mu`` and ``m_n *_T mu`` for ``n = 0..N``, with summary norms."""

    low: LineMeasure
    blocks: list
    partial_norm: float
    reconstruction_error: float
    tail_norms: list
    piece_atom_mass: float
    signs: tuple

    def partial_sum(self, eps: SignPattern | Sequence[int]) -> LineMeasure:
        signs = eps.values if isinstance(eps, SignPattern) else tuple(eps)
        out = self.low
        for e, b in zip(signs, self.blocks):
            out = out + b * e
        return out

    def to_dict(self) -> dict:
        return {
            "N": len(self.blocks) - 1,
            "signs": list(self.signs),
            "partial_norm": self.partial_norm,
            "reconstruction_error": self.reconstruction_error,
            "tail_norms": self.tail_norms,
            "piece_atom_mass": self.piece_atom_mass,
        }


def lp_decompose_measure(mu: LineMeasure, N: int, eps: SignPattern | Sequence[int] | None = None,
                         check: bool = True, tol: float = 1e-6, test_sets=None) -> DecompositionPieces:
    """Split ``mu`` into ``h *_T mu`` and the dyadic pieces ``m_n *_T mu``.

    For the translation action ``k *_T mu = int k(t) T_{-t} mu dt`` is the
    ordinary convolution ``k * mu``, so each piece is a density (zero atom
    mass). ``reconstruction_error`` is ``||sum of all pieces - mu|| / ||mu||``
    and ``tail_norms[j] = ||sum_{n > j} m_n *_T mu||``.

    With ``check`` the weak analyticity of ``mu`` is verified first and
    :class:`AnalyticityError` raised if it fails.
    """
    if N < 0:
        raise ValueError("N must be nonnegative")
    _require_nyquist(mu.grid, N)
    if check:
        rep = weakly_analytic_check(mu, test_sets, tol)
        if rep.status != "pass":
            raise AnalyticityError(f"measure is not weakly analytic (status {rep.status}, worst defect {rep.worst})")
    signs = tuple([1] * (N + 1) if eps is None else (eps.values if isinstance(eps, SignPattern) else eps))
    if len(signs) != N + 1:
        raise ValueError(f"need {N + 1} signs, got {len(signs)}")
    f = mu.as_density()
    low = LineMeasure.from_density(apply_profile(f, h_profile()))
    blocks = [LineMeasure.from_density(apply_profile(f, mn_profile(n))) for n in range(N + 1)]
    total = low
    for b in blocks:
        total = total + b
    norm = mu.norm()
    partial = low
    for e, b in zip(signs, blocks):
        partial = partial + b * e
    tails = []
    acc = LineMeasure.zero(mu.grid)
    for b in reversed(blocks):
        tails.append(acc.norm())
        acc = acc + b
    tails.reverse()
    atom_mass = sum(sum(abs(m) for m in p.atoms.values()) for p in [low] + blocks)
    recon = (total - mu).norm() / norm if norm > 0 else 0.0
    return DecompositionPieces(low, blocks, partial.norm(), float(recon), tails, float(atom_mass), signs)


def orbit_continuity_modulus(mu, deltas: Sequence[float]) -> list[float]:
    """``omega(d) = ||T_d mu - mu||`` for each shift ``d`` (grid multiples)."""
    return [float((translate_measure(mu, d) - mu).norm()) for d in deltas]


def modulus_decrease_factors(moduli: Sequence[float]) -> list[float]:
    """Ratios ``omega(d_j) / omega(d_{j+1})`` for a halving sequence of shifts."""
    out = []
    for a, b in zip(moduli, moduli[1:]):
        out.append(math.inf if b == 0 and a > 0 else (a / b if b > 0 else 1.0))
    return out


# ---------------------------------------------------------------------------
# operators commuting with translation


@dataclass(frozen=True)
class TranslationOperator:
    """A linear map on line measures, with a name for reports."""

    name: str
    apply: Callable[[LineMeasure], LineMeasure]

    def __call__(self, mu: LineMeasure) -> LineMeasure:
        return self.apply(mu)


def identity_operator() -> TranslationOperator:
    return TranslationOperator("identity", lambda mu: mu)


def convolution_operator(kernel: GridSignal) -> TranslationOperator:
    """``mu -> kernel * mu`` (periodic); the output is a density."""

    def apply(mu: LineMeasure) -> LineMeasure:
        if mu.grid != kernel.grid:
            raise ValueError("kernel and measure live on different grids")
        out = from_spectrum(spectrum(kernel) * spectrum(mu.as_density()), mu.grid)
        return LineMeasure.from_density(out)

    return TranslationOperator("convolution", apply)


def reflection_operator() -> TranslationOperator:
    """``x -> -x`` on a grid symmetric about 0."""

    def apply(mu: LineMeasure) -> LineMeasure:
        g = mu.grid
        j0 = _grid_index(g, 0.0)
        idx = (2 * j0 - np.arange(g.n)) % g.n
        atoms = {int((2 * j0 - i) % g.n): m for i, m in mu.atoms.items()}
        return LineMeasure(GridSignal(g, mu.density.samples[idx]), atoms)

    return TranslationOperator("reflection", apply)


@dataclass
class CommutingReport:
    operator: str
    commutation_residual: float
    input_defect: float | None
    output: AnalyticReport

    @property
    def passed(self) -> bool:
        return self.output.passed

    def to_dict(self) -> dict:
        return {
            "operator": self.operator,
            "commutation_residual": self.commutation_residual,
            "input_defect": self.input_defect,
            "output": self.output.to_dict(),
            "pass": self.passed,
        }


def _probe_measures(grid: Grid, rng: np.random.Generator, count: int = 3) -> list[LineMeasure]:
    probes = []
    for _ in range(count):
        dens = GridSignal(grid, rng.normal(size=grid.n) + 1j * rng.normal(size=grid.n))
        i = int(rng.integers(grid.n))
        probes.append(LineMeasure(dens, {i: complex(rng.normal(), rng.normal())}))
    return probes


def commuting_operator_check(P: TranslationOperator, mu: LineMeasure, test_sets=None, tol: float = 1e-6,
                             probe_tol: float = 1e-9, seed: int = 0) -> CommutingReport:
    """Check that ``P`` commutes with translation, then that ``P mu`` is weakly analytic.

    Commutation is probed on random measures and a few shifts; a relative
    residual above ``probe_tol`` raises :class:`CommutationError`. ``mu``
    must pass the analyticity check at ``tol``; ``P mu`` is then checked at
    ten times ``mu``'s own worst defect (floored at a tiny constant).
    """
    grid = mu.grid
    rng = np.random.default_rng(seed)
    shifts = [grid.delta, 3 * grid.delta, grid.delta * (grid.n // 7)]
    worst = 0.0
    for probe in _probe_measures(grid, rng):
        for t in shifts:
            lhs = P(translate_measure(probe, t))
            rhs = translate_measure(P(probe), t)
            scale = max(lhs.norm(), rhs.norm(), np.finfo(float).tiny)
            worst = max(worst, (lhs - rhs).norm() / scale)
    if worst > probe_tol:
        raise CommutationError(f"{P.name} does not commute with translation (residual {worst:.3g})")
    rep_in = weakly_analytic_check(mu, test_sets, tol)
    if rep_in.status != "pass":
        raise AnalyticityError(f"input is not weakly analytic (status {rep_in.status})")
    out_tol = 10 * max(rep_in.worst, DEFECT_FLOOR)
    rep_out = weakly_analytic_check(P(mu), test_sets, out_tol)
    return CommutingReport(P.name, float(worst), rep_in.worst, rep_out)


# ---------------------------------------------------------------------------
# Lebesgue decomposition, singularity and isometries


def lebesgue_decompose(mu, sigma):
    """``mu = mu_a + mu_s`` with ``mu_a << sigma`` and ``mu_s`` singular to ``sigma``.

    Finite measures split atomwise on the support of ``sigma``. Line
    measures split their density on ``sigma``'s density support and their
    atoms on ``sigma``'s atoms. Fibered measures split fiber by fiber.
    """
    if isinstance(mu, FiberedMeasure):
        parts = [lebesgue_decompose(a, b) for a, b in zip(mu.fibers, sigma.fibers)]
        return FiberedMeasure(tuple(p[0] for p in parts)), FiberedMeasure(tuple(p[1] for p in parts))
    if isinstance(mu, LineMeasure):
        if mu.grid != sigma.grid:
            raise ValueError("measures live on different grids")
        keep = sigma.density.samples != 0
        zero = np.zeros(mu.grid.n, dtype=complex)
        dens_a = GridSignal(mu.grid, np.where(keep, mu.density.samples, zero))
        dens_s = GridSignal(mu.grid, np.where(keep, zero, mu.density.samples))
        atoms_a = {i: m for i, m in mu.atoms.items() if i in sigma.atoms}
        atoms_s = {i: m for i, m in mu.atoms.items() if i not in sigma.atoms}
        return LineMeasure(dens_a, atoms_a), LineMeasure(dens_s, atoms_s)
    m, s = _masses(mu), _masses(sigma)
    if m.shape != s.shape:
        raise ValueError("measures live on different atom sets")
    keep = s != 0
    return FiniteMeasure(np.where(keep, m, 0)), FiniteMeasure(np.where(keep, 0, m))


def _norm(mu) -> float:
    return mu.norm() if hasattr(mu, "norm") else float(np.abs(_masses(mu)).sum())


def mutually_singular(mu, sigma, rtol: float = 1e-12) -> bool:
    """Norm certificate: ``||mu + sigma|| = ||mu - sigma|| = ||mu|| + ||sigma||``."""
    a, b = _norm(mu), _norm(sigma)
    total = a + b
    plus = _norm(mu + sigma)
    minus = _norm(mu - sigma)
    return abs(plus - total) <= rtol * max(total, 1e-300) and abs(minus - total) <= rtol * max(total, 1e-300)


def absolutely_continuous(mu, sigma, atol: float = 0.0) -> bool:
    """Support inclusion on a finite atom space: ``mu_i != 0`` implies ``sigma_i != 0``."""
    m, s = np.abs(_masses(mu)), np.abs(_masses(sigma))
    return bool(np.all((m <= atol) | (s > atol)))


def random_phased_permutation(d: int, rng: np.random.Generator) -> np.ndarray:
    """A permutation matrix with unimodular entries: the general TV isometry."""
    U = np.zeros((d, d), dtype=complex)
    U[rng.permutation(d), np.arange(d)] = np.exp(2j * np.pi * rng.random(d))
    return U


@dataclass
class IsometryReport:
    singular_before: bool
    singular_after: bool
    ac_before: bool
    ac_after: bool

    @property
    def preserved(self) -> bool:
        return self.singular_before == self.singular_after and self.ac_before == self.ac_after

    def to_dict(self) -> dict:
        out = asdict(self)
        out["pass"] = self.preserved
        return out


def isometry_preservation_check(U: np.ndarray, mu, sigma, probes: int = 16, seed: int = 0,
                                rtol: float = 1e-12) -> IsometryReport:
    """Singularity and absolute-continuity verdicts before and after ``U``.

    ``U`` is first probed on basis vectors and random vectors; a change in
    total-variation norm raises :class:`IsometryError`.
    """
    U = np.asarray(U, dtype=complex)
    d = U.shape[0]
    if U.shape != (d, d):
        raise IsometryError("U must be square")
    rng = np.random.default_rng(seed)
    tests = list(np.eye(d)) + list(rng.normal(size=(probes, d)) + 1j * rng.normal(size=(probes, d)))
    for v in tests:
        a, b = np.abs(v).sum(), np.abs(U @ v).sum()
        if abs(a - b) > rtol * max(a, 1.0) * d:
            raise IsometryError(f"norm changes from {a:.6g} to {b:.6g}")
    m, s = _masses(mu), _masses(sigma)
    Um, Us = U @ m, U @ s
    return IsometryReport(
        mutually_singular(FiniteMeasure(m), FiniteMeasure(s), rtol * d),
        mutually_singular(FiniteMeasure(Um), FiniteMeasure(Us), rtol * d),
        absolutely_continuous(m, s, rtol * max(np.abs(m).max(initial=0), 1.0)),
        absolutely_continuous(Um, Us, rtol * max(np.abs(Um).max(initial=0), 1.0)),
    )


# ---------------------------------------------------------------------------
# quasi-invariance and the analytic Lebesgue parts


@dataclass
class QuasiInvarianceReport:
    passed: bool
    degenerate: bool
    failing_shifts: list

    def to_dict(self) -> dict:
        out = asdict(self)
        out["pass"] = out.pop("passed")
        return out


def _support(mu) -> tuple:
    if isinstance(mu, FiberedMeasure):
        return tuple(_support(f) for f in mu.fibers)
    return (frozenset(np.flatnonzero(mu.density.samples != 0).tolist()), frozenset(mu.atoms))


def quasi_invariant_check(sigma, action: RepresentationModel | Sequence[float] | None = None) -> QuasiInvarianceReport:
    """Is the support of ``T_t sigma`` the support of ``sigma`` for every tested ``t``?

    On a finite model ``action`` is a :class:`RepresentationModel` and every
    group element is tested. On a line or fibered measure it is a list of
    shifts (default: a geometric family of grid multiples).
    """
    if isinstance(action, RepresentationModel):
        s = _masses(sigma)
        supp = np.abs(s) > 0
        if not supp.any():
            return QuasiInvarianceReport(True, True, [])
        bad = [action.group.element(i) for i, traj in enumerate(action.trajectory(s))
               if not np.array_equal(np.abs(traj) > 1e-12 * np.abs(s).max(), supp)]
        return QuasiInvarianceReport(not bad, False, bad)

    grid = sigma.grid
    shifts = action if action is not None else [grid.delta * 2**j for j in range(int(math.log2(grid.n)))]
    base = _support(sigma)
    if sigma.norm() == 0:
        return QuasiInvarianceReport(True, True, [])
    bad = [float(t) for t in shifts if _support(translate_measure(sigma, t)) != base]
    return QuasiInvarianceReport(not bad, False, bad)


@dataclass
class LebesgueReport:
    quasi_invariant: QuasiInvarianceReport
    input: AnalyticReport
    absolutely_continuous_part: AnalyticReport
    singular_part: AnalyticReport
    singular_certificate: bool
    exact: bool

    @property
    def passed(self) -> bool:
        ok = {"pass", "indeterminate"}
        return (self.quasi_invariant.passed and self.input.passed and self.singular_certificate and self.exact
                and self.absolutely_continuous_part.status in ok and self.singular_part.status in ok)

    def to_dict(self) -> dict:
        return {
            "quasi_invariant": self.quasi_invariant.to_dict(),
            "input": self.input.to_dict(),
            "absolutely_continuous_part": self.absolutely_continuous_part.to_dict(),
            "singular_part": self.singular_part.to_dict(),
            "singular_certificate": self.singular_certificate,
            "exact": self.exact,
            "pass": self.passed,
        }


def analytic_lebesgue_parts(mu, sigma, test_sets=None, tol: float = 1e-6) -> LebesgueReport:
    """Decompose an analytic ``mu`` against a quasi-invariant ``sigma`` and test both parts.

    A part that is identically zero is reported ``indeterminate`` and counts
    as analytic (the zero measure is). Parts are checked at ten times the
    input's worst defect.
    """
    qi = quasi_invariant_check(sigma)
    if not qi.passed:
        raise AnalyticityError(f"sigma is not quasi-invariant (shifts {qi.failing_shifts[:3]} move its support)")
    rep_in = weakly_analytic_check(mu, test_sets, tol)
    if rep_in.status != "pass":
        raise AnalyticityError(f"mu is not weakly analytic (status {rep_in.status})")
    mu_a, mu_s = lebesgue_decompose(mu, sigma)
    part_tol = 10 * max(rep_in.worst, DEFECT_FLOOR)
    exact = (mu_a + mu_s - mu).norm() == 0
    return LebesgueReport(
        qi, rep_in,
        weakly_analytic_check(mu_a, test_sets, part_tol),
        weakly_analytic_check(mu_s, test_sets, part_tol),
        mutually_singular(mu_s, sigma, 1e-12),
        bool(exact),
    )
