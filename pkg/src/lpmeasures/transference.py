"""Finite models of group representations acting on spaces of measures.

A measure on a finite sigma algebra is its vector of atom masses; the
total-variation norm is the l^1 norm. A representation of a finite abelian
group ``G`` is given by one invertible ``d x d`` matrix per cyclic factor,
and ``T_t`` acts on mass vectors by matrix multiplication. The operator norm
of ``T_t`` for the total-variation norm is its maximal absolute column sum.

The transferred convolution of ``nu`` (a function on ``G``) with ``mu`` is

    nu *_T mu = sum_t nu(t) T_{-t} mu .
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import asdict, dataclass, field
from typing import Callable, Sequence

import numpy as np
import scipy.linalg
import scipy.optimize

from .group_core import FiniteAbelianGroup, GroupFunction, GroupMismatchError, convolve, dft, inverse_dft

__all__ = [
    "FiniteMeasure",
    "RepresentationModel",
    "RepresentationError",
    "SpectrumError",
    "SpectrumSet",
    "ConstantsReport",
    "TransferReport",
    "build_representation",
    "representation_from_json",
    "regular_representation",
    "random_representation",
    "uniform_bound_c",
    "sup_path_C",
    "t_convolve",
    "check_algebra",
    "fourier_coefficients",
    "spec_fourier",
    "spec_ideal",
    "lemma_ref1_checks",
    "fejer_family",
    "subspace_contraction_estimate",
    "subspace_contraction_upper",
    "verify_main_theorem",
    "vector_valued_contraction_check",
    "t_set_witness",
]


class RepresentationError(ValueError):
    """Invalid generator set; ``index`` names the offending generator."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class SpectrumError(ValueError):
    """A spectral precondition fails; ``characters`` lists the offenders."""

    def __init__(self, message: str, characters=()):
        super().__init__(message)
        self.characters = tuple(characters)


@dataclass(frozen=True, eq=False)
class FiniteMeasure:
    masses: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.masses, dtype=complex).reshape(-1)
        m.setflags(write=False)
        object.__setattr__(self, "masses", m)

    @property
    def d(self) -> int:
        return self.masses.size

    def norm(self) -> float:
        return float(np.abs(self.masses).sum())

    def __call__(self, atoms) -> complex:
        """Measure of a set of atom indices."""
        return complex(self.masses[list(atoms)].sum())

    def __add__(self, other):
        return FiniteMeasure(self.masses + _masses(other))

    def __sub__(self, other):
        return FiniteMeasure(self.masses - _masses(other))

    def __mul__(self, scalar):
        return FiniteMeasure(self.masses * scalar)

    __rmul__ = __mul__


def _masses(mu) -> np.ndarray:
    return mu.masses if isinstance(mu, FiniteMeasure) else np.asarray(mu, dtype=complex)


@dataclass(frozen=True, eq=False)
class RepresentationModel:
    """Validated representation; ``operators[i]`` is ``T_t`` for the i-th element."""

    group: FiniteAbelianGroup
    generators: tuple[np.ndarray, ...]
    operators: np.ndarray = field(repr=False)

    @property
    def d(self) -> int:
        return self.operators.shape[1]

    def T(self, t) -> np.ndarray:
        return self.operators[self.group.index(t)]

    def act(self, t, mu) -> FiniteMeasure:
        return FiniteMeasure(self.T(t) @ _masses(mu))

    def trajectory(self, mu) -> np.ndarray:
        """``(|G|, d)`` array whose row ``i`` is ``T_{t_i} mu``."""
        return self.operators @ _masses(mu)

    def to_json(self) -> str:
        gens = [[[[z.real, z.imag] for z in row] for row in g] for g in self.generators]
        return json.dumps({"factors": list(self.group.factors), "generators": gens})


def build_representation(group: FiniteAbelianGroup, generators: Sequence, atol: float = 1e-9) -> RepresentationModel:
    """Check generators and tabulate ``T_t = prod_i M_i^{t_i}``.

    Raises :class:`RepresentationError` if a generator is not square,
    singular, of the wrong order, or fails to commute with another.
    """
    gens = [np.array(g, dtype=complex) for g in generators]
    if len(gens) != len(group.factors):
        raise RepresentationError(f"need {len(group.factors)} generators, got {len(gens)}")
    d = gens[0].shape[0] if gens[0].ndim == 2 else -1
    for i, (M, n) in enumerate(zip(gens, group.factors)):
        if M.ndim != 2 or M.shape != (d, d):
            raise RepresentationError(f"generator {i} is not a {d}x{d} matrix", i)
        if np.linalg.cond(M) > 1e12:
            raise RepresentationError(f"generator {i} is singular", i)
        scale = max(1.0, np.abs(M).max())
        if not np.allclose(np.linalg.matrix_power(M, n), np.eye(d), atol=atol * scale**n):
            raise RepresentationError(f"generator {i} does not satisfy M^{n} = I", i)
    for i, j in itertools.combinations(range(len(gens)), 2):
        A, B = gens[i], gens[j]
        if not np.allclose(A @ B, B @ A, atol=atol * max(1.0, np.abs(A).max() * np.abs(B).max())):
            raise RepresentationError(f"generators {i} and {j} do not commute", j)

    powers = [[np.linalg.matrix_power(M, k) for k in range(n)] for M, n in zip(gens, group.factors)]
    ops = np.empty((group.order, d, d), dtype=complex)
    for idx, t in enumerate(group.elements()):
        T = np.eye(d, dtype=complex)
        for i, k in enumerate(t):
            T = T @ powers[i][k]
        ops[idx] = T
    ops.setflags(write=False)
    return RepresentationModel(group, tuple(gens), ops)


def representation_from_json(text: str) -> RepresentationModel:
    """Inverse of :meth:`RepresentationModel.to_json`.

    Entries may be ``[re, im]`` pairs or plain real numbers.
    """
    data = json.loads(text)
    group = FiniteAbelianGroup(tuple(data["factors"]))

    def entry(z):
        return complex(z[0], z[1]) if isinstance(z, list) else complex(z)

    gens = [np.array([[entry(z) for z in row] for row in g]) for g in data["generators"]]
    return build_representation(group, gens)


def regular_representation(group: FiniteAbelianGroup) -> RepresentationModel:
    """Translation of measures on ``G`` itself: ``T_t mu(A) = mu(A + t)``."""
    gens = []
    for i, n in enumerate(group.factors):
        e = [0] * len(group.factors)
        e[i] = 1
        P = np.zeros((group.order, group.order))
        for j, s in enumerate(group.elements()):
            # mass at s moves to s - e_i
            P[group.index(group.add(s, group.neg(e))), j] = 1
        gens.append(P)
    return build_representation(group, gens)


def random_representation(group: FiniteAbelianGroup, d: int, rng: np.random.Generator, kind: str = "similar") -> RepresentationModel:
    """Random commuting generators of the right orders.

    ``kind="similar"``: ``Q D_i Q^{-1}`` with random roots of unity on the
    diagonals and a well-conditioned random ``Q``; ``"monomial"``: random
    diagonal phases (``c = 1``).
    """
    Q = np.eye(d) + 0.35 * (rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))) / math.sqrt(d)
    Qinv = np.linalg.inv(Q)
    gens = []
    for n in group.factors:
        D = np.diag(np.exp(2j * np.pi * rng.integers(0, n, size=d) / n))
        gens.append(D if kind == "monomial" else Q @ D @ Qinv)
    return build_representation(group, gens)


def uniform_bound_c(T: RepresentationModel) -> float:
    """``max_t ||T_t||`` for the total-variation norm (max absolute column sum)."""
    return float(np.abs(T.operators).sum(axis=1).max())


@dataclass
class ConstantsReport:
    c: float
    C_upper: float
    C_lower: float
    norms: list[float]

    def to_dict(self) -> dict:
        return asdict(self)


def sup_path_C(T: RepresentationModel, samples: int = 64, seed: int = 0) -> ConstantsReport:
    """Bracket the sup-path constant.

    On a finite atom space ``||mu|| <= c ||T_u mu||`` for every ``u``, which
    certifies ``C_upper = c``. ``C_lower`` is the best sampled value of
    ``||mu|| / max_t ||T_t mu||`` over point masses and random measures.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    rng = np.random.default_rng(seed)
    c = uniform_bound_c(T)
    probes = [np.eye(T.d)[i] for i in range(T.d)]
    probes += list(rng.normal(size=(samples, T.d)) + 1j * rng.normal(size=(samples, T.d)))
    best = 0.0
    for mu in probes:
        traj = T.trajectory(mu)
        best = max(best, np.abs(mu).sum() / np.abs(traj).sum(axis=1).max())
    norms = np.abs(T.operators).sum(axis=1).max(axis=1).tolist()
    return ConstantsReport(c, c, float(best), norms)


def t_convolve(nu: GroupFunction, mu, T: RepresentationModel) -> FiniteMeasure:
    """``nu *_T mu = sum_t nu(t) T_{-t} mu``."""
    if nu.group != T.group:
        raise GroupMismatchError(f"nu lives on {nu.group.name}, T on {T.group.name}")
    traj = T.trajectory(mu)  # row i: T_{t_i} mu
    return FiniteMeasure(nu.values @ traj[T.group.negation_index])


@dataclass
class AlgebraResiduals:
    commutation: float
    associativity: float
    norm_bound_ratio: float
    passed: bool


def check_algebra(sigma: GroupFunction, nu: GroupFunction, mu, T: RepresentationModel, tol: float = 1e-10) -> AlgebraResiduals:
    """Commutation ``T_t(nu *_T mu) = nu *_T (T_t mu)`` for every ``t``,
    associativity ``sigma *_T (nu *_T mu) = (sigma * nu) *_T mu`` and the
    norm bound ``||nu *_T mu|| <= c ||nu||_1 ||mu||``."""
    mu = FiniteMeasure(_masses(mu))
    conv = t_convolve(nu, mu, T)
    scale = max(1.0, nu.norm1() * mu.norm() * uniform_bound_c(T) ** 2)
    comm = max(
        np.abs(T.operators[i] @ conv.masses - t_convolve(nu, T.operators[i] @ mu.masses, T).masses).sum()
        for i in range(T.group.order)
    ) / scale
    lhs = t_convolve(sigma, conv, T)
    rhs = t_convolve(convolve(sigma, nu), mu, T)
    assoc = np.abs(lhs.masses - rhs.masses).sum() / max(scale * sigma.norm1(), 1.0)
    denom = uniform_bound_c(T) * nu.norm1() * mu.norm()
    ratio = conv.norm() / denom if denom > 0 else 0.0
    return AlgebraResiduals(float(comm), float(assoc), float(ratio), comm <= tol and assoc <= tol and ratio <= 1 + 1e-9)


@dataclass(frozen=True)
class SpectrumSet:
    """Characters (as indices into the group's lexicographic order)."""

    group: FiniteAbelianGroup
    indices: frozenset[int]
    tol: float = 0.0
    borderline: frozenset[int] = frozenset()

    def __contains__(self, a) -> bool:
        idx = a if isinstance(a, (int, np.integer)) else self.group.index(a)
        return int(idx) in self.indices

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(sorted(self.indices))

    def __le__(self, other: "SpectrumSet") -> bool:
        return self.indices <= other.indices

    def same_set(self, other: "SpectrumSet") -> bool:
        return self.group == other.group and self.indices == other.indices

    def characters(self) -> list[tuple[int, ...]]:
        return [self.group.element(i) for i in sorted(self.indices)]

    @classmethod
    def of(cls, group: FiniteAbelianGroup, chars) -> "SpectrumSet":
        idx = frozenset(c if isinstance(c, (int, np.integer)) else group.index(c) for c in chars)
        return cls(group, frozenset(int(i) for i in idx))

    def mask(self) -> np.ndarray:
        m = np.zeros(self.group.order, dtype=bool)
        m[list(self.indices)] = True
        return m


def fourier_coefficients(mu, T: RepresentationModel) -> np.ndarray:
    """``c_chi = (1/|G|) sum_t conj(chi(t)) T_t mu`` as a ``(|G|, d)`` array."""
    traj = T.trajectory(mu)
    G = T.group
    return np.fft.fftn(traj.reshape(G.factors + (T.d,)), axes=tuple(range(len(G.factors)))).reshape(G.order, T.d) / G.order


def spec_fourier(mu, T: RepresentationModel, tol: float = 1e-9, scale: float | None = None) -> SpectrumSet:
    """Characters at which the trajectory ``t -> T_t mu`` has a nonzero coefficient.

    A coefficient counts when its l^1 norm exceeds ``tol * scale``, with
    ``scale = ||mu||`` by default; those within a factor 10 of the
    threshold are reported in ``borderline``. Pass an explicit ``scale``
    when ``mu`` is the output of a computation that may cancel to
    round-off, so that the noise is not mistaken for spectrum.
    """
    m = _masses(mu)
    norm = np.abs(m).sum() if scale is None else max(float(scale), np.abs(m).sum())
    if norm == 0:
        return SpectrumSet(T.group, frozenset(), tol)
    size = np.abs(fourier_coefficients(m, T)).sum(axis=1) / norm
    keep = frozenset(np.flatnonzero(size > tol).tolist())
    border = frozenset(np.flatnonzero((size > tol / 10) & (size < tol * 10)).tolist())
    return SpectrumSet(T.group, keep, tol, border)


def spec_ideal(mu, T: RepresentationModel, rank_tol: float = 1e-9) -> SpectrumSet:
    """Zero set of the ideal ``{f : f *_T mu = 0}``, computed from its null space.

    ``f -> f *_T mu`` is the ``d x |G|`` matrix whose columns are
    ``T_{-t} mu``. A character ``chi`` is in the zero set when
    ``g^(chi) = 0`` for every null-space vector ``g``.
    """
    G = T.group
    m = _masses(mu)
    A = T.trajectory(m)[G.negation_index].T
    if not np.any(A):
        return SpectrumSet(G, frozenset(), rank_tol)
    U, sv, Vh = np.linalg.svd(A)
    cut = rank_tol * sv[0]
    rank = int((sv > cut).sum())
    border = frozenset()
    if np.any((sv > cut / 10) & (sv < cut * 10)):
        border = frozenset(range(G.order))
    null = Vh[rank:].conj().T  # columns span the null space
    if null.shape[1] == 0:
        return SpectrumSet(G, frozenset(range(G.order)), rank_tol, border)
    # g^(chi) = sum_t g(t) conj(chi(t))
    hat = G.character_table.conj() @ null
    size = np.abs(hat).max(axis=1)
    zero = frozenset(np.flatnonzero(size <= 1e-8).tolist())
    return SpectrumSet(G, zero, rank_tol, border)


def _support(f: GroupFunction, tol: float = 1e-12) -> frozenset[int]:
    hat = dft(f)
    return frozenset(np.flatnonzero(np.abs(hat) > tol * max(1.0, np.abs(hat).max())).tolist())


def _sumset(group: FiniteAbelianGroup, A, B) -> frozenset[int]:
    table = group.addition_table
    return frozenset(int(table[a, b]) for a in A for b in B)


def fejer_family(group: FiniteAbelianGroup) -> list[GroupFunction]:
    """Triangular-transform approximate identity on a finite group.

    The ``alpha``-th member has transform ``prod_i (1 - |a_i|/(alpha+1))^+``
    with ``a_i`` the symmetric residue; the family ends with ``delta_0``,
    the sharpest member (transform identically 1).
    """
    r = group.residues
    n = np.array(group.factors)
    sym = np.where(r > n // 2, r - n, r)
    widths = range(1, max(group.factors) // 2 + 1)
    out = []
    for alpha in widths:
        hat = np.clip(1 - np.abs(sym) / (alpha + 1), 0, None).prod(axis=1)
        out.append(inverse_dft(hat, group))
    out.append(inverse_dft(np.ones(group.order), group))
    return out


@dataclass
class Ref1Report:
    max_excluded_sum: float
    excluded: int
    containment: bool
    approx_identity: list[float]
    approx_lower: float
    passed: bool


def lemma_ref1_checks(mu, T: RepresentationModel, nu: GroupFunction, g: GroupFunction, E: Sequence[int], tol: float = 1e-10) -> Ref1Report:
    """Finite-group checks of the three spectral facts about ``*_T``.

    (a) ``sum_t g(t) T_t mu(E) conj(chi(t)) = 0`` for every ``chi`` outside
    ``supp g^ + spec_T(mu)``; (b) ``spec_T(nu *_T mu)`` is contained in
    ``supp nu^ ∩ spec_T(mu)``; (c) along the Fejer family, the sharpest
    member satisfies ``||mu|| / C <= max_t ||k *_T T_t mu||``.
    """
    G = T.group
    m = _masses(mu)
    spec = spec_fourier(m, T)
    allowed = _sumset(G, _support(g), spec.indices)
    traj_E = T.trajectory(m)[:, list(E)].sum(axis=1)
    sums = G.character_table.conj() @ (g.values * traj_E)
    excluded = [i for i in range(G.order) if i not in allowed]
    scale = max(1.0, g.norm1() * np.abs(m).sum() * uniform_bound_c(T))
    worst = float(np.abs(sums[excluded]).max() / scale) if excluded else 0.0

    conv = t_convolve(nu, m, T)
    conv_scale = nu.norm1() * uniform_bound_c(T) * np.abs(m).sum()
    containment = spec_fourier(conv, T, scale=conv_scale).indices <= (_support(nu) & spec.indices)

    C = uniform_bound_c(T)
    lower = np.abs(m).sum() / C
    values = []
    traj = T.trajectory(m)
    for k in fejer_family(G):
        values.append(max(t_convolve(k, traj[i], T).norm() for i in range(G.order)))
    ok_c = lower <= values[-1] + 1e-9
    return Ref1Report(worst, len(excluded), bool(containment), values, float(lower), worst <= tol and containment and ok_c)


def subspace_contraction_estimate(nu: GroupFunction, S: SpectrumSet, samples: int = 200, seed: int = 0, ascent: bool = True) -> float:
    """Lower estimate of ``sup ||nu * f||_1 / ||f||_1`` over nonzero ``f`` with ``f^ = 0`` off ``S``.

    Candidates: single-character idempotents, the projection of each point
    mass onto ``S``, random coefficient vectors; the best is refined by a
    derivative-free local ascent.
    """
    if len(S) == 0:
        raise SpectrumError("subspace spectrum S is empty")
    G = nu.group
    idx = sorted(S.indices)
    nu_hat = dft(nu)[idx]
    rng = np.random.default_rng(seed)

    synth = G.character_table[idx].T / G.order  # f = synth @ coeffs

    def ratio(coeffs):
        nf = np.abs(synth @ coeffs).sum()
        if nf == 0:
            return 0.0
        return np.abs(synth @ (coeffs * nu_hat)).sum() / nf

    cands = [np.eye(len(idx))[i] for i in range(len(idx))]
    chars = G.character_table[idx]
    cands += [chars[:, j].conj() for j in range(G.order)]  # P_S delta_{t_j}
    cands += list(rng.normal(size=(samples, len(idx))) + 1j * rng.normal(size=(samples, len(idx))))
    scores = [ratio(c) for c in cands]
    best = int(np.argmax(scores))
    value = scores[best]
    if ascent and len(idx) > 1:
        x0 = np.concatenate([cands[best].real, cands[best].imag])
        k = len(idx)
        res = scipy.optimize.minimize(
            lambda x: -ratio(x[:k] + 1j * x[k:]), x0, method="Nelder-Mead",
            options={"maxiter": 400 * k, "xatol": 1e-10, "fatol": 1e-13},
        )
        value = max(value, -res.fun)
    return float(value)


def subspace_contraction_upper(nu: GroupFunction, S: SpectrumSet) -> float:
    """Certified upper bound ``||nu * P_S||_1``, with ``P_S`` the projection kernel."""
    G = nu.group
    hat = np.where(S.mask(), dft(nu), 0)
    return float(min(np.abs(inverse_dft(hat, G).values).sum(), nu.norm1()))


@dataclass
class TransferReport:
    group: str
    d: int
    seed: int | None
    c: float
    C_upper: float
    C_lower: float
    spec_size: int
    S_size: int
    hypothesis_estimate: float
    ratio: float
    bound: float
    passed: bool

    def to_dict(self) -> dict:
        out = asdict(self)
        out["pass"] = out.pop("passed")
        return out


def verify_main_theorem(T: RepresentationModel, S: SpectrumSet, nu: GroupFunction, mu, seed: int | None = None,
                        constants: ConstantsReport | None = None, estimate: float | None = None) -> TransferReport:
    """Check ``||nu *_T mu|| <= c^3 C ||mu||`` on one instance.

    ``spec_T(mu)`` must lie inside ``S`` (every subset of a finite dual is
    a T-set). The report records the subspace-contraction estimate for
    ``nu``; callers rescale ``nu`` by it beforehand.
    """
    m = _masses(mu)
    spec = spec_fourier(m, T)
    outside = spec.indices - S.indices
    if outside:
        raise SpectrumError("spec_T(mu) is not contained in S", [T.group.element(i) for i in sorted(outside)])
    consts = constants or sup_path_C(T, seed=0 if seed is None else seed)
    est = estimate if estimate is not None else subspace_contraction_estimate(nu, S, seed=0 if seed is None else seed)
    norm = np.abs(m).sum()
    ratio = t_convolve(nu, m, T).norm() / norm if norm > 0 else 0.0
    bound = consts.c**3 * consts.C_upper
    return TransferReport(
        T.group.name, T.d, seed, consts.c, consts.C_upper, consts.C_lower,
        len(spec), len(S), est, float(ratio), float(bound), bool(ratio <= bound * (1 + 1e-9)),
    )


@dataclass
class ContractionResult:
    lhs: float
    rhs: float
    passed: bool


def vector_valued_contraction_check(F: np.ndarray, nu: GroupFunction, S: SpectrumSet, tol: float = 1e-9) -> ContractionResult:
    """``sum_t ||(nu*F)(t)|| <= sum_t ||F(t)||`` for ``F : G -> measures``.

    ``F`` is a ``(|G|, d)`` array; every column (the trajectory of one
    atom) must have its transform inside ``S``.
    """
    G = nu.group
    F = np.asarray(F, dtype=complex).reshape(G.order, -1)
    hat = np.fft.fftn(F.reshape(G.factors + (F.shape[1],)), axes=tuple(range(len(G.factors)))).reshape(G.order, -1)
    off = ~S.mask()
    scale = max(np.abs(hat).max(), np.finfo(float).tiny)
    if np.any(np.abs(hat[off]) > 1e-10 * scale):
        bad = np.flatnonzero(off & (np.abs(hat) > 1e-10 * scale).any(axis=1))
        raise SpectrumError("atom trajectories leave S", [G.element(i) for i in bad])
    conv = np.fft.ifftn((dft(nu)[:, None] * hat).reshape(G.factors + (F.shape[1],)), axes=tuple(range(len(G.factors)))).reshape(G.order, -1)
    lhs = float(np.abs(conv).sum())
    rhs = float(np.abs(F).sum())
    return ContractionResult(lhs, rhs, lhs <= rhs * (1 + tol))


def t_set_witness(S: Callable[[np.ndarray], np.ndarray], K: np.ndarray, eps: float, resolution: float | None = None,
                  depth: int = 8, ball_samples: int = 32) -> tuple[np.ndarray, float] | None:
    """Search for an open ball ``W`` inside the ``eps``-ball with ``W + K`` in ``S``.

    ``S`` maps an ``(n, m)`` array of points to booleans; ``K`` is an
    ``(k, m)`` sample of a compact subset of ``S``. Radii ``eps/2^j`` are
    tried from large to small and, for each, grid centres (spacing
    ``resolution``, default ``eps/4``) from far to near the origin. Returns
    ``(centre, radius)`` or None; None means nothing was found at this
    resolution and says nothing about whether ``S`` is a T-set.
    """
    K = np.asarray(K, dtype=float)
    if K.ndim == 1:
        K = K[:, None]
    m = K.shape[1]
    if not np.all(S(K)):
        raise ValueError("K is not contained in S")
    step = eps / 4 if resolution is None else resolution
    k = int(math.floor(eps / step + 1e-9))
    ticks = step * np.arange(-k, k + 1)
    centres = np.array(list(itertools.product(ticks, repeat=m)))
    centres = centres[np.argsort(-np.linalg.norm(centres, axis=1), kind="stable")]
    offsets = _ball_offsets(m, ball_samples)
    for j in range(1, depth + 1):
        r = eps / 2**j
        for w in centres:
            if np.linalg.norm(w) + r >= eps * (1 - 1e-12):
                continue
            pts = (w + r * offsets)[:, None, :] + K[None, :, :]
            if np.all(S(pts.reshape(-1, m))):
                return w, r
    return None


def _ball_offsets(m: int, count: int) -> np.ndarray:
    """Points of the closed unit ball: centre, axes, boundary directions, interior."""
    pts = [np.zeros(m)]
    for i in range(m):
        e = np.zeros(m)
        e[i] = 1
        pts += [e, -e]
    if m == 1:
        pts += [np.array([u]) for u in np.linspace(-1, 1, count)]
    else:
        rng = np.random.default_rng(12345)
        dirs = rng.normal(size=(count, m))
        dirs /= np.linalg.norm(dirs, axis=1, keepdims=True)
        if m == 2:
            ang = np.linspace(0, 2 * np.pi, count, endpoint=False)
            dirs = np.stack([np.cos(ang), np.sin(ang)], axis=1)
        pts += list(dirs)
        pts += list(0.5 * dirs)
    return np.array(pts)
