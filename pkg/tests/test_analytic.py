import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from lpmeasures.analytic import (
    AnalyticityError,
    CommutationError,
    FiberedMeasure,
    IsometryError,
    LineMeasure,
    absolutely_continuous,
    analytic_defect,
    analytic_lebesgue_parts,
    commuting_operator_check,
    convolution_operator,
    identity_operator,
    isometry_preservation_check,
    lebesgue_decompose,
    lp_decompose_measure,
    modulus_decrease_factors,
    mutually_singular,
    orbit_continuity_modulus,
    quasi_invariant_check,
    random_phased_permutation,
    reflection_operator,
    set_trajectory,
    translate_measure,
    trajectory_to_csv,
    weakly_analytic_check,
)
from lpmeasures.grid import Grid, GridSignal, frequencies, from_spectrum, make_h1_test
from lpmeasures.kernels import fejer_profile
from lpmeasures.littlewood_paley import unconditional_ratio
from lpmeasures.transference import FiniteMeasure, random_representation, regular_representation
from lpmeasures.group_core import FiniteAbelianGroup

SMALL = Grid.window(0.05, 40.0)
GRID = Grid.centered(2.0**-6, 2**14)  # window 256, Nyquist ~201


def random_line_measure(grid, rng, atoms=2):
    dens = GridSignal(grid, rng.normal(size=grid.n) + 1j * rng.normal(size=grid.n))
    return LineMeasure(dens, {int(i): complex(rng.normal(), rng.normal()) for i in rng.integers(0, grid.n, atoms)})


def modulated_fejer(grid, omega=3):
    return LineMeasure.from_density(from_spectrum(fejer_profile(1).shift(omega).evaluate(frequencies(grid)), grid))


def analytic_density(seed, grid=GRID, band=(1.0, 8.0)):
    return LineMeasure.from_density(make_h1_test(seed, band, grid))


def bin_scan_defect(g, delta):
    """Negative-frequency energy fraction by an explicit DFT sum."""
    n = len(g)
    k = np.arange(n)
    G = np.array([(g * np.exp(-2j * np.pi * j * k / n)).sum() for j in range(n)])
    s = 2 * np.pi * np.where(k < (n + 1) // 2, k, k - n) / (n * delta)
    guard = 2 * 2 * np.pi / (n * delta)
    e = np.abs(G) ** 2
    return e[s <= -guard].sum() / e.sum()


class TestTranslation:
    def test_zero_shift(self):
        mu = random_line_measure(SMALL, np.random.default_rng(0))
        out = translate_measure(mu, 0.0)
        assert np.array_equal(out.density.samples, mu.density.samples) and out.atoms == mu.atoms

    def test_atom_moves_left(self):
        mu = LineMeasure.atom(SMALL, 0.0)
        out = translate_measure(mu, SMALL.delta)
        (i,) = out.atoms
        assert SMALL.x[i] == pytest.approx(-SMALL.delta)

    def test_set_convention(self):
        # T_t mu(A) = mu(A + t)
        mu = LineMeasure.atom(SMALL, 1.0, 2.0)
        g = set_trajectory(mu, (0.5, 0.6))
        k = int(round(0.45 / SMALL.delta))
        assert abs(g[k] - 2.0) < 1e-12 and abs(g[0]) < 1e-12

    def test_off_grid_shift(self):
        with pytest.raises(ValueError):
            translate_measure(LineMeasure.zero(SMALL), 0.013)

    @settings(max_examples=20, deadline=None)
    @given(st.integers(0, 2**32 - 1), st.integers(-2000, 2000))
    def test_isometry(self, seed, k):
        mu = random_line_measure(SMALL, np.random.default_rng(seed))
        assert translate_measure(mu, k * SMALL.delta).norm() == pytest.approx(mu.norm(), rel=1e-12)

    def test_norm_formula(self):
        dens = GridSignal(SMALL, np.full(SMALL.n, 0.5))
        mu = LineMeasure(dens, {3: -2.0, 10: 1j})
        assert mu.norm() == pytest.approx(0.5 * SMALL.length + 3)


class TestWeakAnalyticity:
    def test_modulated_fejer(self):
        mu = modulated_fejer(SMALL)
        rep = weakly_analytic_check(mu, tol=1e-4)
        assert rep.passed and rep.worst <= 1e-4

    def test_defect_against_bin_scan(self):
        mu = LineMeasure.from_density(GridSignal.from_function(Grid.window(0.1, 10.0), lambda x: np.exp(-x * x) * (1 + 0.3 * x)))
        g = set_trajectory(mu, (-1.0, 2.0))
        assert analytic_defect(g, 0.1) == pytest.approx(bin_scan_defect(g, 0.1), rel=1e-10)

    def test_gaussian_density_fails(self):
        mu = LineMeasure.from_density(GridSignal.from_function(SMALL, lambda x: np.exp(-x * x)))
        rep = weakly_analytic_check(mu)
        assert rep.status == "fail" and 0.4 < rep.worst < 0.5

    def test_zero_is_indeterminate(self):
        assert weakly_analytic_check(LineMeasure.zero(SMALL)).status == "indeterminate"

    def test_atom_fails(self):
        rep = weakly_analytic_check(LineMeasure.atom(SMALL, 0.0))
        assert rep.status == "fail" and rep.worst == pytest.approx(0.5, abs=0.02)

    def test_csv(self, tmp_path):
        g = set_trajectory(modulated_fejer(SMALL), (-1.0, 1.0))
        trajectory_to_csv(g, SMALL.delta, tmp_path / "t.csv")
        lines = (tmp_path / "t.csv").read_text().splitlines()
        assert lines[0] == "t,re,im" and len(lines) == SMALL.n + 1


class TestDecomposition:
    def test_reconstruction(self):
        mu = analytic_density(0)
        pieces = lp_decompose_measure(mu, 4)
        assert pieces.reconstruction_error <= 1e-3
        assert pieces.piece_atom_mass == 0
        assert pieces.tail_norms[-1] == 0 and pieces.tail_norms[0] > 0

    def test_sign_flip_triangle(self):
        mu = analytic_density(1)
        N = 4
        pieces = lp_decompose_measure(mu, N)
        eps = [1, -1, 1, 1, -1]
        base = pieces.partial_sum(eps).norm()
        for n in range(N + 1):
            flipped = list(eps)
            flipped[n] *= -1
            change = abs(pieces.partial_sum(flipped).norm() - base)
            assert change <= 2 * pieces.blocks[n].norm() * (1 + 1e-12)

    def test_atom_rejected(self):
        with pytest.raises(AnalyticityError):
            lp_decompose_measure(LineMeasure.atom(GRID, 0.0), 4)

    def test_unconditional_surrogate(self):
        rng = np.random.default_rng(2)
        f = make_h1_test(3, (1.0, 8.0), GRID)
        a_emp = unconditional_ratio(f, 4, 50, seed=3).max_ratio
        pieces = lp_decompose_measure(LineMeasure.from_density(f), 4)
        worst = max(pieces.partial_sum(rng.choice((-1, 1), 5).tolist()).norm() for _ in range(100))
        assert worst <= a_emp * 1.05 * f.norm1()


class TestOrbitModulus:
    def test_atom(self):
        mu = LineMeasure.atom(SMALL, 0.0, 1.5j)
        om = orbit_continuity_modulus(mu, [SMALL.delta, 4 * SMALL.delta])
        assert om == [pytest.approx(3.0), pytest.approx(3.0)]
        assert orbit_continuity_modulus(mu, [0.0]) == [0.0]

    def test_fejer_density(self):
        grid = Grid.window(0.01, 100.0)
        k = GridSignal.from_function(grid, lambda x: np.sinc(x / (2 * np.pi)) ** 2 / (2 * np.pi))
        mu = LineMeasure.from_density(k)
        deriv = np.abs(np.gradient(k.samples.real, grid.delta)).sum() * grid.delta
        deltas = [grid.delta * 2**j for j in (4, 3, 2, 1)]
        om = orbit_continuity_modulus(mu, deltas)
        assert all(o <= d * deriv * 1.01 + 1e-9 for o, d in zip(om, deltas))
        assert all(f > 1 for f in modulus_decrease_factors(om))

    def test_pieces_decrease(self):
        pieces = lp_decompose_measure(analytic_density(4), 4)
        deltas = [GRID.delta * 2**j for j in (3, 2, 1, 0)]
        for p in [pieces.low] + pieces.blocks[:3]:
            assert min(modulus_decrease_factors(orbit_continuity_modulus(p, deltas))) >= 1.5


class TestCommutingOperators:
    def test_identity(self):
        rep = commuting_operator_check(identity_operator(), analytic_density(5))
        assert rep.passed and rep.commutation_residual == 0

    def test_even_bump(self):
        bump = GridSignal.from_function(GRID, lambda x: np.exp(-x * x))
        rep = commuting_operator_check(convolution_operator(bump), analytic_density(6))
        assert rep.passed and rep.commutation_residual < 1e-12

    def test_reflection_rejected(self):
        mu = analytic_density(7)
        P = reflection_operator()
        with pytest.raises(CommutationError):
            commuting_operator_check(P, mu)
        # it intertwines T_t with T_{-t} instead
        rng = np.random.default_rng(0)
        nu = random_line_measure(SMALL, rng)
        t = 3 * SMALL.delta
        assert (P(translate_measure(nu, t)) - translate_measure(P(nu), -t)).norm() < 1e-12

    def test_non_analytic_input_rejected(self):
        with pytest.raises(AnalyticityError):
            commuting_operator_check(identity_operator(), LineMeasure.atom(GRID, 0.0))


class TestLebesgue:
    def test_finite_example(self):
        a, s = lebesgue_decompose(FiniteMeasure([1, 2]), FiniteMeasure([0, 3]))
        assert np.array_equal(a.masses, [0, 2]) and np.array_equal(s.masses, [1, 0])

    def test_full_support(self):
        rng = np.random.default_rng(1)
        mu = FiniteMeasure(rng.normal(size=5))
        a, s = lebesgue_decompose(mu, FiniteMeasure(np.ones(5)))
        assert s.norm() == 0

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 2**32 - 1))
    def test_exact_and_certified(self, seed):
        rng = np.random.default_rng(seed)
        mu = FiniteMeasure(rng.normal(size=6) + 1j * rng.normal(size=6))
        sigma = FiniteMeasure(np.where(rng.random(6) < 0.5, 0, rng.normal(size=6)))
        a, s = lebesgue_decompose(mu, sigma)
        assert np.array_equal((a + s).masses, mu.masses)
        assert absolutely_continuous(a, sigma)
        assert mutually_singular(s, sigma)
        assert (s + sigma).norm() == pytest.approx(s.norm() + sigma.norm(), rel=1e-15)
        assert (s - sigma).norm() == pytest.approx(s.norm() + sigma.norm(), rel=1e-15)

    def test_singularity_certificate_detects_overlap(self):
        assert not mutually_singular(FiniteMeasure([1, 1]), FiniteMeasure([0, 1]))

    def test_line_split(self):
        rng = np.random.default_rng(2)
        mu = random_line_measure(SMALL, rng, atoms=3)
        half = np.where(SMALL.x > 0, 1.0, 0.0)
        sigma = LineMeasure(GridSignal(SMALL, half), {next(iter(mu.atoms)): 1.0})
        a, s = lebesgue_decompose(mu, sigma)
        assert (a + s - mu).norm() == 0
        assert mutually_singular(s, sigma)
        assert len(a.atoms) == 1


class TestIsometry:
    def test_identity(self):
        rep = isometry_preservation_check(np.eye(4), [1, 0, 2, 0], [0, 3, 0, 0])
        assert rep.preserved and rep.singular_before

    def test_random_phased_permutations(self):
        rng = np.random.default_rng(3)
        for _ in range(100):
            U = random_phased_permutation(6, rng)
            mu = np.where(rng.random(6) < 0.5, 0, rng.normal(size=6) + 1j * rng.normal(size=6))
            sigma = np.where(rng.random(6) < 0.5, 0, rng.normal(size=6))
            rep = isometry_preservation_check(U, mu, sigma)
            supp_mu, supp_sigma = mu != 0, sigma != 0
            assert rep.singular_before == (not np.any(supp_mu & supp_sigma))
            assert rep.ac_before == bool(np.all(~supp_mu | supp_sigma))
            assert rep.preserved

    def test_non_isometry_rejected(self):
        with pytest.raises(IsometryError):
            isometry_preservation_check(np.diag([2.0, 1.0]), [1, 0], [0, 1])


class TestQuasiInvariance:
    def test_wide_gaussian(self):
        sigma = LineMeasure.from_density(GridSignal.from_function(SMALL, lambda x: np.exp(-x * x / 200)))
        assert quasi_invariant_check(sigma).passed

    def test_atom_fails(self):
        assert not quasi_invariant_check(LineMeasure.atom(SMALL, 0.0)).passed

    def test_zero_degenerate(self):
        rep = quasi_invariant_check(LineMeasure.zero(SMALL))
        assert rep.passed and rep.degenerate

    def test_finite_models(self):
        G = FiniteAbelianGroup.cyclic(6)
        assert not quasi_invariant_check(np.eye(6)[0], regular_representation(G)).passed
        assert quasi_invariant_check(np.ones(6), regular_representation(G)).passed
        T = random_representation(G, 3, np.random.default_rng(4), "monomial")
        assert quasi_invariant_check(np.array([1.0, 0, 2.0]), T).passed


class TestAnalyticLebesgueParts:
    def test_full_support_sigma(self):
        mu = analytic_density(8)
        sigma = LineMeasure.from_density(GridSignal(GRID, np.ones(GRID.n)))
        rep = analytic_lebesgue_parts(mu, sigma)
        assert rep.passed and rep.singular_part.status == "indeterminate"
        assert rep.absolutely_continuous_part.passed

    def test_split_support(self):
        ones, zero = GridSignal(GRID, np.ones(GRID.n)), GridSignal.zeros(GRID)
        sigma = FiberedMeasure((LineMeasure.from_density(ones), LineMeasure.from_density(zero)))
        mu = FiberedMeasure((analytic_density(9), analytic_density(10)))
        rep = analytic_lebesgue_parts(mu, sigma)
        assert rep.passed
        assert rep.absolutely_continuous_part.status == "pass" and rep.singular_part.status == "pass"
        assert rep.to_dict()["pass"]

    def test_half_line_sigma_is_not_quasi_invariant(self):
        sigma = LineMeasure.from_density(GridSignal(GRID, np.where(GRID.x > 0, 1.0, 0.0)))
        with pytest.raises(AnalyticityError):
            analytic_lebesgue_parts(analytic_density(11), sigma)
