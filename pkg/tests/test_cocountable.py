import math
from fractions import Fraction

import numpy as np
import pytest
import scipy.integrate
import scipy.special

from lpmeasures.analytic import analytic_defect
from lpmeasures.cocountable import (
    CoCountable,
    Countable,
    MalformedSetError,
    ProductModel,
    SymbolicCoCountMeasure,
    cocountable_demo,
    example_measure,
    gaussian_counterexample_trajectory,
    gaussian_interval_mass,
)
from lpmeasures.grid import Grid

# int_{-1}^{1} exp(-x^2) dx = sqrt(pi) erf(1), frozen from a 30-digit evaluation
G0 = 1.4936482656248540


def g_reference(t):
    return math.sqrt(math.pi) / 2 * (scipy.special.erf(1 - t) + scipy.special.erf(1 + t))


class TestSymbolicMeasure:
    def test_norm(self):
        assert example_measure().norm() == 2
        assert SymbolicCoCountMeasure(3j, {1: 1, 2.5: -2}).norm() == 6

    def test_evaluation(self):
        mu = SymbolicCoCountMeasure(2.0, {0: 1.0, 1: -3.0})
        assert mu(Countable([0, 5])) == 1
        assert mu(Countable([])) == 0
        assert mu(CoCountable([1])) == 3
        assert mu(CoCountable([])) == 0

    def test_cocountable_everything(self):
        mu = example_measure()
        for t in (-2, 0, Fraction(1, 3), 7.5):
            assert mu.translate(t)(CoCountable([])) == 0

    def test_countable_origin(self):
        mu = example_measure()
        assert mu.translate(0)(Countable([0])) == -1
        for t in (1, -0.5, 3):
            assert mu.translate(t)(Countable([0])) == 0

    def test_translation_convention(self):
        # T_t delta_p = delta_{p - t}
        mu = SymbolicCoCountMeasure(0, {2: 1})
        assert mu.translate(Fraction(1, 2)).atoms == {Fraction(3, 2): 1}

    def test_malformed(self):
        with pytest.raises(MalformedSetError):
            Countable("abc")
        with pytest.raises(MalformedSetError):
            CoCountable([float("nan")])
        with pytest.raises(MalformedSetError):
            Countable(5)
        with pytest.raises(MalformedSetError):
            example_measure()({0, 1})
        with pytest.raises(MalformedSetError):
            cocountable_demo(example_measure(), ["R"], [0])


class TestDemo:
    def test_report(self):
        sets = [Countable([0]), CoCountable([]), CoCountable([1, 2.5]), Countable([3, -1])]
        times = [0, 1, -1, 2.5, -2.5, 3, -3, 0.5]
        rep = cocountable_demo(example_measure(), sets, times)
        assert rep.norm == 2 and rep.not_sup_path_attaining
        by_set = {t.set_repr: t for t in rep.trajectories}
        assert by_set["Countable(0)"].nonzero_times == [0]
        assert by_set["CoCountable()"].nonzero_times == []
        assert "not sup path attaining" in rep.conclusion

    def test_phase_variant(self):
        rep = cocountable_demo(example_measure(), [Countable([0]), CoCountable([2])], [0, -2, 1], alpha=2.5)
        assert rep.passed and rep.alpha == 2.5

    def test_nonvanishing_trajectory_blocks_conclusion(self):
        rep = cocountable_demo(SymbolicCoCountMeasure(1.0, {}), [CoCountable([])], [0, 1])
        assert not rep.not_sup_path_attaining
        rep = cocountable_demo(SymbolicCoCountMeasure(0, {}), [CoCountable([])], [0])
        assert not rep.passed


class TestGaussian:
    def test_value_at_zero(self):
        ref, err = scipy.integrate.quad(lambda x: math.exp(-x * x), -1, 1, epsabs=1e-13, epsrel=1e-13)
        assert abs(ref - G0) < 1e-10
        g, _ = gaussian_counterexample_trajectory()
        i = int(np.argmin(np.abs(g.x)))
        assert g.x[i] == pytest.approx(0, abs=1e-12)
        assert abs(g.samples[i].real - G0) < 1e-10

    def test_matches_erf_and_quad(self):
        ts = np.linspace(-6, 6, 25)
        got = gaussian_interval_mass(-1 - ts, 1 - ts)
        for t, v in zip(ts, got):
            assert abs(v - g_reference(t)) < 1e-12
            q = scipy.integrate.quad(lambda x: math.exp(-(x - t) ** 2), -1, 1, epsabs=1e-13)[0]
            assert abs(v - q) < 1e-10

    def test_even(self):
        g, _ = gaussian_counterexample_trajectory()
        v = g.samples.real
        # grid is symmetric apart from its first point
        assert np.abs(v[1:] - v[1:][::-1]).max() < 1e-12

    def test_defect(self):
        _, defect = gaussian_counterexample_trajectory(Grid.window(0.01, 40.0))
        assert defect >= 1e-3
        assert 0.3 < defect < 0.5


class TestProductModel:
    def test_rectangles_factorize(self):
        P = ProductModel(example_measure())
        t = Fraction(1, 4)
        v = P.evaluate(Countable([-0.25]), (-1, 1), t)
        assert v == pytest.approx(-g_reference(-0.25))
        assert P.evaluate(CoCountable([]), (-1, 1), t) == 0

    def test_parts(self):
        grid = Grid.window(0.01, 40.0)
        P = ProductModel(example_measure())
        diffuse, singular = P.lebesgue_parts()
        assert not np.any(P.trajectory(CoCountable([]), (-1, 1), grid).samples)
        s = singular.trajectory(CoCountable([]), (-1, 1), grid).samples
        assert analytic_defect(s, grid.delta) >= 1e-3
        assert np.allclose(-s.real, gaussian_interval_mass(-1 - grid.x, 1 - grid.x))
        a = diffuse.trajectory(Countable([0]), (-1, 1), grid).samples
        assert not np.any(a)
