import math
from fractions import Fraction

import numpy as np
import pytest
import scipy.integrate
from hypothesis import given, settings, strategies as st

from lpmeasures.grid import AliasingError, Grid, frequencies, sample_profile_kernel, spectrum, GridSignal
from lpmeasures.kernels import (
    FrequencyProfile,
    fejer_profile,
    fejer_time,
    h_profile,
    mn_profile,
    mn_time,
    partition_profile,
    profile_combine,
    two_sided_profile,
    vdp_profile,
)

F = Fraction


def inverse_by_quadrature(p, x):
    """(1/2pi) int p(s) exp(isx) ds by adaptive quadrature between breakpoints."""
    knots = [float(s) for s, _ in p.breakpoints]
    total = 0j
    for a, b in zip(knots, knots[1:]):
        re = scipy.integrate.quad(lambda s: p.evaluate(s) * math.cos(s * x), a, b, epsabs=1e-14, epsrel=1e-12, limit=200)[0]
        im = scipy.integrate.quad(lambda s: p.evaluate(s) * math.sin(s * x), a, b, epsabs=1e-14, epsrel=1e-12, limit=200)[0]
        total += complex(re, im)
    return total / (2 * math.pi)


class TestProfiles:
    def test_fejer_values(self):
        assert fejer_profile(1)(0) == 1
        assert fejer_profile(1)(1) == 0
        assert fejer_profile(2)(1) == F(1, 2)
        with pytest.raises(ValueError):
            fejer_profile(0)
        with pytest.raises(ValueError):
            fejer_profile(-1)

    def test_mn_values(self):
        m0 = mn_profile(0)
        assert m0(1) == 1
        assert m0(F(2, 5)) == 0
        assert m0(F(3, 2)) == F(1, 2)
        assert mn_profile(-3).support == (F(1, 16), F(1, 4))
        assert mn_profile(5).breakpoints == ((16, 0), (32, 1), (48, F(1, 2)), (64, 0))

    def test_mn_is_two_modulated_triangles(self):
        for n in (-2, 0, 3):
            a = F(2) ** (n - 1)
            both = profile_combine([(1, fejer_profile(a).shift(2 * a)), (F(1, 2), fejer_profile(a).shift(3 * a))])
            # same function; the combination drops the collinear knot at 3a
            diff = profile_combine([(1, both), (-1, mn_profile(n))])
            assert diff.breakpoints == ()
            assert both(3 * a) == F(1, 2)

    def test_h_values(self):
        h = h_profile()
        assert h(0) == 1
        assert h(-1) == 0
        assert h(F(3, 4)) == F(1, 2)

    def test_vdp_values(self):
        V = vdp_profile(1)
        assert V(0) == 1
        assert V(4) == 0
        assert V(3) == F(1, 2)
        with pytest.raises(ValueError):
            vdp_profile(-1)

    def test_combine_partition_examples(self):
        P = profile_combine([(1, h_profile())] + [(1, mn_profile(n)) for n in range(4)])
        assert P(F(-1, 2)) == 1
        assert P(-1) == 0
        assert P(8) == 1

    def test_combine_empty_and_cancel(self):
        assert profile_combine([]).breakpoints == ()
        assert profile_combine([(1, h_profile()), (-1, h_profile())]).breakpoints == ()
        assert h_profile().scale(F(1, 2))(0) == F(1, 2)

    def test_bad_breakpoints(self):
        with pytest.raises(ValueError):
            FrequencyProfile(((0, 0), (0, 1), (1, 0)))
        with pytest.raises(ValueError):
            FrequencyProfile(((0, 1), (1, 0)))

    def test_float_evaluation_agrees_with_exact(self):
        p = partition_profile([1, -1, 1, 1], 3)
        s = np.array([-1.0, -0.75, 0.3, 1.5, 2.25, 7.0, 12.5, 16.0])
        assert np.array_equal(p.evaluate(s), np.array([float(p(F(x))) for x in s]))

    def test_csv_export(self, tmp_path):
        path = tmp_path / "m0.csv"
        mn_profile(0).to_csv(path, dense=5)
        lines = path.read_text().splitlines()
        assert lines[0] == "s,value"
        assert len(lines) == 1 + 4 + 5
        assert "1.0,1.0" in lines


class TestPartitionIdentities:
    def test_one_sided_exact(self):
        rng = np.random.default_rng(0)
        N = 10
        P = partition_profile(None, N)
        for k in rng.integers(-(2**22), 2**22 * 2**N // 2**10, 2000):
            s = F(int(k), 2**12)
            if F(-1, 2) <= s <= 2**N:
                assert P(s) == 1
            elif s <= -1:
                assert P(s) == 0

    def test_two_sided_exact(self):
        M, N = 6, 10
        Q = two_sided_profile(None, M, N)
        for k in range(-200, 2**N * 64 + 200, 7):
            s = F(k, 64)
            if F(1, 2**M) <= s <= 2**N:
                assert Q(s) == 1
            elif s <= F(1, 2 ** (M + 1)) or s >= 2 ** (N + 1):
                assert Q(s) == 0

    def test_vdp_minus_partition_vanishes_above_minus_half(self):
        for N in range(6):
            D = profile_combine([(1, vdp_profile(N)), (-1, partition_profile(None, N))])
            lo, hi = D.support
            assert hi <= F(-1, 2)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 6), st.integers(0, 12), st.integers(0, 2**32 - 1))
def test_signed_sums_bounded_by_one(M, N, seed):
    rng = np.random.default_rng(seed)
    signs = rng.choice((-1, 1), size=M + N + 1).tolist()
    assert two_sided_profile(signs, M, N).sup_abs() <= 1
    assert partition_profile(signs[M:], N).sup_abs() <= 1


class TestTimeDomain:
    def test_fejer_at_zero(self):
        assert fejer_time(1, 0.0) == pytest.approx(1 / (2 * math.pi), rel=1e-15)
        assert abs(inverse_by_quadrature(fejer_profile(1), 0.0) - 1 / (2 * math.pi)) < 1e-12

    def test_fejer_matches_quadrature(self):
        for a in (0.5, 1.0, 2.0):
            for x in (0.3, 2 * math.pi, 7.7, -11.0):
                ref = inverse_by_quadrature(fejer_profile(a), x)
                assert abs(fejer_time(a, x) - ref) < 1e-8 * max(1.0, abs(ref))

    def test_fejer_tail_decays_like_inverse_square(self):
        a = 2.0
        xs = (2 * np.arange(20, 200, 20) + 1) * math.pi / a  # peaks of sin^2
        ys = np.array([inverse_by_quadrature(fejer_profile(a), x).real for x in xs])
        slope = np.polyfit(np.log(xs), np.log(ys), 1)[0]
        assert slope == pytest.approx(-2.0, abs=0.05)

    def test_mn_at_zero(self):
        assert mn_time(0, 0.0) == pytest.approx((1 + 0.5) / (4 * math.pi), rel=1e-15)

    def test_mn_matches_quadrature(self):
        for n in (-1, 0, 2):
            for x in np.linspace(-9.0, 9.0, 7):
                ref = inverse_by_quadrature(mn_profile(n), x)
                assert abs(mn_time(n, x) - ref) < 1e-8

    def test_mn_has_zero_mean(self):
        grid = Grid.window(0.05, 2000.0)
        m0 = GridSignal.from_function(grid, lambda x: mn_time(0, x))
        assert abs(grid.delta * m0.samples.sum()) < 1e-6

    def test_sampled_mn_transform_matches_profile(self):
        grid = Grid.window(0.05, 400.0)
        m0 = GridSignal.from_function(grid, lambda x: mn_time(0, x))
        s = frequencies(grid)
        err = np.abs(spectrum(m0) - mn_profile(0).evaluate(s)).max()
        assert err < 1e-3

    def test_transform_error_decays_with_window(self):
        # truncating a 1/x^2 tail costs O(1/L): the error halves per doubling
        # asymptotically, approaching the factor 2 from either side
        errs = []
        for half in (100.0, 200.0, 400.0, 800.0):
            grid = Grid.window(0.05, half)
            k = GridSignal.from_function(grid, lambda x: fejer_time(1.0, x))
            errs.append(np.abs(spectrum(k) - fejer_profile(1).evaluate(frequencies(grid))).max())
        factors = np.array(errs[:-1]) / np.array(errs[1:])
        assert np.all(np.abs(factors - 2) < 0.02)
        assert errs[-1] < 1e-3


class TestSampledKernels:
    def test_fejer_norm(self):
        k = sample_profile_kernel(fejer_profile(1), Grid.window(0.05, 200.0))
        assert k.norm1() == pytest.approx(1.0, rel=0.02)
        assert np.abs(k.samples.imag).max() < 1e-12

    def test_empty_profile(self):
        k = sample_profile_kernel(FrequencyProfile(), Grid.window(0.05, 10.0))
        assert not np.any(k.samples)

    def test_h_is_real(self):
        k = sample_profile_kernel(h_profile(), Grid.window(0.05, 100.0))
        assert np.abs(k.samples.imag).max() < 1e-10

    def test_aliasing_rejected(self):
        with pytest.raises(AliasingError):
            sample_profile_kernel(mn_profile(6), Grid.window(0.05, 10.0))
