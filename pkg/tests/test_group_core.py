import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from lpmeasures.group_core import (
    FiniteAbelianGroup,
    GroupFunction,
    GroupMismatchError,
    convolve,
    delta,
    dft,
    idempotent,
    inverse_dft,
)


def brute_dft(f):
    G = f.group
    out = np.zeros(G.order, dtype=complex)
    for a_idx, a in enumerate(G.elements()):
        for t_idx, t in enumerate(G.elements()):
            phase = sum(ai * ti / n for ai, ti, n in zip(a, t, G.factors))
            out[a_idx] += f.values[t_idx] * np.exp(-2j * np.pi * phase)
    return out


def brute_convolve(f, g):
    G = f.group
    out = np.zeros(G.order, dtype=complex)
    for t in G.elements():
        for s in G.elements():
            out[G.index(t)] += f.values[G.index(s)] * g.values[G.index(G.add(t, G.neg(s)))]
    return GroupFunction(G, out)


def random_function(G, rng):
    return GroupFunction(G, rng.normal(size=G.order) + 1j * rng.normal(size=G.order))


groups = st.sampled_from([(6,), (8,), (2, 4), (3, 3), (5,), (2, 2, 3)])


def test_parse_and_name():
    G = FiniteAbelianGroup.parse("Z2xZ4")
    assert G.factors == (2, 4)
    assert G.order == 8
    assert G.name == "Z2xZ4"
    assert FiniteAbelianGroup.parse("z8") == FiniteAbelianGroup.cyclic(8)
    with pytest.raises(ValueError):
        FiniteAbelianGroup.parse("Q8")
    with pytest.raises(ValueError):
        FiniteAbelianGroup((0, 3))


def test_element_arithmetic():
    G = FiniteAbelianGroup((3, 4))
    assert G.add((2, 3), (2, 2)) == (1, 1)
    assert G.neg((1, 0)) == (2, 0)
    for i, t in enumerate(G.elements()):
        assert G.index(t) == i
        assert G.element(i) == t
        assert G.element(G.negation_index[i]) == G.neg(t)


def test_characters_are_homomorphisms():
    G = FiniteAbelianGroup((2, 6))
    X = G.character_table
    assert np.allclose(np.abs(X), 1)
    A = G.addition_table
    for a in range(G.order):
        assert np.allclose(X[a][A], np.outer(X[a], X[a]))


def test_dft_of_delta_is_constant():
    G = FiniteAbelianGroup.cyclic(6)
    assert np.allclose(dft(delta(G)), 1, atol=1e-12)


def test_dft_of_uniform_is_trivial_indicator():
    G = FiniteAbelianGroup((2, 3))
    hat = dft(GroupFunction(G, np.full(G.order, 1 / G.order)))
    expected = np.zeros(G.order)
    expected[0] = 1
    assert np.allclose(hat, expected, atol=1e-12)


def test_dft_matches_direct_summation():
    rng = np.random.default_rng(0)
    for factors in [(6,), (2, 3), (4, 2)]:
        f = random_function(FiniteAbelianGroup(factors), rng)
        assert np.allclose(dft(f), brute_dft(f), atol=1e-12, rtol=0)


def test_convolution_identities():
    G = FiniteAbelianGroup.cyclic(8)
    rng = np.random.default_rng(1)
    f, g = random_function(G, rng), random_function(G, rng)
    assert np.allclose(convolve(f, delta(G)).values, f.values, atol=1e-12)
    for a, b in itertools.product(range(8), repeat=2):
        assert np.allclose(convolve(delta(G, (a,)), delta(G, (b,))).values, delta(G, ((a + b) % 8,)).values, atol=1e-12)
    assert np.allclose(dft(convolve(f, g)), dft(f) * dft(g), atol=1e-12)
    assert np.allclose(convolve(f, g).values, brute_convolve(f, g).values, atol=1e-12)


def test_convolution_rejects_other_group():
    with pytest.raises(GroupMismatchError):
        convolve(delta(FiniteAbelianGroup.cyclic(4)), delta(FiniteAbelianGroup.cyclic(5)))


def test_translate_is_convolution_with_delta():
    G = FiniteAbelianGroup((2, 4))
    f = random_function(G, np.random.default_rng(2))
    assert np.allclose(f.translate((1, 3)).values, convolve(delta(G, (1, 3)), f).values, atol=1e-12)


def test_idempotents():
    G = FiniteAbelianGroup.cyclic(4)
    assert np.allclose(idempotent(G, (0,)).values, 0.25)
    for a in range(4):
        e = idempotent(G, (a,))
        assert np.allclose(convolve(e, e).values, e.values, atol=1e-12)
        for b in range(4):
            if b != a:
                direct = brute_convolve(e, idempotent(G, (b,)))
                assert np.abs(direct.values).max() < 1e-12
    G5 = FiniteAbelianGroup.cyclic(5)
    for a in range(5):
        hat = brute_dft(idempotent(G5, (a,)))
        assert abs(hat[a] - 1) < 1e-12
        assert np.abs(np.delete(hat, a)).max() < 1e-12


@settings(max_examples=40, deadline=None)
@given(groups, st.integers(0, 2**32 - 1))
def test_fourier_bounded_by_l1(factors, seed):
    G = FiniteAbelianGroup(factors)
    f = random_function(G, np.random.default_rng(seed))
    assert np.abs(dft(f)).max() <= f.norm1() * (1 + 1e-12)
    assert np.allclose(inverse_dft(dft(f), G).values, f.values, atol=1e-12)


@settings(max_examples=40, deadline=None)
@given(groups, st.integers(0, 2**32 - 1))
def test_convolution_commutative_associative(factors, seed):
    G = FiniteAbelianGroup(factors)
    rng = np.random.default_rng(seed)
    f, g, h = (random_function(G, rng) for _ in range(3))
    assert np.allclose(convolve(f, g).values, convolve(g, f).values, atol=1e-12 * G.order * 10)
    lhs = convolve(convolve(f, g), h).values
    rhs = convolve(f, convolve(g, h)).values
    assert np.allclose(lhs, rhs, atol=1e-12 * G.order**2 * 10)
