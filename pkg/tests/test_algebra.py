import random

import pytest
from hypothesis import given, settings, strategies as st

from cyclicconv import algebra as alg
from cyclicconv.algebra import RingElement, ring_mul, sigma_apply, solve_right
from cyclicconv.gf import field_build

F5 = field_build(5)
F9 = field_build(3, 2, [1, 0, 1])


def naive_cyclic_product(F, a, b):
    """Full polynomial product, then fold x^(n+i) onto x^i."""
    n = len(a)
    full = [0] * (2 * n)
    for i in range(n):
        for j in range(n):
            full[i + j] = F.add(full[i + j], F.mul(a[i], b[j]))
    return tuple(F.add(full[i], full[i + n]) for i in range(n))


def ring(F, coeffs):
    return RingElement(F, tuple(coeffs))


def test_f_as_product_of_linear_terms():
    prod = ring(F5, (1, 0, 0, 0))
    for root in (1, 2, 4):
        prod = ring_mul(prod, ring(F5, (F5.neg(root), 1, 0, 0)))
    # x^3 + 3x^2 + 4x + 2
    assert prod.coeffs == (2, 4, 3, 1)
    assert alg.poly_from_roots(F5, [1, 2, 4]) == (2, 4, 3, 1)


def test_ring_identity_and_reduction():
    a = ring(F5, (3, 1, 4, 1))
    assert ring_mul(a, ring(F5, (1, 0, 0, 0))) == a
    x2 = ring(F5, (0, 0, 1, 0))
    x3 = ring(F5, (0, 0, 0, 1))
    assert ring_mul(x2, x3).coeffs == (0, 1, 0, 0)


def test_ring_field_mismatch():
    with pytest.raises(alg.FieldMismatch):
        ring_mul(ring(F5, (1, 0, 0, 0)), ring(field_build(5), (1, 0, 0, 0)))


@given(st.lists(st.integers(0, 8), min_size=8, max_size=8),
       st.lists(st.integers(0, 8), min_size=8, max_size=8))
def test_ring_mul_matches_naive_gf9(a, b):
    assert ring_mul(ring(F9, a), ring(F9, b)).coeffs == naive_cyclic_product(F9, a, b)


@pytest.mark.parametrize("j,expected", [(0, (2, 4, 3, 1)), (1, (2, 3, 2, 3)), (2, (2, 1, 3, 4))])
def test_sigma_on_f(j, expected):
    f = ring(F5, (2, 4, 3, 1))
    # sigma(f) = 3x^3 + 2x^2 + 3x + 2, sigma^2(f) = 4x^3 + 3x^2 + x + 2
    assert sigma_apply(f, 1, j).coeffs == expected


elems9 = st.lists(st.integers(0, 8), min_size=8, max_size=8)


@given(elems9, elems9, st.integers(0, 3), st.integers(0, 5), st.integers(0, 5))
@settings(max_examples=60)
def test_sigma_is_algebra_automorphism(a, b, k, i, j):
    A, B = ring(F9, a), ring(F9, b)
    assert sigma_apply(A * B, k, j) == sigma_apply(A, k, j) * sigma_apply(B, k, j)
    assert sigma_apply(A + B, k, j) == sigma_apply(A, k, j) + sigma_apply(B, k, j)
    assert sigma_apply(sigma_apply(A, k, i), k, j) == sigma_apply(A, k, i + j)


def test_sigma_is_substitution():
    # sigma(g)(x) = g(alpha^k x)
    g = ring(F5, (1, 2, 3, 4))
    s = sigma_apply(g, 1, 1)
    for x in range(1, 5):
        assert alg.poly_eval(F5, s.coeffs, x) == alg.poly_eval(F5, g.coeffs, F5.mul(2, x))


def test_solve_right_examples():
    G10 = ((2, 3, 2, 3), (2, 4, 3, 1))
    assert solve_right(F5, G10, (1, 1, 3, 0)) == (1, 2)
    assert solve_right(F5, G10, (0, 0, 0, 0)) == (0, 0)
    assert solve_right(F5, ((2, 4, 3, 1),), (4, 3, 1, 2)) == (2,)


def test_solve_right_errors():
    with pytest.raises(alg.NoSolution):
        solve_right(F5, ((2, 4, 3, 1),), (1, 0, 0, 0))
    with pytest.raises(alg.RankDeficient):
        solve_right(F5, ((1, 2, 3, 4), (2, 4, 1, 3)), (1, 2, 3, 4))


@given(st.integers(1, 4), st.integers(0, 2 ** 32))
@settings(max_examples=40)
def test_solve_right_roundtrip(k, seed):
    rnd = random.Random(seed)
    n = 6
    F = F9
    while True:
        M = tuple(tuple(rnd.randrange(F.q) for _ in range(n)) for _ in range(k))
        if alg.rank(F, M) == k:
            break
    u = tuple(rnd.randrange(F.q) for _ in range(k))
    assert solve_right(F, M, alg.vecmat(F, u, M)) == u


def test_poly_divmod_and_gcd():
    a = alg.poly_mul(F5, (1, 1), (2, 0, 1))
    q, r = alg.poly_divmod(F5, a, (1, 1))
    assert r == () and q == (2, 0, 1)
    assert alg.poly_gcd(F5, a, alg.poly_mul(F5, (1, 1), (3, 1))) == (1, 1)


def test_enumeration_cap():
    with pytest.raises(alg.TooLargeToEnumerate):
        alg.enumerate_codewords(F5, ((1, 0),) * 9, cap=5 ** 8)


def test_enumeration_lexicographic():
    msgs, words = alg.enumerate_codewords(F5, ((2, 4, 3, 1), (2, 3, 2, 3)))
    assert [tuple(m) for m in msgs[:3]] == [(0, 0), (0, 1), (0, 2)]
    assert tuple(words[1]) == (2, 3, 2, 3)
