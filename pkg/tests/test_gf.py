import itertools

import pytest
from hypothesis import given, strategies as st

from cyclicconv.gf import (DivisionByZero, NotPrime, ReducibleModulus, ZeroElement, field_build,
                           field_from_order, primitive_validate, schoolbook_mul)


def brute_order(F, g):
    x, k = g, 1
    while x != 1:
        x = schoolbook_mul(F, x, g)
        k += 1
    return k


def test_gf5_primitive_is_two(gf5):
    assert gf5.q == 5 and gf5.alpha == 2


def test_gf2_trivial():
    F = field_build(2)
    assert F.alpha == 1 and F.order == 1


def test_gf7_alpha_order_exhaustive(gf7):
    orders = {g: brute_order(gf7, g) for g in range(1, 7)}
    assert orders[gf7.alpha] == 6
    # the chosen alpha is the smallest generator
    assert gf7.alpha == min(g for g, o in orders.items() if o == 6)
    assert gf7.pow(gf7.alpha, 6) == 1
    assert all(gf7.pow(gf7.alpha, j) != 1 for j in range(1, 6))


@pytest.mark.parametrize("a,b,kind,expected", [
    (2, 4, "mul", 3),
    (0, 2, "inv", 3),
    (2, 3, "pow", 3),
    (3, 4, "add", 2),
    (1, 3, "sub", 3),
    (3, 2, "div", 4),
])
def test_gf5_arith(gf5, a, b, kind, expected):
    assert gf5.arith(a, b, kind) == expected


def test_division_by_zero(gf5):
    with pytest.raises(DivisionByZero):
        gf5.inv(0)
    with pytest.raises(DivisionByZero):
        gf5.div(3, 0)
    with pytest.raises(ZeroDivisionError):
        gf5.arith(1, 0, "div")


@pytest.mark.parametrize("g,expected", [(2, True), (4, False), (1, False), (3, True)])
def test_primitive_validate(gf5, g, expected):
    assert primitive_validate(gf5, g) is expected


def test_primitive_validate_zero(gf5):
    with pytest.raises(ZeroElement):
        primitive_validate(gf5, 0)


def test_not_prime():
    with pytest.raises(NotPrime):
        field_build(6)
    with pytest.raises(NotPrime):
        field_from_order(12)


def test_reducible_modulus():
    # x^2 + 2 = (x + 1)(x + 2) over GF(3)
    with pytest.raises(ReducibleModulus):
        field_build(3, 2, [2, 0, 1])
    with pytest.raises(ReducibleModulus):
        field_build(2, 2, [1, 0, 1])


def test_supplied_alpha_must_be_primitive():
    from cyclicconv.gf import NoPrimitiveFound
    with pytest.raises(NoPrimitiveFound):
        field_build(5, alpha=4)
    assert field_build(5, alpha=3).alpha == 3


FIELDS = [(2, 1, None), (3, 1, None), (5, 1, None), (7, 1, None), (2, 3, None),
          (2, 4, None), (3, 2, [1, 0, 1]), (2, 6, None), (7, 2, [1, 0, 1]), (13, 1, None)]


@pytest.mark.parametrize("p,e,mod", FIELDS)
def test_tables_match_schoolbook(p, e, mod):
    F = field_build(p, e, mod)
    assert F.q <= 64
    n = F.order
    assert len(set(F.exp_table[:n])) == n
    assert all(F.exp_table[i] == F.exp_table[i + n] for i in range(n))
    for x in range(1, F.q):
        assert F.exp_table[F.log_table[x]] == x
    for a, b in itertools.product(range(F.q), repeat=2):
        assert F.mul(a, b) == schoolbook_mul(F, a, b)


@pytest.mark.parametrize("p,e,mod", FIELDS)
def test_field_axioms_exhaustive(p, e, mod):
    F = field_build(p, e, mod)
    q = F.q
    for a in range(q):
        assert F.add(a, 0) == a and F.mul(a, 1) == a
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
        for b in range(q):
            assert F.add(a, b) == F.add(b, a)
            assert F.sub(F.add(a, b), b) == a
    # distributivity on a slice keeps the cube small
    for a, b, c in itertools.product(range(min(q, 16)), repeat=3):
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


def test_binary_extension_addition_is_xor():
    F = field_build(2, 8)
    assert F.add(0x53, 0xCA) == 0x53 ^ 0xCA
    assert F.mul(0x53, 0xCA) == schoolbook_mul(F, 0x53, 0xCA)


@pytest.mark.parametrize("e", range(2, 17))
def test_builtin_binary_moduli(e):
    F = field_build(2, e)
    assert F.q == 2 ** e
    assert F.pow(F.alpha, F.order) == 1


@given(st.integers(1, 8), st.integers(1, 8), st.integers(-20, 20))
def test_pow_law_gf9(a, b, k):
    F = field_build(3, 2, [1, 0, 1])
    assert F.pow(F.mul(a, b), k) == F.mul(F.pow(a, k), F.pow(b, k))


def test_numpy_helpers_agree():
    import numpy as np
    F = field_build(3, 2, [1, 0, 1])
    a = np.arange(9).repeat(9)
    b = np.tile(np.arange(9), 9)
    assert list(F.np_add(a, b)) == [F.add(x, y) for x, y in zip(a.tolist(), b.tolist())]
    assert list(F.np_mul(a, b)) == [F.mul(x, y) for x, y in zip(a.tolist(), b.tolist())]
