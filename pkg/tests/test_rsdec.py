import functools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cyclicconv import algebra as alg
from cyclicconv.dcc import dcc_build
from cyclicconv.gf import field_build
from cyclicconv.rsdec import (FAILURE, NotInCode, berlekamp_massey, nearest_codeword_search,
                              recover_message, rs_bounded_decode, syndromes)


def test_examples(code5):
    B0, B1, B2 = code5.stacks
    r = rs_bounded_decode((1, 1, 3, 1), B1)
    assert r.ok and r.codeword == (1, 1, 3, 0) and r.error_count == 1
    assert rs_bounded_decode((3, 2, 1, 0), B2).status == FAILURE
    r = rs_bounded_decode((4, 3, 1, 3), B0)
    assert r.codeword == (4, 3, 1, 2)


def test_t_zero_is_membership(code5):
    B2 = code5.stacks[2]
    assert B2.t == 0
    assert rs_bounded_decode((1, 2, 2, 0), B2).ok
    assert not rs_bounded_decode((1, 2, 2, 1), B2).ok


def test_berlekamp_massey_lfsr(gf7):
    # s_i = 3^i satisfies s_i - 3 s_{i-1} = 0
    synd = [gf7.pow(3, i) for i in range(6)]
    assert berlekamp_massey(gf7, synd) == [1, gf7.neg(3)]
    assert berlekamp_massey(gf7, [0, 0, 0]) == [1]


def test_recover_message(code5):
    assert recover_message((1, 1, 3, 0), code5.stacks[1]) == (1, 2)
    assert recover_message((4, 3, 1, 2), code5.stacks[0]) == (2,)
    with pytest.raises(NotInCode):
        recover_message((1, 0, 0, 0), code5.stacks[0])


def check_contract(code, word, s):
    res = rs_bounded_decode(word, s)
    near = nearest_codeword_search(code.field, word, s.G_l0, radius=s.t)
    if near.within_radius:
        assert res.ok and res.codeword == near.best.codeword
        assert res.error_count == near.best.distance
    else:
        assert not res.ok
    if res.ok:
        assert not any(syndromes(res.codeword, s))
        assert alg.hamming_distance(res.codeword, word) <= s.t


@pytest.mark.parametrize("which", ["code5", "code7"])
def test_oracle_random_words(request, which):
    code = request.getfixturevalue(which)
    rng = np.random.default_rng(11)
    for s in code.stacks:
        for _ in range(150):
            check_contract(code, tuple(int(x) for x in rng.integers(0, code.q, code.n)), s)


@pytest.mark.parametrize("which", ["code5", "code7"])
def test_correctable_errors(request, which):
    code = request.getfixturevalue(which)
    F = code.field
    rng = np.random.default_rng(5)
    for s in code.stacks:
        for _ in range(100):
            x = tuple(int(v) for v in rng.integers(0, F.q, s.dim))
            c = alg.vecmat(F, x, s.G_l0)
            e = [0] * code.n
            for pos in rng.choice(code.n, size=int(rng.integers(0, s.t + 1)), replace=False):
                e[pos] = int(rng.integers(1, F.q))
            res = rs_bounded_decode(F.vadd(c, e), s)
            assert res.ok and res.codeword == c
            assert recover_message(res.codeword, s) == x


@functools.lru_cache(maxsize=None)
def _code5():
    # hypothesis does not mix with function-scoped fixtures
    return dcc_build(field_build(5), 1, 2)


@given(st.lists(st.integers(0, 4), min_size=4, max_size=4))
@settings(max_examples=200)
def test_hypothesis_contract_gf5(word):
    code = _code5()
    for s in code.stacks:
        check_contract(code, tuple(word), s)


def test_search_ordering(code5):
    G0 = code5.G[0]
    res = nearest_codeword_search(code5.field, (0, 0, 0, 1), G0)
    # zero word at distance 1 is unique closest
    assert [c.message for c in res.candidates] == [(0,)]
    res = nearest_codeword_search(code5.field, (0, 0, 0, 1), G0, radius=3)
    assert [c.distance for c in res.candidates] == sorted(c.distance for c in res.candidates)
    assert res.candidates[0].message == (0,)
    res = nearest_codeword_search(code5.field, (1, 0, 0, 0), G0, radius=0)
    assert not res.within_radius and res.best.distance == 1


def test_width_checked(code5):
    with pytest.raises(alg.AlgebraError):
        rs_bounded_decode((1, 2, 3), code5.stacks[0])
