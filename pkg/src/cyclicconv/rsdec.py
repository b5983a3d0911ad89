"""Bounded-distance decoding of the stacked Reed-Solomon codes.

The stacked code B_l has roots alpha^0 .. alpha^{r-1}, r = n - dim, so
syndromes are taken with offset 0 rather than the usual offset 1.  Decoding is
Berlekamp-Massey, Chien search and Forney's formula.  Exhaustive
nearest-codeword search stands in for list decoding.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import algebra as alg
from .algebra import ENUMERATION_CAP, NoSolution, hamming_distance
from .dcc import StackedCode
from .gf import FieldTable

DECODED = "decoded"
FAILURE = "failure"


class NotInCode(ValueError):
    pass


@dataclass(frozen=True)
class RsDecodeResult:
    status: str
    codeword: tuple | None = None
    error_count: int = 0

    @property
    def ok(self) -> bool:
        return self.status == DECODED


FAILED = RsDecodeResult(FAILURE)


def syndromes(word, s: StackedCode) -> list:
    F = s.field
    return [alg.poly_eval(F, word, a) for a in s.roots]


def berlekamp_massey(F: FieldTable, synd) -> list:
    """Shortest LFSR connection polynomial (constant term 1) generating ``synd``.

    The result has length L + 1 where L is the register length.
    """
    r = len(synd)
    C = [1] + [0] * r
    B = [1] + [0] * r
    L, shift, b = 0, 1, 1
    for i in range(r):
        delta = synd[i]
        for j in range(1, L + 1):
            delta = F.add(delta, F.mul(C[j], synd[i - j]))
        if delta == 0:
            shift += 1
            continue
        coef = F.div(delta, b)
        T = list(C)
        for j in range(r + 1 - shift):
            if B[j]:
                C[j + shift] = F.sub(C[j + shift], F.mul(coef, B[j]))
        if 2 * L <= i:
            L, B, b, shift = i + 1 - L, T, delta, 1
        else:
            shift += 1
    return C[:L + 1]


def _derivative(F: FieldTable, poly):
    return tuple(F.times_int(c, i) for i, c in enumerate(poly))[1:]


def rs_bounded_decode(word, s: StackedCode) -> RsDecodeResult:
    """Return the unique codeword within t of ``word`` or a Failure.

    A returned codeword is always re-checked against every syndrome and
    never lies more than t away from the input.
    """
    F = s.field
    n = s.n
    word = tuple(word)
    if len(word) != n:
        raise alg.AlgebraError(f"word width {len(word)} != n = {n}")
    synd = syndromes(word, s)
    if not any(synd):
        return RsDecodeResult(DECODED, word, 0)
    t = s.t
    if t == 0:
        return FAILED
    lam = berlekamp_massey(F, synd)
    nerr = len(lam) - 1
    if nerr > t:
        return FAILED
    # Chien search: position i is in error iff lam(alpha^-i) = 0
    positions = [i for i in range(n) if alg.poly_eval(F, lam, F.alpha_pow(-i)) == 0]
    if len(positions) != nerr:
        return FAILED
    r = len(synd)
    omega = alg.poly_mul(F, synd, lam)[:r]
    dlam = _derivative(F, lam)
    corrected = list(word)
    for i in positions:
        x_inv = F.alpha_pow(-i)
        den = alg.poly_eval(F, dlam, x_inv)
        if den == 0:
            return FAILED
        # offset-0 Forney: e = -X * omega(X^-1) / lam'(X^-1)
        mag = F.neg(F.mul(F.alpha_pow(i), F.div(alg.poly_eval(F, omega, x_inv), den)))
        if mag == 0:
            return FAILED
        corrected[i] = F.sub(corrected[i], mag)
    corrected = tuple(corrected)
    if any(syndromes(corrected, s)):
        return FAILED
    return RsDecodeResult(DECODED, corrected, hamming_distance(word, corrected))


def recover_message(codeword, s: StackedCode) -> tuple:
    """x with x . G_{l,0} = codeword; x = (x_0, .., x_l), x_0 multiplying G_l."""
    try:
        return s.right_inverse.solve(tuple(codeword))
    except NoSolution as exc:
        raise NotInCode(str(exc)) from None


@dataclass(frozen=True)
class Candidate:
    codeword: tuple
    message: tuple
    distance: int


@dataclass
class SearchResult:
    candidates: list = field(default_factory=list)
    within_radius: bool = True

    @property
    def best(self) -> Candidate:
        return self.candidates[0]


def nearest_codeword_search(F: FieldTable, word, gen, radius: int | None = None,
                            max_list: int | None = None, cap: int = ENUMERATION_CAP) -> SearchResult:
    """Exhaustive list decoding of ``word`` in im ``gen``.

    Returns every codeword within ``radius`` ordered by (distance, message).
    When none exists, or ``radius`` is None, the closest codewords are
    returned instead and ``within_radius`` reflects whether they meet the
    radius.  ``max_list`` truncates after sorting.
    """
    msgs, words = alg.enumerate_codewords(F, gen, cap)
    dist = np.count_nonzero(words != np.asarray(word, dtype=np.int64), axis=1)
    best = int(dist.min())
    if radius is not None and best <= radius:
        idx = np.flatnonzero(dist <= radius)
        within = True
    else:
        idx = np.flatnonzero(dist == best)
        within = radius is None
    # enumeration order is lexicographic in the message, so a stable sort keeps ties ordered
    idx = idx[np.argsort(dist[idx], kind="stable")]
    if max_list is not None:
        idx = idx[:max_list]
    cands = [Candidate(tuple(int(x) for x in words[i]), tuple(int(x) for x in msgs[i]), int(dist[i]))
             for i in idx]
    return SearchResult(cands, within)
