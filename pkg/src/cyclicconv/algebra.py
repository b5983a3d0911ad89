"""Polynomials over F_q, the ring A = F[x]/(x^n - 1) and dense linear algebra.

Vectors are tuples of field elements and matrices are tuples of row tuples.
Polynomials are coefficient tuples, constant term first.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .gf import FieldTable

ENUMERATION_CAP = 1 << 20


class AlgebraError(ValueError):
    pass


class FieldMismatch(AlgebraError):
    pass


class RankDeficient(AlgebraError):
    pass


class NoSolution(AlgebraError):
    pass


class TooLargeToEnumerate(AlgebraError):
    pass


# -- polynomials -------------------------------------------------------------

def poly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def poly_deg(a) -> int:
    return len(poly_trim(a)) - 1


def poly_add(F: FieldTable, a, b):
    size = max(len(a), len(b))
    a = tuple(a) + (0,) * (size - len(a))
    b = tuple(b) + (0,) * (size - len(b))
    return poly_trim(F.vadd(a, b))


def poly_sub(F: FieldTable, a, b):
    size = max(len(a), len(b))
    a = tuple(a) + (0,) * (size - len(a))
    b = tuple(b) + (0,) * (size - len(b))
    return poly_trim(F.vsub(a, b))


def poly_mul(F: FieldTable, a, b):
    a, b = poly_trim(a), poly_trim(b)
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
    return poly_trim(out)


def poly_divmod(F: FieldTable, a, b):
    b = poly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(poly_trim(a))
    quot = [0] * max(len(rem) - len(b) + 1, 0)
    lead_inv = F.inv(b[-1])
    while len(rem) >= len(b):
        coef = F.mul(rem[-1], lead_inv)
        shift = len(rem) - len(b)
        quot[shift] = coef
        for i, bi in enumerate(b):
            rem[shift + i] = F.sub(rem[shift + i], F.mul(coef, bi))
        rem = list(poly_trim(rem))
    return poly_trim(quot), tuple(rem)


def poly_gcd(F: FieldTable, a, b):
    """Monic gcd (the empty tuple when both inputs are zero)."""
    a, b = poly_trim(a), poly_trim(b)
    while b:
        a, b = b, poly_divmod(F, a, b)[1]
    if not a:
        return ()
    inv = F.inv(a[-1])
    return tuple(F.mul(inv, c) for c in a)


def poly_eval(F: FieldTable, a, x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


def poly_from_roots(F: FieldTable, roots):
    """prod (x - r) over ``roots``."""
    out = (1,)
    for r in roots:
        out = poly_mul(F, out, (F.neg(r), 1))
    return out


# -- the ring A = F[x]/(x^n - 1) ---------------------------------------------

@dataclass(frozen=True)
class RingElement:
    """Element of F[x]/(x^n - 1) stored as its length-n coefficient vector."""

    field: FieldTable
    coeffs: tuple

    @classmethod
    def from_poly(cls, F: FieldTable, poly, n: int | None = None) -> "RingElement":
        n = F.order if n is None else n
        out = [0] * n
        for i, c in enumerate(poly):
            out[i % n] = F.add(out[i % n], c)
        return cls(F, tuple(out))

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def _check(self, other):
        if other.field is not self.field or other.n != self.n:
            raise FieldMismatch("ring elements over different fields or lengths")

    def __add__(self, other):
        self._check(other)
        return RingElement(self.field, self.field.vadd(self.coeffs, other.coeffs))

    def __mul__(self, other):
        self._check(other)
        return ring_mul(self, other)

    def shift(self, s: int) -> "RingElement":
        """Multiply by x^s (a cyclic shift of the coefficients)."""
        s %= self.n
        return RingElement(self.field, self.coeffs[-s:] + self.coeffs[:-s] if s else self.coeffs)

    def sigma(self, k: int, j: int = 1) -> "RingElement":
        return sigma_apply(self, k, j)

    def vector(self) -> tuple:
        return self.coeffs


def ring_mul(a: RingElement, b: RingElement) -> RingElement:
    if a.field is not b.field or a.n != b.n:
        raise FieldMismatch("ring elements over different fields or lengths")
    F, n = a.field, a.n
    out = [0] * n
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                if y:
                    idx = (i + j) % n
                    out[idx] = F.add(out[idx], F.mul(x, y))
    return RingElement(F, tuple(out))


def sigma_apply(g: RingElement, k: int, j: int = 1) -> RingElement:
    """sigma^j(g) for the automorphism x -> alpha^k x."""
    if j < 0:
        raise ValueError("iteration count must be non-negative")
    F = g.field
    return RingElement(F, tuple(F.mul(c, F.alpha_pow(k * i * j)) for i, c in enumerate(g.coeffs)))


# -- matrices ----------------------------------------------------------------

def as_matrix(rows) -> tuple:
    return tuple(tuple(int(x) for x in r) for r in rows)


def zeros(rows: int, cols: int) -> tuple:
    return tuple((0,) * cols for _ in range(rows))


def hstack(*blocks) -> tuple:
    return tuple(sum((b[i] for b in blocks), ()) for i in range(len(blocks[0])))


def vstack(*blocks) -> tuple:
    return tuple(r for b in blocks for r in b)


def block_matrix(grid) -> tuple:
    return vstack(*(hstack(*row) for row in grid))


def vecmat(F: FieldTable, u, M):
    """Row vector times matrix."""
    if not M:
        return ()
    cols = len(M[0])
    if F.e == 1:
        p = F.p
        acc = [0] * cols
        for c, row in zip(u, M):
            if c:
                for i, x in enumerate(row):
                    acc[i] += c * x
        return tuple(a % p for a in acc)
    acc = [0] * cols
    for c, row in zip(u, M):
        if c:
            for i, x in enumerate(row):
                if x:
                    acc[i] = F.add(acc[i], F.mul(c, x))
    return tuple(acc)


def _row_reduce(F: FieldTable, rows):
    """Reduced row echelon form; pivots are the leftmost nonzero entries."""
    rows = [list(r) for r in rows]
    pivots = []
    if not rows:
        return rows, pivots
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = F.inv(rows[r][c])
        rows[r] = [F.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(F: FieldTable, M) -> int:
    return len(_row_reduce(F, M)[1])


def transpose(M) -> tuple:
    return tuple(zip(*M)) if M else ()


@dataclass(frozen=True)
class RightInverse:
    """Recovers u from v = u M for a full-row-rank M.

    ``cols`` are k columns of M forming an invertible submatrix and
    ``inverse`` is that submatrix's inverse, so u = v[cols] @ inverse.
    """

    field: FieldTable
    matrix: tuple
    cols: tuple
    inverse: tuple

    def solve(self, target):
        if len(target) != len(self.matrix[0]):
            raise AlgebraError("target width does not match matrix")
        u = vecmat(self.field, [target[c] for c in self.cols], self.inverse)
        if vecmat(self.field, u, self.matrix) != tuple(target):
            raise NoSolution("target is not in the row space")
        return u


def right_inverse(F: FieldTable, M) -> RightInverse:
    k = len(M)
    if k == 0:
        raise RankDeficient("empty matrix")
    # pivot columns of M are the leftmost independent columns
    _, cols = _row_reduce(F, M)
    if len(cols) < k:
        raise RankDeficient(f"matrix has rank {len(cols)} < {k} rows")
    sub = [[row[c] for c in cols] for row in M]
    aug = [list(r) + [1 if i == j else 0 for j in range(k)] for i, r in enumerate(sub)]
    red, _ = _row_reduce(F, aug)
    inv = tuple(tuple(r[k:]) for r in red)
    return RightInverse(F, as_matrix(M), tuple(cols), inv)


def solve_right(F: FieldTable, M, target):
    """The unique u with u M = target; NoSolution if target is outside im M."""
    return right_inverse(F, M).solve(target)


# -- exhaustive enumeration --------------------------------------------------

def hamming_weight(v) -> int:
    return sum(1 for x in v if x)


def hamming_distance(u, v) -> int:
    return sum(1 for a, b in zip(u, v) if a != b)


def all_messages(q: int, k: int) -> np.ndarray:
    """Every vector of F_q^k as rows, in lexicographic order."""
    if k == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.indices((q,) * k, dtype=np.int64)
    return grids.reshape(k, -1).T.copy()


def enumerate_codewords(F: FieldTable, gen, cap: int = ENUMERATION_CAP):
    """All pairs (message, message @ gen), messages in lexicographic order."""
    gen = as_matrix(gen)
    k = len(gen)
    if F.q ** k > cap:
        raise TooLargeToEnumerate(f"{F.q}^{k} codewords exceed the cap {cap}")
    return _enumerate_cached(F, gen)


@functools.lru_cache(maxsize=64)
def _enumerate_cached(F, gen):
    k = len(gen)
    msgs = all_messages(F.q, k)
    G = np.asarray(gen, dtype=np.int64).reshape(k, -1)
    if F.e == 1:
        words = (msgs @ G) % F.p
    else:
        words = np.zeros((msgs.shape[0], G.shape[1]), dtype=np.int64)
        for i in range(k):
            words = F.np_add(words, F.np_mul(msgs[:, i:i + 1], G[i:i + 1, :]))
    msgs.flags.writeable = False
    words.flags.writeable = False
    return msgs, words
