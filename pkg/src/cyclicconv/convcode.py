"""Convolutional codes given by coefficient matrices G_0..G_m.

Covers encoding, the window matrices used by the sliding decoder, weight
parameter and distance enumeration, basic/reduced checks, and the generic
sliding-window decoder with a pluggable partial decoder for the window code.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import algebra as alg
from .algebra import ENUMERATION_CAP, TooLargeToEnumerate, hamming_distance
from .gf import FieldTable


class CodeError(ValueError):
    pass


class WidthMismatch(CodeError):
    pass


class NotBasic(CodeError):
    pass


class DecodingFailure(RuntimeError):
    """Raised by strict partial decoders when no level yields a result."""


@dataclass(frozen=True, eq=False)
class ConvEncoder:
    """Polynomial encoder G(z) = G_0 + G_1 z + ... + G_m z^m.

    ``check=True`` verifies that G_0 has full row rank and that the encoder is
    basic.  Pass ``check=False`` for deliberately degenerate encoders.
    """

    field: FieldTable
    G: tuple
    check: bool = True

    def __post_init__(self):
        G = tuple(alg.as_matrix(g) for g in self.G)
        object.__setattr__(self, "G", G)
        if not G or not G[0]:
            raise CodeError("need at least one non-empty coefficient matrix")
        shape = (len(G[0]), len(G[0][0]))
        for g in G:
            if (len(g), len(g[0])) != shape:
                raise CodeError("coefficient matrices differ in shape")
            if any(not 0 <= x < self.field.q for r in g for x in r):
                raise CodeError("matrix entry outside the field")
        if self.check:
            if alg.rank(self.field, G[0]) < shape[0]:
                raise NotBasic("G_0 does not have full row rank")
            if not check_basic_reduced(self).basic:
                raise NotBasic("encoder is not basic")

    @property
    def k(self) -> int:
        return len(self.G[0])

    @property
    def n(self) -> int:
        return len(self.G[0][0])

    @property
    def m(self) -> int:
        return len(self.G) - 1

    def coeff(self, j: int):
        if 0 <= j <= self.m:
            return self.G[j]
        return alg.zeros(self.k, self.n)


def encode(u, enc: ConvEncoder):
    """v_t = sum_i u_{t-i} G_i; the output has len(u) + m blocks."""
    F = enc.field
    u = [tuple(b) for b in u]
    for b in u:
        if len(b) != enc.k:
            raise WidthMismatch(f"message block width {len(b)} != k = {enc.k}")
    out = []
    for t in range(len(u) + enc.m):
        acc = (0,) * enc.n
        for i in range(enc.m + 1):
            if 0 <= t - i < len(u) and any(u[t - i]):
                acc = F.vadd(acc, alg.vecmat(F, u[t - i], enc.G[i]))
        out.append(acc)
    return out


def window_matrices(enc: ConvEncoder, N: int):
    """(Ghat, Gtilde) for processing depth N.

    Ghat is block upper triangular with block (i, j) = G_{j-i}; Gtilde maps the
    previous m message blocks onto the window, block (r, c) = G_{m-r+c}.
    """
    if N < 1:
        raise ValueError("processing depth must be >= 1")
    k, n, m = enc.k, enc.n, enc.m
    Z = alg.zeros(k, n)
    ghat = alg.block_matrix([[enc.coeff(j - i) if j >= i else Z for j in range(N)]
                             for i in range(N)])
    gtilde = alg.block_matrix([[enc.coeff(m - r + c) for c in range(N)] for r in range(m)])
    return ghat, gtilde


@dataclass(frozen=True, eq=False)
class WindowContext:
    N: int
    L: int
    d: int
    Ghat: tuple = field(repr=False)
    Gtilde: tuple = field(repr=False)

    @classmethod
    def build(cls, enc: ConvEncoder, N: int, L: int = 1, d: int | None = None) -> "WindowContext":
        if not 1 <= L <= N:
            raise ValueError("step size must satisfy 1 <= L <= N")
        ghat, gtilde = window_matrices(enc, N)
        if d is None:
            d = weight_param_search(enc, N, L)
        return cls(N=N, L=L, d=d, Ghat=ghat, Gtilde=gtilde)

    @property
    def radius(self) -> int:
        return self.d // 2


def weight_param_search(enc: ConvEncoder, N: int, L: int = 1, cap: int = ENUMERATION_CAP) -> int:
    """Largest d with: wt(v) <= d and v in im Ghat  =>  first L blocks of v vanish."""
    ghat, _ = window_matrices(enc, N)
    _, words = alg.enumerate_codewords(enc.field, ghat, cap)
    weights = np.count_nonzero(words, axis=1)
    head = np.count_nonzero(words[:, :L * enc.n], axis=1) > 0
    return int(weights[head].min()) - 1


def sliding_generator(enc: ConvEncoder, length: int):
    """Generator of the truncated code: messages u_0..u_{length-1} -> all blocks."""
    k, n, m = enc.k, enc.n, enc.m
    total = length + m
    Z = alg.zeros(k, n)
    return alg.block_matrix([[enc.coeff(c - r) if 0 <= c - r <= m else Z for c in range(total)]
                             for r in range(length)])


@dataclass
class DistanceReport:
    dfree_upper: int
    column_distances: list


def distance_checks(enc: ConvEncoder, deg_cap: int, d: int | None = None,
                    cap: int = ENUMERATION_CAP) -> DistanceReport:
    """Degree-capped enumeration of the free distance and column distances.

    ``dfree_upper`` is the least weight of encode(u) over nonzero u with
    deg u <= deg_cap; column distance j is the least weight of the first j+1
    blocks over messages with u_0 != 0.
    """
    F = enc.field
    k = enc.k
    _, words = alg.enumerate_codewords(F, sliding_generator(enc, deg_cap + 1), cap)
    weights = np.count_nonzero(words, axis=1)
    dfree = int(weights[1:].min())
    cols = []
    for j in range(deg_cap + 1):
        ghat, _ = window_matrices(enc, j + 1)
        msgs, w = alg.enumerate_codewords(F, ghat, cap)
        lead = np.any(msgs[:, :k] != 0, axis=1)
        cols.append(int(np.count_nonzero(w[lead], axis=1).min()))
    if d is not None and dfree < d + 1:
        raise CodeError(f"free distance bound {dfree} < d + 1 = {d + 1}")
    return DistanceReport(dfree, cols)


# -- basic / reduced ---------------------------------------------------------

@dataclass
class BasicReducedReport:
    basic: bool
    reduced: bool
    row_degrees: tuple
    degree: int
    minor_gcd: tuple

    @property
    def forney_indices(self):
        return self.row_degrees if self.reduced else None


def _poly_matrix(enc: ConvEncoder):
    """Entry (r, c) of G(z) as a coefficient tuple in z."""
    return [[alg.poly_trim(g[r][c] for g in enc.G) for c in range(enc.n)] for r in range(enc.k)]


def _poly_det(F: FieldTable, M):
    size = len(M)
    total = ()
    for perm in itertools.permutations(range(size)):
        term = (1,)
        for r, c in enumerate(perm):
            term = alg.poly_mul(F, term, M[r][c])
            if not term:
                break
        if not term:
            continue
        inversions = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
        if inversions % 2:
            total = alg.poly_sub(F, total, term)
        else:
            total = alg.poly_add(F, total, term)
    return total


def check_basic_reduced(enc: ConvEncoder) -> BasicReducedReport:
    F = enc.field
    P = _poly_matrix(enc)
    row_deg = tuple(max(alg.poly_deg(e) for e in row) for row in P)
    g = ()
    max_deg = -1
    for cols in itertools.combinations(range(enc.n), enc.k):
        minor = _poly_det(F, [[row[c] for c in cols] for row in P])
        if minor:
            max_deg = max(max_deg, alg.poly_deg(minor))
            g = alg.poly_gcd(F, g, minor)
    basic = g == (1,)
    reduced = max_deg >= 0 and sum(row_deg) == max_deg
    return BasicReducedReport(basic, reduced, row_deg, max_deg, g)


# -- sliding decoder ---------------------------------------------------------

@dataclass
class CycleRecord:
    j: int
    V: tuple
    S: tuple
    w: tuple
    outcome: object
    v_hat: tuple
    u_hat: tuple


@dataclass
class DecodeReport:
    decoded: list
    messages: list
    cycles: list
    window_distances: list
    detection_flags: list
    fallback_cycles: list

    @property
    def detected(self) -> bool:
        return any(self.detection_flags) or bool(self.fallback_cycles)


def _blocks(flat, width):
    return [tuple(flat[i:i + width]) for i in range(0, len(flat), width)]


def window_distances(received, messages, enc: ConvEncoder, N: int):
    """d((vhat_j..vhat_{j+N-1}), (vtilde_j..)) for j = 0..len(received)-1.

    vhat is continued past the end with encode(messages) and the received
    word with zero blocks.
    """
    full = encode(messages, enc)
    zero = (0,) * enc.n
    T = len(received)
    rec = list(received) + [zero] * (len(full) + N)
    full = full + [zero] * (T + N)
    per_block = [hamming_distance(a, b) for a, b in zip(full, rec)]
    return [sum(per_block[j:j + N]) for j in range(T)]


def sliding_decode(received, ctx: WindowContext, enc: ConvEncoder, partial_decoder) -> DecodeReport:
    """Sliding-window decoding of a finite received stream.

    ``partial_decoder(word)`` gets the length N*n window word with the
    contribution of already decoded messages removed and returns an object with
    ``blocks`` (first L decoded blocks), ``messages`` (their message blocks)
    and ``error_detected``.  Windows reaching past the end are zero padded;
    exactly len(received) blocks are decoded.
    """
    F = enc.field
    n, k, m, N, L = enc.n, enc.k, enc.m, ctx.N, ctx.L
    received = [tuple(b) for b in received]
    for b in received:
        if len(b) != n:
            raise WidthMismatch(f"received block width {len(b)} != n = {n}")
    T = len(received)
    zero_v, zero_u = (0,) * n, (0,) * k
    padded = received + [zero_v] * (N + L)
    v_hat, u_hat, cycles, fallback = [], [], [], []
    j = 0
    while j * L < T:
        start = j * L
        V = sum(padded[start:start + N], ())
        past = [u_hat[i] if i >= 0 else zero_u for i in range(start - m, start)]
        S = alg.vecmat(F, sum(past, ()), ctx.Gtilde) if m else (0,) * (N * n)
        w = F.vsub(V, S)
        out = partial_decoder(w)
        S_blocks = _blocks(S, n)
        new_v = tuple(F.vadd(out.blocks[t], S_blocks[t]) for t in range(L))
        new_u = tuple(tuple(x) for x in out.messages[:L])
        v_hat.extend(new_v)
        u_hat.extend(new_u)
        if getattr(out, "error_detected", False):
            fallback.append(j)
        cycles.append(CycleRecord(j, V, S, w, out, new_v, new_u))
        j += 1
    v_hat, u_hat = v_hat[:T], u_hat[:T]
    if encode(u_hat, enc)[:T] != v_hat:
        raise RuntimeError("decoded stream is not the encoding of the decoded messages")
    dists = window_distances(received, u_hat, enc, N)
    flags = [x > ctx.radius for x in dists]
    return DecodeReport(v_hat, u_hat, cycles, dists, flags, fallback)


@dataclass
class WindowDecision:
    blocks: tuple
    messages: tuple
    error_detected: bool = False
    distance: int = 0


class BruteForcePartialDecoder:
    """Nearest codeword of im Ghat by exhaustive search; works for any L.

    Ties go to the lexicographically smallest message.  ``radius`` set marks
    outcomes farther than it as detected errors.
    """

    def __init__(self, enc: ConvEncoder, ctx: WindowContext, cap: int = ENUMERATION_CAP):
        self.enc = enc
        self.ctx = ctx
        self.msgs, self.words = alg.enumerate_codewords(enc.field, ctx.Ghat, cap)

    def __call__(self, word):
        dist = np.count_nonzero(self.words != np.asarray(word, dtype=np.int64), axis=1)
        best = int(np.argmin(dist))
        n, k, L = self.enc.n, self.enc.k, self.ctx.L
        cw = tuple(int(x) for x in self.words[best])
        msg = tuple(int(x) for x in self.msgs[best])
        return WindowDecision(
            blocks=tuple(_blocks(cw, n)[:L]),
            messages=tuple(_blocks(msg, k)[:L]),
            error_detected=int(dist[best]) > self.ctx.radius,
            distance=int(dist[best]),
        )


__all__ = [
    "BruteForcePartialDecoder", "ConvEncoder", "DecodeReport", "DecodingFailure",
    "TooLargeToEnumerate", "WindowContext", "check_basic_reduced", "distance_checks",
    "encode", "sliding_decode", "weight_param_search", "window_matrices",
]
