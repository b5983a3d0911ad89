"""Partial decoding of the window code B for doubly cyclic codes.

For a window (v_0, .., v_m) the decoder tries levels l = m, m-1, .., 0: decode
v_l in the stacked code B_l, lift the result to a codeword w of the truncated
window code and accept it when it lies within floor((d_0+..+d_l-1)/2) of
(v_0, .., v_l).  When no level is accepted, the partial codewords found on the
way (or the closest words of im G_0 to v_0 if none were found) are extended
block by block to full codewords of B and the closest one is returned.  That
last path also signals a detected error.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import algebra as alg
from .algebra import hamming_distance
from .convcode import DecodingFailure
from .dcc import DoublyCyclicCode
from .rsdec import nearest_codeword_search, recover_message, rs_bounded_decode

FALLBACK_A = "fallback-a"
FALLBACK_B = "fallback-b"


class EmptyCandidates(RuntimeError):
    pass


@dataclass(frozen=True)
class DecoderConfig:
    fallback: bool = True
    branch_cap: int = 4
    step2_list: bool = False


@dataclass
class LevelRecord:
    level: int
    rs_ok: bool
    message: tuple | None = None
    partial: tuple | None = None
    distance: int | None = None
    threshold: int | None = None
    accepted: bool = False


@dataclass
class PartialDecodeOutcome:
    v0_hat: tuple
    x0_hat: tuple
    level_used: object
    trace: list = field(default_factory=list)
    error_detected: bool = False
    rs_decodes: int = 0
    message: tuple | None = None
    codeword: tuple | None = None

    @property
    def blocks(self):
        return (self.v0_hat,)

    @property
    def messages(self):
        return (self.x0_hat,)

    @property
    def best_effort(self) -> bool:
        return self.level_used in (FALLBACK_A, FALLBACK_B)


def _split(flat, width):
    return [tuple(flat[i:i + width]) for i in range(0, len(flat), width)]


def _level_candidates(block, code: DoublyCyclicCode, l: int, config: DecoderConfig):
    """Step-2 results at level l as message vectors of length (l+1)k."""
    s = code.stacks[l]
    if config.step2_list:
        res = nearest_codeword_search(code.field, block, s.G_l0, radius=s.d - 1,
                                      max_list=config.branch_cap)
        if not res.within_radius:
            return []
        return [c.message for c in res.candidates]
    res = rs_bounded_decode(block, s)
    if not res.ok:
        return []
    return [recover_message(res.codeword, s)]


def extend_partial(x_hat, window, code: DoublyCyclicCode, branch_cap: int = 4):
    """Extend message blocks x_0..x_l to full codewords of B.

    Block i > l receives the words y_i = x_i G_0 closest to
    v_i - sum_{t<i} x_t G_{i-t}; every tie (up to ``branch_cap``, smallest
    messages first) is branched on.  Returns (message, codeword) pairs with
    the flat message of length (m+1)k.
    """
    F = code.field
    k, n, m = code.k, code.n, code.m
    blocks = _split(tuple(window), n)
    G = code.G
    partials = [tuple(x_hat)]
    for i in range((len(x_hat) // k), m + 1):
        grown = []
        for msg in partials:
            xs = _split(msg, k)
            known = (0,) * n
            for t, x in enumerate(xs):
                known = F.vadd(known, alg.vecmat(F, x, G[i - t]))
            target = F.vsub(blocks[i], known)
            res = nearest_codeword_search(F, target, G[0], max_list=branch_cap)
            grown.extend(msg + c.message for c in res.candidates)
        partials = grown
    ghat = code.partial_ghat[m]
    return [(msg, alg.vecmat(F, msg, ghat)) for msg in partials]


def fallback_select(candidates, window):
    """Closest (message, codeword) pair to ``window``; ties by smallest message."""
    if not candidates:
        raise EmptyCandidates("no candidate codewords")
    return min(candidates, key=lambda mc: (hamming_distance(mc[1], window), tuple(mc[0])))


def partial_block_decode(window, code: DoublyCyclicCode,
                         config: DecoderConfig = DecoderConfig()) -> PartialDecodeOutcome:
    F = code.field
    k, n, m = code.k, code.n, code.m
    window = tuple(window)
    if len(window) != (m + 1) * n:
        raise alg.AlgebraError(f"window width {len(window)} != {(m + 1) * n}")
    blocks = _split(window, n)
    trace = []
    partials = []
    rs_calls = 0
    for l in range(m, -1, -1):
        rs_calls += 1
        found = _level_candidates(blocks[l], code, l, config)
        if not found:
            trace.append(LevelRecord(l, False))
            continue
        threshold = code.partial_d(l) // 2
        head = window[:(l + 1) * n]
        for x in found:
            w = alg.vecmat(F, x, code.partial_ghat[l])
            dist = hamming_distance(w, head)
            ok = dist <= threshold
            trace.append(LevelRecord(l, True, x, w, dist, threshold, ok))
            if ok:
                return PartialDecodeOutcome(w[:n], x[:k], l, trace, False, rs_calls)
            partials.append(x)

    if not config.fallback:
        raise DecodingFailure("no level of the window decoder produced an accepted word")
    if partials:
        case = FALLBACK_A
    else:
        case = FALLBACK_B
        res = nearest_codeword_search(F, blocks[0], code.G[0], max_list=config.branch_cap)
        partials = [c.message for c in res.candidates]
    cands = []
    for x in partials:
        cands.extend(extend_partial(x, window, code, config.branch_cap))
    msg, cw = fallback_select(cands, window)
    return PartialDecodeOutcome(cw[:n], msg[:k], case, trace, True, rs_calls, msg, cw)


class DccPartialDecoder:
    """Callable adapter for the sliding decoder."""

    def __init__(self, code: DoublyCyclicCode, config: DecoderConfig = DecoderConfig()):
        self.code = code
        self.config = config

    def __call__(self, window):
        return partial_block_decode(window, self.code, self.config)


def decode_stream(received, code: DoublyCyclicCode, config: DecoderConfig = DecoderConfig()):
    """Sliding-window decoding of ``received`` with the doubly cyclic window decoder."""
    from .convcode import sliding_decode
    return sliding_decode(received, code.window, code.encoder, DccPartialDecoder(code, config))
