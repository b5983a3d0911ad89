from __future__ import annotations

from dataclasses import dataclass

from ..rsdec import recover_message, rs_bounded_decode


@dataclass
class BlockResult:
    ok: bool
    codeword: tuple | None
    message: tuple | None
    error_count: int


def baseline_blockwise_rs(received, code) -> list:
    """Decode each block on its own in B_0 = im G_0."""
    s = code.stacks[0]
    out = []
    for block in received:
        res = rs_bounded_decode(block, s)
        if res.ok:
            out.append(BlockResult(True, res.codeword, recover_message(res.codeword, s), res.error_count))
        else:
            out.append(BlockResult(False, None, None, 0))
    return out
