"""Monte-Carlo comparison of the sliding decoder and blockwise RS decoding."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from ..algebra import vecmat
from ..convcode import encode
from ..windec import DecoderConfig, decode_stream
from .baseline import baseline_blockwise_rs
from .channel import ErrorModel, error_pattern, make_rng


@dataclass
class SimulationResult:
    trials: int = 0
    blocks: int = 0
    sliding_block_errors: int = 0
    baseline_block_errors: int = 0
    sliding_frame_errors: int = 0
    baseline_frame_errors: int = 0
    detected_frames: int = 0
    capped_violations: int = 0

    @property
    def sliding_block_error_rate(self) -> float:
        return self.sliding_block_errors / self.blocks if self.blocks else 0.0

    @property
    def baseline_block_error_rate(self) -> float:
        return self.baseline_block_errors / self.blocks if self.blocks else 0.0

    def as_dict(self) -> dict:
        d = asdict(self)
        d["sliding_block_error_rate"] = self.sliding_block_error_rate
        d["baseline_block_error_rate"] = self.baseline_block_error_rate
        return d


@dataclass
class Trial:
    sent: list
    received: list
    report: object
    base_sent: list
    base_received: list
    base: list


def run_trial(code, model: ErrorModel, length: int, trial: int, config=DecoderConfig()) -> Trial:
    """One trial: a random message sent once through the convolutional code and
    once as independent blocks u_t G_0, each over its own draw of the channel.
    """
    rng = make_rng(model.seed, trial)
    F = code.field
    msg = [tuple(int(x) for x in rng.integers(0, F.q, size=code.k)) for _ in range(length)]
    sent = encode(msg, code.encoder)
    err = error_pattern(len(sent), code.n, F.q, model, rng)
    received = [F.vadd(a, b) for a, b in zip(sent, err)]
    report = decode_stream(received, code, config)
    # same number of channel blocks for the baseline: message padded with m zeros
    padded = msg + [(0,) * code.k] * code.m
    base_sent = [vecmat(F, u, code.G[0]) for u in padded]
    base_err = error_pattern(len(base_sent), code.n, F.q, model, rng)
    base_received = [F.vadd(a, b) for a, b in zip(base_sent, base_err)]
    base = baseline_blockwise_rs(base_received, code)
    return Trial(sent, received, report, base_sent, base_received, base)


def simulate(code, trials: int, model: ErrorModel, length: int = 20,
             config: DecoderConfig = DecoderConfig()) -> SimulationResult:
    out = SimulationResult()
    for i in range(trials):
        tr = run_trial(code, model, length, i, config)
        wrong = sum(1 for a, b in zip(tr.report.decoded, tr.sent) if a != b)
        base_wrong = sum(1 for r, b in zip(tr.base, tr.base_sent) if not r.ok or r.codeword != b)
        out.trials += 1
        out.blocks += len(tr.sent)
        out.sliding_block_errors += wrong
        out.baseline_block_errors += base_wrong
        out.sliding_frame_errors += wrong > 0
        out.baseline_frame_errors += base_wrong > 0
        out.detected_frames += tr.report.detected
        if model.kind == "capped" and wrong:
            out.capped_violations += 1
    return out
