"""Symbol error injection.

Every model draws from a PCG64 generator seeded with the model's 64-bit seed;
simulation trials use the child stream ``SeedSequence(seed, spawn_key=(i,))``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

KINDS = ("iid", "burst", "capped")


@dataclass(frozen=True)
class ErrorModel:
    """``iid``: each symbol hit with probability ``rate``.
    ``burst``: each block starts a run of ``burst_len`` symbol errors with
    probability ``rate``.
    ``capped``: like iid, but a symbol is only hit while every window of
    ``window`` consecutive blocks stays at or below ``cap`` errors.
    """

    kind: str = "iid"
    rate: float = 0.0
    cap: int | None = None
    window: int | None = None
    burst_len: int = 3
    seed: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown error model {self.kind!r}")
        if not 0.0 <= self.rate <= 1.0:
            raise ValueError("rate must lie in [0, 1]")
        if self.kind == "capped" and (self.cap is None or self.window is None):
            raise ValueError("capped model needs cap and window")

    def rng(self, trial: int | None = None) -> np.random.Generator:
        return make_rng(self.seed, trial)


def make_rng(seed: int, trial: int | None = None) -> np.random.Generator:
    if trial is None:
        ss = np.random.SeedSequence(seed)
    else:
        ss = np.random.SeedSequence(seed, spawn_key=(trial,))
    return np.random.Generator(np.random.PCG64(ss))


def window_weights(errors, N: int) -> list:
    """Error weight of blocks j..j+N-1 for every start j."""
    per = [sum(1 for x in b if x) for b in errors]
    return [sum(per[j:j + N]) for j in range(len(per))]


def error_pattern(T: int, n: int, q: int, model: ErrorModel, rng=None) -> list:
    rng = model.rng() if rng is None else rng
    err = np.zeros((T, n), dtype=np.int64)
    if T == 0 or model.rate == 0.0 or q < 2:
        return [tuple(int(x) for x in r) for r in err]
    if model.kind == "iid":
        hit = rng.random((T, n)) < model.rate
        err[hit] = rng.integers(1, q, size=int(hit.sum()))
    elif model.kind == "burst":
        flat = err.reshape(-1)
        for t in range(T):
            if rng.random() < model.rate:
                start = t * n + int(rng.integers(0, n))
                stop = min(start + model.burst_len, T * n)
                flat[start:stop] = rng.integers(1, q, size=stop - start)
    else:
        N, cap = model.window, model.cap
        counts = np.zeros(T, dtype=np.int64)
        for pos in rng.permutation(T * n):
            if rng.random() >= model.rate:
                continue
            t = int(pos) // n
            lo = max(0, t - N + 1)
            if counts[lo:t + 1].max() >= cap:
                continue
            counts[lo:t + 1] += 1
            err[t, int(pos) % n] = int(rng.integers(1, q))
        if max(window_weights(err.tolist(), N), default=0) > cap:
            raise AssertionError("window cap violated")
    return [tuple(int(x) for x in r) for r in err]


def inject(v, model: ErrorModel, field, rng=None):
    """(received, error pattern) with received = v + e."""
    v = [tuple(b) for b in v]
    n = len(v[0]) if v else 0
    e = error_pattern(len(v), n, field.q, model, rng)
    return [field.vadd(a, b) for a, b in zip(v, e)], e
