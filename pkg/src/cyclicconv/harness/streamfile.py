"""Text stream files: one header line, then one line of symbols per time step.

    #cyclicconv-stream q=5 modulus=- alpha=2 n=4 k=1 m=2 role=received
    4 0 3 1
    1 1 3 0
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

MAGIC = "#cyclicconv-stream"
ROLES = ("message", "codeword", "received", "errors")


class StreamFormatError(ValueError):
    pass


@dataclass
class StreamFile:
    q: int
    alpha: int
    n: int
    k: int
    m: int
    role: str
    modulus: tuple | None = None
    blocks: list = field(default_factory=list)

    @property
    def width(self) -> int:
        return self.k if self.role == "message" else self.n

    @classmethod
    def for_code(cls, code, role: str, blocks) -> "StreamFile":
        F = code.field
        return cls(q=F.q, alpha=F.alpha, n=code.n, k=code.k, m=code.m, role=role,
                   modulus=F.modulus, blocks=[tuple(b) for b in blocks])

    def matches(self, code) -> bool:
        F = code.field
        return ((self.q, self.alpha, self.n, self.k, self.m) ==
                (F.q, F.alpha, code.n, code.k, code.m)
                and (self.modulus or None) == (F.modulus or None))


def serialize_stream(s: StreamFile) -> str:
    mod = ",".join(str(c) for c in s.modulus) if s.modulus else "-"
    lines = [f"{MAGIC} q={s.q} modulus={mod} alpha={s.alpha} n={s.n} k={s.k} m={s.m} role={s.role}"]
    lines += [" ".join(str(x) for x in b) for b in s.blocks]
    return "\n".join(lines) + "\n"


def parse_stream(text: str) -> StreamFile:
    lines = text.splitlines()
    if not lines or not lines[0].startswith(MAGIC):
        raise StreamFormatError("bad header: missing stream marker")
    try:
        kv = dict(item.split("=", 1) for item in lines[0][len(MAGIC):].split())
        mod = None if kv["modulus"] == "-" else tuple(int(c) for c in kv["modulus"].split(","))
        s = StreamFile(q=int(kv["q"]), alpha=int(kv["alpha"]), n=int(kv["n"]), k=int(kv["k"]),
                       m=int(kv["m"]), role=kv["role"], modulus=mod)
    except (KeyError, ValueError) as exc:
        raise StreamFormatError(f"bad header: {exc}") from None
    if s.role not in ROLES:
        raise StreamFormatError(f"bad header: unknown role {s.role!r}")
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        try:
            block = tuple(int(x) for x in line.split())
        except ValueError:
            raise StreamFormatError(f"line {lineno}: non-integer symbol") from None
        if len(block) != s.width:
            raise StreamFormatError(f"line {lineno}: width mismatch ({len(block)} != {s.width})")
        if any(not 0 <= x < s.q for x in block):
            raise StreamFormatError(f"line {lineno}: symbol outside GF({s.q})")
        s.blocks.append(block)
    return s


def read_stream(path) -> StreamFile:
    return parse_stream(Path(path).read_text())


def write_stream(path, s: StreamFile) -> None:
    Path(path).write_text(serialize_stream(s))
