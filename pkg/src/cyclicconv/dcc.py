"""Doubly cyclic convolutional codes and their stacked Reed-Solomon codes.

With n = q - 1, f = prod_{i=0}^{n-k-1} (x - alpha^i) in F[x]/(x^n - 1) and
sigma(x) = alpha^k x, row l of G_j is the coefficient vector of
sigma^j(x^l f).  The stack G_{l,0} = [G_l; G_{l-1}; ...; G_0] generates the
cyclic code with roots alpha^0 .. alpha^{n-(l+1)k-1}.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property

from . import algebra as alg
from .algebra import RingElement
from .convcode import ConvEncoder, WidthMismatch, WindowContext, window_matrices
from .gf import FieldTable, field_build


class ParameterOutOfRange(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class StackedCode:
    field: FieldTable
    level: int
    G_l0: tuple = field(repr=False)
    gen_poly: tuple

    @property
    def n(self) -> int:
        return len(self.G_l0[0])

    @property
    def dim(self) -> int:
        return len(self.G_l0)

    @property
    def d(self) -> int:
        return self.n - self.dim + 1

    @property
    def t(self) -> int:
        return (self.d - 1) // 2

    @property
    def roots(self) -> tuple:
        return tuple(self.field.alpha_pow(i) for i in range(self.n - self.dim))

    @cached_property
    def right_inverse(self):
        return alg.right_inverse(self.field, self.G_l0)


def stack_membership(word, s: StackedCode) -> bool:
    """Membership in B_l via divisibility by the generator polynomial."""
    if len(word) != s.n:
        raise WidthMismatch(f"word width {len(word)} != n = {s.n}")
    return not alg.poly_divmod(s.field, word, s.gen_poly)[1]


@dataclass(frozen=True, eq=False)
class DoublyCyclicCode:
    field: FieldTable
    k: int
    m: int
    f: RingElement = field(repr=False)
    encoder: ConvEncoder = field(repr=False)
    stacks: tuple = field(repr=False)

    @property
    def n(self) -> int:
        return self.field.order

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def G(self) -> tuple:
        return self.encoder.G

    @property
    def stack_distances(self) -> list:
        return [s.d for s in self.stacks]

    @property
    def d_formula(self) -> int:
        return sum(self.stack_distances) - 1

    @property
    def dfree(self) -> int:
        return (self.m + 1) * (self.n - self.k + 1)

    def partial_d(self, l: int) -> int:
        """sum_{i<=l} d_i - 1, the weight parameter of the truncated window."""
        return sum(s.d for s in self.stacks[:l + 1]) - 1

    @cached_property
    def window(self) -> WindowContext:
        """Depth m+1, step 1, closed-form weight parameter."""
        ghat, gtilde = window_matrices(self.encoder, self.m + 1)
        return WindowContext(N=self.m + 1, L=1, d=self.d_formula, Ghat=ghat, Gtilde=gtilde)

    @cached_property
    def partial_ghat(self) -> tuple:
        """Upper triangular generators for windows of l+1 blocks, l = 0..m."""
        return tuple(window_matrices(self.encoder, l + 1)[0] for l in range(self.m + 1))

    def params(self) -> dict:
        F = self.field
        return {
            "q": F.q, "p": F.p, "e": F.e,
            "modulus": list(F.modulus) if F.modulus else None,
            "alpha": F.alpha, "n": self.n, "k": self.k, "m": self.m,
        }


def dcc_build(F: FieldTable, k: int, m: int) -> DoublyCyclicCode:
    n = F.order
    if not 1 <= k <= n // 2:
        raise ParameterOutOfRange(f"need 1 <= k <= {n // 2}, got k = {k}")
    if not 0 <= m <= n // k - 1:
        raise ParameterOutOfRange(f"need 0 <= m <= {n // k - 1}, got m = {m}")
    f = RingElement.from_poly(F, alg.poly_from_roots(F, [F.alpha_pow(i) for i in range(n - k)]), n)
    G = tuple(
        tuple(f.shift(r).sigma(k, j).vector() for r in range(k))
        for j in range(m + 1)
    )
    enc = ConvEncoder(F, G)
    stacks = []
    for l in range(m + 1):
        G_l0 = tuple(row for j in range(l, -1, -1) for row in G[j])
        gen = alg.poly_from_roots(F, [F.alpha_pow(i) for i in range(n - (l + 1) * k)])
        stacks.append(StackedCode(F, l, G_l0, gen))
    return DoublyCyclicCode(F, k, m, f, enc, tuple(stacks))


# -- parameter record --------------------------------------------------------

def code_from_params(params: dict) -> DoublyCyclicCode:
    q = int(params["q"])
    from .gf import prime_power
    p, e = prime_power(q)
    F = field_build(p, e, params.get("modulus"), params.get("alpha"))
    return dcc_build(F, int(params["k"]), int(params["m"]))


def dump_params(code: DoublyCyclicCode) -> str:
    return json.dumps(code.params(), indent=2) + "\n"


def load_params(text: str) -> DoublyCyclicCode:
    return code_from_params(json.loads(text))
