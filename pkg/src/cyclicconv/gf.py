"""Finite fields F_q, q = p^e <= 2^16, with log/antilog tables.

Elements are plain ints in ``range(q)``.  Prime fields use residues; for
extension fields an element is the base-p packing of its polynomial
coefficients, so ``c_0 + c_1*p + ... + c_{e-1}*p^(e-1)`` stands for
``c_0 + c_1*y + ... + c_{e-1}*y^(e-1)`` modulo the field modulus.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

MAX_ORDER = 1 << 16

# Primitive polynomials over F_2, low bit = constant term.
BINARY_MODULI = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10001001,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000001010011,
    13: 0b10000000011011,
    14: 0b100010001000011,
    15: 0b1000000000000011,
    16: 0b10001000000001011,
}

_ADD_TABLE_LIMIT = 256


class FieldError(ValueError):
    pass


class NotPrime(FieldError):
    pass


class ReducibleModulus(FieldError):
    pass


class NoPrimitiveFound(FieldError):
    pass


class ZeroElement(FieldError):
    pass


class DivisionByZero(ZeroDivisionError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q`` into ``(p, e)`` with ``q == p**e``; raise NotPrime otherwise."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    p = 2
    while q % p:
        p += 1
    e, r = 0, q
    while r % p == 0:
        r //= p
        e += 1
    if r != 1:
        raise NotPrime(f"{q} is not a prime power")
    return p, e


# -- polynomials over F_p as coefficient lists, low degree first ------------

def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmod(a, b, p):
    a = _trim(a)
    b = _trim(b)
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        coef = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bi) % p
        a = _trim(a)
    return a


def is_irreducible(modulus, p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    mod = _trim([c % p for c in modulus])
    deg = len(mod) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _pmod(mod, list(low) + [1], p):
                return False
    return True


def _unpack(x, p, e):
    digits = []
    for _ in range(e):
        digits.append(x % p)
        x //= p
    return digits


def _pack(digits, p):
    x = 0
    for c in reversed(digits):
        x = x * p + c
    return x


@dataclass(eq=False, frozen=True)
class FieldTable:
    """The field F_q together with a primitive element and its log tables.

    Instances are immutable and compared by identity.
    """

    p: int
    e: int
    alpha: int
    modulus: tuple | None
    exp_table: tuple = field(repr=False)
    log_table: tuple = field(repr=False)
    _add: tuple | None = field(default=None, repr=False)
    _neg: tuple = field(default=(), repr=False)

    @property
    def q(self) -> int:
        return self.p ** self.e

    @property
    def order(self) -> int:
        """Multiplicative group order q - 1."""
        return self.p ** self.e - 1

    @property
    def is_prime_field(self) -> bool:
        return self.e == 1

    def __repr__(self):
        return f"GF({self.q}, alpha={self.alpha})"

    # -- scalar arithmetic --------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if self._add is not None:
            return self._add[a][b]
        p = self.p
        da, db = _unpack(a, p, self.e), _unpack(b, p, self.e)
        return _pack([(x + y) % p for x, y in zip(da, db)], p)

    def neg(self, a: int) -> int:
        if self.e == 1:
            return -a % self.p
        if self.p == 2:
            return a
        if self._neg:
            return self._neg[a]
        return _pack([-x % self.p for x in _unpack(a, self.p, self.e)], self.p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp_table[self.log_table[a] + self.log_table[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self.exp_table[(self.order - self.log_table[a]) % self.order]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise DivisionByZero("division by zero")
        if a == 0:
            return 0
        return self.exp_table[(self.log_table[a] - self.log_table[b]) % self.order]

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise DivisionByZero("negative power of zero")
            return 1 if k == 0 else 0
        return self.exp_table[(self.log_table[a] * k) % self.order]

    def alpha_pow(self, k: int) -> int:
        return self.exp_table[k % self.order]

    def times_int(self, a: int, c: int) -> int:
        """``a`` added to itself ``c`` times."""
        c %= self.p
        if self.e == 1:
            return a * c % self.p
        return _pack([x * c % self.p for x in _unpack(a, self.p, self.e)], self.p)

    def arith(self, a: int, b: int, kind: str) -> int:
        if kind == "inv":
            return self.inv(b)
        op = {"add": self.add, "sub": self.sub, "mul": self.mul,
              "div": self.div, "pow": self.pow}.get(kind)
        if op is None:
            raise ValueError(f"unknown operation {kind!r}")
        return op(a, b)

    def element_order(self, g: int) -> int:
        if g == 0:
            raise ZeroElement("zero has no multiplicative order")
        from math import gcd
        return self.order // gcd(self.order, self.log_table[g])

    def is_primitive(self, g: int) -> bool:
        return self.element_order(g) == self.order

    def elements(self):
        return range(self.q)

    # -- vectors (tuples) ---------------------------------------------------

    def vadd(self, u, v):
        if self.e == 1:
            p = self.p
            return tuple((a + b) % p for a, b in zip(u, v))
        return tuple(self.add(a, b) for a, b in zip(u, v))

    def vsub(self, u, v):
        if self.e == 1:
            p = self.p
            return tuple((a - b) % p for a, b in zip(u, v))
        return tuple(self.sub(a, b) for a, b in zip(u, v))

    def vscale(self, c, u):
        return tuple(self.mul(c, a) for a in u)

    # -- numpy arrays (enumeration helpers) ---------------------------------

    def np_add(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.e == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        scale = 1
        for _ in range(self.e):
            out += ((a // scale % self.p + b // scale % self.p) % self.p) * scale
            scale *= self.p
        return out

    def np_mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.e == 1:
            return (a * b) % self.p
        exp = np.asarray(self.exp_table, dtype=np.int64)
        log = np.asarray(self.log_table, dtype=np.int64)
        out = exp[log[a] + log[b]]
        return np.where((a == 0) | (b == 0), 0, out)


def _clmul_mod(a, b, e, mod_bits):
    out = 0
    while b:
        if b & 1:
            out ^= a
        b >>= 1
        a <<= 1
        if a >> e & 1:
            a ^= mod_bits
    return out


def _schoolbook_mul(a, b, p, e, mod):
    if p == 2:
        return _clmul_mod(a, b, e, _pack(mod, 2))
    da, db = _unpack(a, p, e), _unpack(b, p, e)
    prod = [0] * (2 * e - 1)
    for i, x in enumerate(da):
        if x:
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % p
    rem = _pmod(prod, mod, p)
    return _pack(rem + [0] * (e - len(rem)), p)


def schoolbook_mul(f: FieldTable, a: int, b: int) -> int:
    """Multiply without the log tables; used to cross-check them."""
    if f.e == 1:
        return a * b % f.p
    return _schoolbook_mul(a, b, f.p, f.e, list(f.modulus))


def field_build(p: int, e: int = 1, modulus=None, alpha: int | None = None) -> FieldTable:
    """Build F_{p^e}.

    ``modulus`` is a coefficient list (constant term first) of an irreducible
    polynomial of degree ``e``; built-in moduli exist for ``p == 2``.  When
    ``alpha`` is omitted the smallest primitive element is used.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if e < 1:
        raise FieldError("extension degree must be >= 1")
    q = p ** e
    if q > MAX_ORDER:
        raise FieldError(f"field order {q} exceeds {MAX_ORDER}")

    mod = None
    if e > 1:
        if modulus is None:
            if p != 2:
                raise FieldError(f"no built-in modulus for GF({p}^{e}); supply one")
            bits = BINARY_MODULI[e]
            modulus = [(bits >> i) & 1 for i in range(e + 1)]
        mod = _trim([int(c) % p for c in modulus])
        if len(mod) - 1 != e:
            raise ReducibleModulus(f"modulus must have degree {e}")
        if not is_irreducible(mod, p):
            raise ReducibleModulus(f"{list(modulus)} is reducible over GF({p})")
        lead_inv = pow(mod[-1], p - 2, p)
        mod = [c * lead_inv % p for c in mod]

    def mul(a, b):
        if e == 1:
            return a * b % p
        if p == 2:
            return _clmul_mod(a, b, e, mod_bits)
        return _schoolbook_mul(a, b, p, e, mod)

    mod_bits = _pack(mod, 2) if e > 1 and p == 2 else 0

    n = q - 1

    def powers(g):
        seq = [1]
        x = g
        while x != 1 and len(seq) <= n:
            seq.append(x)
            x = mul(x, g)
        return seq

    if alpha is None:
        candidates = range(1, q)
    else:
        if not 0 < alpha < q:
            raise ZeroElement("primitive element must be a nonzero field element")
        candidates = [alpha]
    exp = None
    for g in candidates:
        seq = powers(g)
        if len(seq) == n:
            alpha, exp = g, seq
            break
    if exp is None:
        raise NoPrimitiveFound(f"no primitive element among {list(candidates)[:8]} in GF({q})")

    log = [0] * q
    for i, x in enumerate(exp):
        log[x] = i
    exp_table = tuple(exp + exp)

    add = None
    neg = ()
    if e > 1 and p != 2:
        neg = tuple(_pack([-c % p for c in _unpack(x, p, e)], p) for x in range(q))
        if q <= _ADD_TABLE_LIMIT:
            add = tuple(
                tuple(_pack([(x + y) % p for x, y in zip(_unpack(a, p, e), _unpack(b, p, e))], p)
                      for b in range(q))
                for a in range(q))
    return FieldTable(p=p, e=e, alpha=alpha, modulus=None if mod is None else tuple(mod),
                      exp_table=exp_table, log_table=tuple(log), _add=add, _neg=neg)


def field_from_order(q: int, modulus=None, alpha: int | None = None) -> FieldTable:
    p, e = prime_power(q)
    return field_build(p, e, modulus, alpha)


def primitive_validate(f: FieldTable, g: int) -> bool:
    return f.is_primitive(g)
