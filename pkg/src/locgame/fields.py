"""Small finite fields as lookup tables.

Elements of GF(p^e) are the integers ``0..q-1``; integer ``x`` encodes the
polynomial whose base-p digits (least significant first) are its coefficients.
Extension fields use a fixed table of monic irreducible polynomials.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import UnsupportedOrder

# q -> (p, coefficients of the monic irreducible, constant term first)
IRREDUCIBLE = {
    4: (2, (1, 1, 1)),  # 1 + x + x^2
    8: (2, (1, 1, 0, 1)),  # 1 + x + x^3
    9: (3, (1, 0, 1)),  # 1 + x^2
    16: (2, (1, 1, 0, 0, 1)),  # 1 + x + x^4
    25: (5, (2, 0, 1)),  # 2 + x^2
    27: (3, (1, 2, 0, 1)),  # 1 + 2x + x^3
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def supported_orders(limit: int = 32) -> list[int]:
    return sorted({q for q in range(2, limit + 1) if is_prime(q)} | {q for q in IRREDUCIBLE if q <= limit})


@dataclass(frozen=True, eq=False)
class FiniteField:
    q: int
    p: int
    e: int
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    inv: np.ndarray  # inv[0] is 0 and meaningless

    @property
    def elements(self) -> range:
        return range(self.q)

    def sub(self, a: int, b: int) -> int:
        return int(self.add[a, self.neg[b]])

    def __repr__(self) -> str:
        return f"GF({self.q})"


def _digits(x: int, p: int, e: int) -> list[int]:
    out = []
    for _ in range(e):
        out.append(x % p)
        x //= p
    return out


def _undigits(ds, p: int) -> int:
    x = 0
    for d in reversed(ds):
        x = x * p + d
    return x


def _poly_mulmod(a: list[int], b: list[int], modulus: tuple[int, ...], p: int) -> list[int]:
    e = len(modulus) - 1
    prod = [0] * (2 * e - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for deg in range(len(prod) - 1, e - 1, -1):
        c = prod[deg]
        if c:
            for i, mi in enumerate(modulus):
                prod[deg - e + i] = (prod[deg - e + i] - c * mi) % p
    return prod[:e]


@lru_cache(maxsize=None)
def finite_field(q: int) -> FiniteField:
    if is_prime(q):
        p, e = q, 1
        xs = np.arange(q)
        add = (xs[:, None] + xs[None, :]) % q
        mul = (xs[:, None] * xs[None, :]) % q
    elif q in IRREDUCIBLE:
        p, modulus = IRREDUCIBLE[q]
        e = len(modulus) - 1
        digs = [_digits(x, p, e) for x in range(q)]
        add = np.zeros((q, q), dtype=np.int64)
        mul = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(q):
                add[a, b] = _undigits([(x + y) % p for x, y in zip(digs[a], digs[b])], p)
                mul[a, b] = _undigits(_poly_mulmod(digs[a], digs[b], modulus, p), p)
    else:
        raise UnsupportedOrder(f"no field of order {q} in the supported table")
    add = add.astype(np.int64)
    mul = mul.astype(np.int64)
    neg = np.array([int(np.flatnonzero(add[a] == 0)[0]) for a in range(q)])
    inv = np.zeros(q, dtype=np.int64)
    for a in range(1, q):
        inv[a] = int(np.flatnonzero(mul[a] == 1)[0])
    for arr in (add, mul, neg, inv):
        arr.setflags(write=False)
    return FiniteField(q, p, e, add, mul, neg, inv)


def check_field_axioms(f: FiniteField) -> bool:
    """Exhaustive check of the field axioms over all pairs and triples."""
    q = f.q
    E = np.arange(q)
    add, mul = f.add, f.mul
    if not (np.array_equal(add, add.T) and np.array_equal(mul, mul.T)):
        return False
    if not (np.array_equal(add[0], E) and np.array_equal(mul[1], E)):
        return False
    for a in range(q):
        if sorted(add[a]) != list(E):
            return False
        if a and sorted(mul[a, 1:]) != list(E[1:]):
            return False
    # associativity and distributivity over all triples
    if not np.array_equal(add[add[:, :, None], E[None, None, :]], add[E[:, None, None], add[None, :, :]]):
        return False
    if not np.array_equal(mul[mul[:, :, None], E[None, None, :]], mul[E[:, None, None], mul[None, :, :]]):
        return False
    lhs = mul[E[:, None, None], add[None, :, :]]
    rhs = add[mul[:, :, None], mul[:, None, :]]
    return bool(np.array_equal(lhs, rhs))
