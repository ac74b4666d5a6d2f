"""ZM-groups ZM(m, n, r) = <a, b | a^m = b^n = 1, b^-1 a b = a^r>.

Elements are kept in the normal form b^x a^y, written ``(x, y)`` with
``0 <= x < n`` and ``0 <= y < m``.  Moving a^y past b^u uses
b^-u a b^u = a^(r^u), so

    (x, y) * (u, v) = (x + u mod n, y * r^u + v mod m).

In the Cayley table produced by :func:`zm_group`, ``(x, y)`` has index
``x * m + y``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import NamedTuple

import numpy as np

from .errors import (AbelianTriple, GcdViolation, GroupError, OrderCapExceeded,
                     OrderViolation, RangeViolation)
from .groups import DEFAULT_ORDER_CAP, FiniteGroup, Subgroup, closure
from .numbertheory import divisors, multiplicative_order


@dataclass(frozen=True)
class ZmParams:
    m: int
    n: int
    r: int
    d: int
    # r^u mod m for u in 0..n-1
    powers: tuple[int, ...] = field(repr=False, compare=False)

    @property
    def order(self) -> int:
        return self.m * self.n

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.m, self.n, self.r)

    def __str__(self):
        return f"ZM({self.m},{self.n},{self.r})"


class ZmElement(NamedTuple):
    x: int  # exponent of b
    y: int  # exponent of a


class SubgroupTriple(NamedTuple):
    m1: int
    n1: int
    s: int


def validate_zm_triple(m: int, n: int, r: int) -> ZmParams:
    """Check (m, n, r) and return its parameters with d = o_m(r) cached.

    Raises a subclass of InvalidZmTriple naming the failed condition.
    """
    if m < 2 or n < 2 or not 1 <= r < m:
        raise RangeViolation(m, n, r, "need m >= 2, n >= 2 and 1 <= r < m")
    if r == 1:
        raise AbelianTriple(m, n, r, "r = 1 gives an abelian (cyclic) group")
    if gcd(m, n) != 1:
        raise GcdViolation(m, n, r, f"gcd(m, n) = {gcd(m, n)} != 1")
    if gcd(m, r - 1) != 1:
        raise GcdViolation(m, n, r, f"gcd(m, r-1) = {gcd(m, r - 1)} != 1")
    residue = pow(r, n, m)
    if residue != 1:
        raise OrderViolation(m, n, r, f"r^n = {residue} (mod m), not 1")
    d = multiplicative_order(r, m)
    if d == 1:
        raise AbelianTriple(m, n, r, "o_m(r) = 1 gives an abelian group")
    powers = tuple(pow(r, u, m) for u in range(n))
    return ZmParams(m, n, r, d, powers)


def zm_mul(p: ZmParams, g: ZmElement, h: ZmElement) -> ZmElement:
    x, y = g
    u, v = h
    if not (0 <= x < p.n and 0 <= u < p.n and 0 <= y < p.m and 0 <= v < p.m):
        raise GroupError(f"element out of range for {p}")
    return ZmElement((x + u) % p.n, (y * p.powers[u] + v) % p.m)


def element_index(p: ZmParams, g: ZmElement) -> int:
    return g.x * p.m + g.y


def index_element(p: ZmParams, i: int) -> ZmElement:
    return ZmElement(*divmod(i, p.m))


def zm_group(p: ZmParams, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    if p.order > cap:
        raise OrderCapExceeded(p.order, cap)
    idx = np.arange(p.order)
    x, y = idx // p.m, idx % p.m
    pw = np.array(p.powers, dtype=np.int64)
    bx = (x[:, None] + x[None, :]) % p.n
    ay = (y[:, None] * pw[x][None, :] + y[None, :]) % p.m
    # the normal-form law is checked through the generator rows; exhaustive
    # associativity on small instances lives in the test suite
    return FiniteGroup(bx * p.m + ay, label=str(p), identity=0, cap=cap, exhaustive_limit=0)


def _geometric_sum_mod(r: int, step: int, terms: int, modulus: int) -> int:
    # sum_{k < terms} r^(step*k) mod modulus, i.e. (r^n - 1)/(r^step - 1) reduced
    q = pow(r, step, modulus)
    total, term = 0, 1 % modulus
    for _ in range(terms):
        total = (total + term) % modulus
        term = term * q % modulus
    return total


def in_triple_set(p: ZmParams, t: SubgroupTriple) -> bool:
    m1, n1, s = t
    if m1 < 1 or n1 < 1 or p.m % m1 or p.n % n1 or not 0 <= s < m1:
        return False
    return s * _geometric_sum_mod(p.r, n1, p.n // n1, m1) % m1 == 0


def enumerate_triple_set(p: ZmParams) -> list[SubgroupTriple]:
    """All (m1, n1, s) with m1 | m, n1 | n, s < m1 and m1 | s (r^n - 1)/(r^n1 - 1)."""
    out = []
    for m1 in divisors(p.m):
        for n1 in divisors(p.n):
            q = _geometric_sum_mod(p.r, n1, p.n // n1, m1)
            out.extend(SubgroupTriple(m1, n1, s) for s in range(m1) if s * q % m1 == 0)
    return out


def triple_to_subgroup(p: ZmParams, t: SubgroupTriple, G: FiniteGroup | None = None) -> Subgroup:
    """The subgroup <a^m1, b^n1 a^s> of ZM(m, n, r)."""
    if not in_triple_set(p, t):
        raise GroupError(f"{tuple(t)} is not in the triple set of {p}")
    if G is None:
        G = zm_group(p)
    m1, n1, s = t
    gens = [element_index(p, ZmElement(0, m1 % p.m)),
            element_index(p, ZmElement(n1 % p.n, s))]
    return closure(G, gens)


def zm_solitary_triples(p: ZmParams) -> list[SubgroupTriple]:
    """Triples (m1, n1, 0) with m1 | r^n1 - 1 (the solitary subgroups)."""
    return [SubgroupTriple(m1, n1, 0)
            for m1 in divisors(p.m) for n1 in divisors(p.n)
            if pow(p.r, n1, m1) == 1 % m1]


def center_triple(p: ZmParams) -> SubgroupTriple:
    """Triple of the center <b^d>."""
    return SubgroupTriple(p.m, p.d, 0)
