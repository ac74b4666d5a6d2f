"""Finite groups stored as dense Cayley tables.

Every group has elements ``0..order-1`` and a multiplication table
``table[i, j] = i * j``.  The index layout of each constructor is fixed and
documented on the constructor, so subgroups serialize the same way on every
run.

Subgroups are bitsets over element indices (plain Python ints), which makes
inclusion and equality a couple of integer operations.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .errors import GroupError, OrderCapExceeded

DEFAULT_ORDER_CAP = 512
AXIOM_CHECK_LIMIT = 256


def _mask_from_bools(flags: np.ndarray) -> int:
    return int.from_bytes(np.packbits(flags, bitorder="little").tobytes(), "little")


def _indices_from_mask(mask: int, size: int) -> np.ndarray:
    raw = np.frombuffer(mask.to_bytes((size + 7) // 8, "little"), dtype=np.uint8)
    return np.flatnonzero(np.unpackbits(raw, bitorder="little")[:size])


class FiniteGroup:
    """A finite group given by its Cayley table.

    The table is copied and frozen on construction.  Derived data (inverses,
    element orders, a generating set, the subgroup lattice) is computed lazily
    and cached on the instance; the group itself never changes.
    """

    def __init__(self, table, label: str = "G", identity: int | None = None,
                 cap: int = DEFAULT_ORDER_CAP, check: bool = True,
                 exhaustive_limit: int = AXIOM_CHECK_LIMIT):
        table = np.array(table, dtype=np.int32)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise GroupError("Cayley table must be a non-empty square matrix")
        if table.shape[0] > cap:
            raise OrderCapExceeded(table.shape[0], cap)
        table.setflags(write=False)
        self.table = table
        self.order = table.shape[0]
        self.label = label
        self.cap = cap
        if identity is None:
            rows = np.flatnonzero((table == np.arange(self.order)).all(axis=1))
            if len(rows) == 0:
                raise GroupError(f"{label}: no identity element in table")
            identity = int(rows[0])
        self.identity = identity
        self._lattice = None
        if check:
            self.check_axioms(exhaustive_limit)

    def __repr__(self):
        return f"FiniteGroup({self.label!r}, order={self.order})"

    def __len__(self):
        return self.order

    @property
    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def power(self, g: int, k: int) -> int:
        k %= int(self.element_orders[g])
        result, base = self.identity, g
        while k:
            if k & 1:
                result = int(self.table[result, base])
            base = int(self.table[base, base])
            k >>= 1
        return result

    @cached_property
    def inverse(self) -> np.ndarray:
        rows, cols = np.nonzero(self.table == self.identity)
        inv = np.empty(self.order, dtype=np.int32)
        inv[rows] = cols
        inv.setflags(write=False)
        return inv

    @cached_property
    def element_orders(self) -> np.ndarray:
        orders = np.ones(self.order, dtype=np.int64)
        current = np.arange(self.order, dtype=np.int32)
        idx = np.arange(self.order)
        pending = current != self.identity
        k = 1
        while pending.any():
            k += 1
            current = np.where(pending, self.table[current, idx], current)
            done = pending & (current == self.identity)
            orders[done] = k
            pending &= ~done
        orders.setflags(write=False)
        return orders

    @cached_property
    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """A small generating set, chosen greedily by descending element order."""
        return greedy_generators(self, range(self.order))

    @cached_property
    def rows(self) -> list[list[int]]:
        """The table as nested lists, for fast scalar lookups."""
        return self.table.tolist()

    @cached_property
    def smallest_prime(self) -> int:
        return next((p for p in range(2, self.order + 1) if self.order % p == 0), 1)

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def check_axioms(self, limit: int = AXIOM_CHECK_LIMIT) -> None:
        """Raise GroupError unless the table is a group.

        Latin square, identity and inverse checks always run.  Associativity
        is checked on every triple when ``order <= limit``.  Above that, it is
        checked for the rows of a generating set only, together with the fact
        that every element is a left product of generators: elements ``a``
        with ``(ab)c = a(bc)`` for all ``b, c`` are closed under products, so
        this covers the whole table.
        """
        n, t = self.order, self.table
        expected = np.arange(n)
        if not (np.sort(t, axis=0) == expected[:, None]).all() or \
                not (np.sort(t, axis=1) == expected[None, :]).all():
            raise GroupError(f"{self.label}: table is not a Latin square")
        if not ((t[self.identity] == expected).all() and (t[:, self.identity] == expected).all()):
            raise GroupError(f"{self.label}: identity is not two-sided")
        if not (t[np.arange(n), self.inverse] == self.identity).all():
            raise GroupError(f"{self.label}: inverses are not two-sided")
        if n <= limit:
            rows = range(n)
        else:
            rows = self.generators
            reached = np.zeros(n, dtype=bool)
            reached[list(rows)] = True
            reached[self.identity] = True
            frontier = np.array(rows, dtype=np.int64)
            while len(frontier) and rows:
                step = np.unique(t[np.ix_(list(rows), frontier)])
                frontier = step[~reached[step]]
                reached[frontier] = True
            if not reached.all():
                raise GroupError(f"{self.label}: generating set does not reach every element")
        for a in rows:
            # (a*b)*c == a*(b*c) for all b, c
            if not (t[t[a]] == t[a][t]).all():
                raise GroupError(f"{self.label}: multiplication is not associative")


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of ``group`` stored as a bitset over element indices.

    ``gens`` records a generating sequence; it does not take part in
    equality, which is by member set only.
    """

    group: FiniteGroup = field(repr=False)
    mask: int
    gens: tuple[int, ...] = field(default=(), compare=False, repr=False)

    @cached_property
    def members(self) -> np.ndarray:
        return _indices_from_mask(self.mask, self.group.order)

    @cached_property
    def order(self) -> int:
        return self.mask.bit_count()

    @property
    def sort_key(self):
        return (self.order, tuple(self.members.tolist()))

    def __contains__(self, g: int) -> bool:
        return bool(self.mask >> g & 1)

    def __le__(self, other: Subgroup) -> bool:
        return self.mask & other.mask == self.mask

    def __lt__(self, other: Subgroup) -> bool:
        return self.mask != other.mask and self <= other

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"Subgroup(order={self.order}, members={self.members.tolist()})"

    def as_group(self, label: str | None = None) -> FiniteGroup:
        """The subgroup as a standalone group, elements renumbered in index order."""
        members = self.members
        position = np.full(self.group.order, -1, dtype=np.int32)
        position[members] = np.arange(len(members))
        sub = position[self.group.table[np.ix_(members, members)]]
        return FiniteGroup(sub, label=label or f"{self.group.label}[{self.order}]",
                           cap=self.group.cap, check=False)


def subgroup_from_members(G: FiniteGroup, members: Iterable[int], gens=()) -> Subgroup:
    flags = np.zeros(G.order, dtype=bool)
    flags[list(members)] = True
    return Subgroup(G, _mask_from_bools(flags), tuple(gens))


def trivial_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, 1 << G.identity, ())


def whole_group(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, G.full_mask, G.generators)


def cyclic_members(G: FiniteGroup, g: int) -> list[int]:
    powers = [G.identity]
    x = g
    while x != G.identity:
        powers.append(x)
        x = int(G.table[x, g])
    return powers


def extend_subgroup(G: FiniteGroup, base: Subgroup, new_gens: Sequence[int]) -> Subgroup:
    """Smallest subgroup containing ``base`` and ``new_gens``.

    Dimino-style coset closure: the result is built as a union of right cosets
    of ``base``, adding a coset ``base*t`` whenever some coset representative
    times a generator leaves the current set.  Stops early once the set is
    larger than ``|G| / p`` for the smallest prime ``p`` dividing ``|G|``,
    since only G itself is that large.
    """
    new_gens = [g for g in new_gens if not (base.mask >> g & 1)]
    if not new_gens:
        return base
    gens = list(base.gens) + new_gens
    rows = G.rows
    inside = np.zeros(G.order, dtype=bool)
    h = base.members
    inside[h] = True
    step = len(h)
    size, limit = step, G.order // G.smallest_prime
    reps = [G.identity]
    for r in reps:
        row = rows[r]
        for s in gens:
            x = row[s]
            if not inside[x]:
                inside[G.table[h, x]] = True
                size += step
                if size > limit:
                    return Subgroup(G, G.full_mask, tuple(gens))
                reps.append(x)
    return Subgroup(G, _mask_from_bools(inside), tuple(gens))


def closure(G: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    """The subgroup generated by ``gens`` (the trivial subgroup if empty)."""
    sub = trivial_subgroup(G)
    for g in gens:
        g = int(g)
        if g < 0 or g >= G.order:
            raise GroupError(f"element {g} is not in {G.label}")
        if not (sub.mask >> g & 1):
            if sub.order == 1:
                sub = subgroup_from_members(G, cyclic_members(G, g), (g,))
            else:
                sub = extend_subgroup(G, sub, [g])
    return sub


def greedy_generators(G: FiniteGroup, members: Iterable[int]) -> tuple[int, ...]:
    """Generating sequence of the subgroup on ``members``.

    Elements are tried by descending order (ties by index) and kept when they
    enlarge the subgroup generated so far.  Not always minimal, but short.
    """
    members = np.asarray(list(members))
    orders = G.element_orders[members]
    ranked = members[np.lexsort((members, -orders))]
    target = len(members)
    sub = trivial_subgroup(G)
    chosen = []
    for g in ranked.tolist():
        if sub.order == target:
            break
        if not (sub.mask >> g & 1):
            sub = closure(G, chosen + [g]) if not chosen else extend_subgroup(G, sub, [g])
            chosen.append(g)
    return tuple(chosen)


def element_order(G: FiniteGroup, g: int) -> int:
    if g < 0 or g >= G.order:
        raise GroupError(f"element {g} is not in {G.label}")
    return int(G.element_orders[g])


def order_statistics(G: FiniteGroup, members=None) -> Counter:
    orders = G.element_orders if members is None else G.element_orders[members]
    return Counter(orders.tolist())


def center(G: FiniteGroup) -> Subgroup:
    """Elements commuting with every element of ``G``."""
    t = G.table
    gens = list(G.generators)
    # commuting with a generating set is enough
    central = (t[:, gens] == t[gens, :].T).all(axis=1)
    members = np.flatnonzero(central)
    return Subgroup(G, _mask_from_bools(central), greedy_generators(G, members))


# constructors ------------------------------------------------------------
#
# Constructor tables are checked through their generator rows only
# (exhaustive_limit=0); the test suite checks every triple on small orders.

def make_cyclic(n: int, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Cyclic group of order n; element i is g^i."""
    if n < 1:
        raise GroupError("cyclic group order must be at least 1")
    if n > cap:
        raise OrderCapExceeded(n, cap)
    i = np.arange(n)
    return FiniteGroup((i[:, None] + i[None, :]) % n, label=f"C{n}", identity=0, cap=cap,
                       exhaustive_limit=0)


def make_dihedral(n: int, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Dihedral group of order 2n: <a, b | a^n = b^2 = 1, bab = a^-1>.

    Index i + n*e stands for a^i b^e.
    """
    if n < 2:
        raise GroupError("dihedral group needs n >= 2")
    return _twisted_cyclic_extension(n, square=0, label=f"D{2 * n}", cap=cap)


def make_generalized_quaternion(k: int, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Generalized quaternion group of order 2^k.

    Modelled on <a, b | a^(2^(k-2)) = b^2, a^(2^(k-1)) = 1, b^-1 a b = a^-1>:
    every element is a^i b^e with i mod 2^(k-1), e in {0, 1}, at index
    i + 2^(k-1) * e.
    """
    if k < 3:
        raise GroupError("generalized quaternion group needs k >= 3")
    n = 2 ** (k - 1)
    return _twisted_cyclic_extension(n, square=n // 2, label=f"Q{2 * n}", cap=cap)


def _twisted_cyclic_extension(n, square, label, cap):
    # a^i b^e * a^j b^f with b a^j = a^-j b and b^2 = a^square
    if 2 * n > cap:
        raise OrderCapExceeded(2 * n, cap)
    i = np.arange(2 * n)
    a_exp, b_exp = i % n, i // n
    ai, bi = a_exp[:, None], b_exp[:, None]
    aj, bj = a_exp[None, :], b_exp[None, :]
    exp = np.where(bi == 0, ai + aj, ai - aj)
    wrap = (bi + bj) >= 2
    exp = (exp + np.where(wrap, square, 0)) % n
    return FiniteGroup(exp + n * ((bi + bj) % 2), label=label, identity=0, cap=cap,
                       exhaustive_limit=0)


def make_direct_product(G: FiniteGroup, H: FiniteGroup, cap: int | None = None) -> FiniteGroup:
    """G x H with componentwise multiplication; (g, h) sits at g*|H| + h."""
    cap = min(G.cap, H.cap) if cap is None else cap
    order = G.order * H.order
    if order > cap:
        raise OrderCapExceeded(order, cap)
    table = G.table[:, None, :, None] * H.order + H.table[None, :, None, :]
    return FiniteGroup(table.reshape(order, order), label=f"{G.label}x{H.label}",
                       identity=G.identity * H.order + H.identity, cap=cap, exhaustive_limit=0)


def is_cyclic(G: FiniteGroup) -> bool:
    return int(G.element_orders.max()) == G.order


def is_p_group(G: FiniteGroup) -> bool:
    n = G.order
    if n == 1:
        return False
    p = next(q for q in range(2, n + 1) if n % q == 0)
    while n % p == 0:
        n //= p
    return n == 1


def sylow_orders(n: int) -> dict[int, int]:
    """Map prime p -> order of a Sylow p-subgroup of a group of order n."""
    out, p = {}, 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 1) * p
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 1) * n
    return out


def has_cyclic_sylows(G: FiniteGroup) -> bool:
    """True iff every Sylow subgroup is cyclic.

    A Sylow p-subgroup of order p^k is cyclic exactly when G has an element
    of order p^k (any such element generates a full Sylow subgroup).
    """
    present = set(G.element_orders.tolist())
    return all(q in present for q in sylow_orders(G.order).values())


def coprime(a: int, b: int) -> bool:
    return gcd(a, b) == 1
