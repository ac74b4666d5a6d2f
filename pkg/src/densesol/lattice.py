"""Subgroup lattices of finite groups.

Every subgroup is generated by its elements of prime-power order, so the
lattice is found by closing the set of cyclic subgroups under "join with one
more cyclic subgroup of prime-power order" until nothing new appears.  Only
one subgroup per conjugacy class is extended, and only by one cyclic subgroup
per orbit of its normalizer.  Nodes are then sorted
canonically by (order, member list) and the inclusion order is stored as two
bitsets per node (strict supergroups, strict subgroups) over node positions.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable

import numpy as np

from .errors import GroupError, OrderCapExceeded
from .groups import (FiniteGroup, Subgroup, closure, cyclic_members, extend_subgroup,
                     subgroup_from_members, trivial_subgroup)


def generated_subgroup(G: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    return closure(G, gens)


def cyclic_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """One entry per cyclic subgroup, trivial subgroup included."""
    owner = np.full(G.order, -1)
    found = []
    orders = G.element_orders
    # high-order elements first, so every generator of a cyclic subgroup is
    # marked before it is reached
    for g in np.lexsort((np.arange(G.order), -orders)).tolist():
        if owner[g] >= 0:
            continue
        powers = cyclic_members(G, g)
        k = len(powers)
        for e, x in enumerate(powers):
            if np.gcd(e, k) == 1:
                owner[x] = len(found)
        found.append(subgroup_from_members(G, powers, (g,) if k > 1 else ()))
    return found


class SubgroupLattice:
    """All subgroups of a group with inclusion and cover relations.

    ``nodes`` is in canonical order.  ``up[i]`` / ``down[i]`` are bitsets of
    node positions strictly above / below node ``i``; ``covers`` lists pairs
    ``(i, j)`` with node ``j`` covering node ``i``.
    """

    def __init__(self, group: FiniteGroup, subgroups: Iterable[Subgroup]):
        self.group = group
        self.nodes = sorted(subgroups, key=lambda H: H.sort_key)
        self.position = {H.mask: i for i, H in enumerate(self.nodes)}
        n = len(self.nodes)
        masks = [H.mask for H in self.nodes]
        orders = [H.order for H in self.nodes]
        up = [0] * n
        down = [0] * n
        for i in range(n):
            mi, oi = masks[i], orders[i]
            for j in range(i + 1, n):
                if orders[j] > oi and orders[j] % oi == 0 and mi & masks[j] == mi:
                    up[i] |= 1 << j
                    down[j] |= 1 << i
        self.up = up
        self.down = down
        self.covers = [(i, j) for i in range(n) for j in _bits(up[i])
                       if up[i] & down[j] == 0]
        self._cover_set = set(self.covers)

    def __len__(self):
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    def __contains__(self, H: Subgroup) -> bool:
        return H.mask in self.position

    def index(self, H: Subgroup) -> int:
        try:
            return self.position[H.mask]
        except KeyError:
            raise GroupError(f"{H!r} is not a node of this lattice") from None

    @property
    def bottom(self) -> Subgroup:
        return self.nodes[0]

    @property
    def top(self) -> Subgroup:
        return self.nodes[-1]

    def leq(self, H: Subgroup, K: Subgroup) -> bool:
        return H <= K

    def interval_mask(self, i: int, j: int) -> int:
        """Bitset of node positions strictly between nodes i and j."""
        return self.up[i] & self.down[j]

    def is_cover(self, i: int, j: int) -> bool:
        return (i, j) in self._cover_set

    def of_order(self, k: int) -> list[Subgroup]:
        return [H for H in self.nodes if H.order == k]

    def nodes_in(self, bits: int) -> list[Subgroup]:
        return [self.nodes[i] for i in _bits(bits)]


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def all_subgroups(G: FiniteGroup, cap: int | None = None) -> SubgroupLattice:
    """The full subgroup lattice of ``G`` (cached on the group)."""
    cap = G.cap if cap is None else cap
    if G.order > cap:
        raise OrderCapExceeded(G.order, cap)
    if G._lattice is not None:
        return G._lattice
    trivial = trivial_subgroup(G)
    known = {trivial.mask: trivial}
    queue = deque([trivial])
    # joins of prime-power cyclic subgroups already give every subgroup
    seeds = [C for C in cyclic_subgroups(G) if C.gens and _is_prime_power(C.order)]
    gens = np.array([C.gens[0] for C in seeds], dtype=np.int64)
    owner = np.full(G.order, -1, dtype=np.int64)
    for i, C in enumerate(seeds):
        owner[_generators_of_cyclic(G, C)] = i
    t, inv = G.table, G.inverse
    while queue:
        H = queue.popleft()
        # joins commute with conjugation: one representative per conjugacy
        # class is extended, by one seed per orbit of its normalizer, and
        # whole classes are copied into the result
        inside = np.zeros(G.order, dtype=bool)
        inside[H.members] = True
        norm = np.flatnonzero(inside[t[t[:, H.members], inv[:, None]]].all(axis=1))
        orbit_of = owner[t[t[norm][:, gens], inv[norm][:, None]]]
        done = np.zeros(len(seeds), dtype=bool)
        for i, c in enumerate(gens.tolist()):
            if done[i]:
                continue
            done[orbit_of[:, i]] = True
            if inside[c]:
                continue
            K = extend_subgroup(G, H, [c])
            if K.mask not in known:
                for X in conjugates(G, K):
                    known[X.mask] = X
                queue.append(K)
    G._lattice = SubgroupLattice(G, known.values())
    return G._lattice


def _generators_of_cyclic(G: FiniteGroup, C: Subgroup) -> list[int]:
    k = C.order
    powers = cyclic_members(G, C.gens[0])
    return [x for e, x in enumerate(powers) if np.gcd(e, k) == 1]


def _is_prime_power(n: int) -> bool:
    p = next(q for q in range(2, n + 1) if n % q == 0)
    while n % p == 0:
        n //= p
    return n == 1


def is_maximal_in(lat: SubgroupLattice, H: Subgroup, K: Subgroup) -> bool:
    """True iff H < K with nothing strictly between them."""
    if not H < K:
        raise GroupError("is_maximal_in needs H strictly contained in K")
    return lat.interval_mask(lat.index(H), lat.index(K)) == 0


def interval(lat: SubgroupLattice, H: Subgroup, K: Subgroup) -> list[Subgroup]:
    """Subgroups X with H < X < K, in canonical order."""
    if not H <= K:
        raise GroupError("interval needs H contained in K")
    return lat.nodes_in(lat.interval_mask(lat.index(H), lat.index(K)))


def conjugate_by(G: FiniteGroup, H: Subgroup, g: int) -> Subgroup:
    """g H g^-1."""
    members = G.table[G.table[g, H.members], G.inverse[g]]
    return subgroup_from_members(G, members)


def conjugates(G: FiniteGroup, H: Subgroup) -> list[Subgroup]:
    """The conjugacy class of H, in canonical order.

    Found as the orbit of H under conjugation by a generating set of G.
    """
    seen = {H.mask: H}
    queue = [H]
    while queue:
        X = queue.pop()
        for g in G.generators:
            Y = conjugate_by(G, X, g)
            if Y.mask not in seen:
                seen[Y.mask] = Y
                queue.append(Y)
    return sorted(seen.values(), key=lambda X: X.sort_key)


def is_normal(G: FiniteGroup, H: Subgroup) -> bool:
    return all(conjugate_by(G, H, g).mask == H.mask for g in G.generators)
