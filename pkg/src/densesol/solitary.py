"""Subgroup isomorphism and solitary subgroups.

A subgroup is solitary when no other subgroup of the ambient group is
isomorphic to it.  Isomorphism is decided by a cheap fingerprint filter and
then a backtracking search over images of a generating sequence.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .groups import FiniteGroup, Subgroup, greedy_generators
from .lattice import all_subgroups

GroupLike = Union[FiniteGroup, Subgroup]


@dataclass(frozen=True)
class IsoFingerprint:
    order: int
    element_orders: tuple[tuple[int, int], ...]
    abelian: bool
    center_order: int


def _view(X: GroupLike) -> tuple[FiniteGroup, np.ndarray]:
    if isinstance(X, Subgroup):
        return X.group, X.members
    return X, np.arange(X.order)


def fingerprint(X: GroupLike) -> IsoFingerprint:
    G, members = _view(X)
    sub = G.table[np.ix_(members, members)]
    commuting = sub == sub.T
    counts = np.bincount(G.element_orders[members])
    present = np.flatnonzero(counts)
    return IsoFingerprint(
        order=len(members),
        element_orders=tuple(zip(present.tolist(), counts[present].tolist())),
        abelian=bool(commuting.all()),
        center_order=int(commuting.all(axis=1).sum()),
    )


def _extend(rows_h, rows_k, id_h, id_k, gens, images):
    """Homomorphism on <gens> sending gens[i] -> images[i], or None.

    Walks the Cayley graph of <gens> from the identity; a clash between two
    paths, or two elements landing on one image, kills the assignment.
    """
    phi = {id_h: id_k}
    used = {id_k}
    queue = [id_h]
    pairs = list(zip(gens, images))
    for x in queue:
        fx = phi[x]
        row_x, row_fx = rows_h[x], rows_k[fx]
        for g, img in pairs:
            y, z = row_x[g], row_fx[img]
            seen = phi.get(y)
            if seen is None:
                if z in used:
                    return None
                phi[y] = z
                used.add(z)
                queue.append(y)
            elif seen != z:
                return None
    return phi


def _search(GH, gens, size, GK, mk):
    """Backtrack over images of ``gens`` in the subset ``mk`` of GK."""
    if not gens:
        return {GH.identity: GK.identity}
    rows_h, rows_k = GH.rows, GK.rows
    by_order = defaultdict(list)
    for k in mk.tolist():
        by_order[int(GK.element_orders[k])].append(k)
    candidates = [by_order[int(GH.element_orders[g])] for g in gens]

    def step(images):
        level = len(images)
        for c in candidates[level]:
            trial = images + [c]
            phi = _extend(rows_h, rows_k, GH.identity, GK.identity, gens[:level + 1], trial)
            if phi is None:
                continue
            if level + 1 == len(gens):
                if len(phi) == size:
                    return phi
                continue
            found = step(trial)
            if found is not None:
                return found
        return None

    return step([])


def find_isomorphism(H: GroupLike, K: GroupLike) -> dict[int, int] | None:
    """An isomorphism H -> K as an element map, or None if there is none.

    A generating sequence of H (greedy, largest element orders first) is
    mapped to elements of K of matching order; each partial assignment is
    extended along the Cayley graph and dropped at the first inconsistency.
    """
    if fingerprint(H) != fingerprint(K):
        return None
    GH, mh = _view(H)
    GK, mk = _view(K)
    return _search(GH, list(greedy_generators(GH, mh)), len(mh), GK, mk)


def are_isomorphic(H: GroupLike, K: GroupLike) -> bool:
    return find_isomorphism(H, K) is not None


def isomorphism_classes(G: FiniteGroup) -> list[list[Subgroup]]:
    """Partition of the subgroups of G into isomorphism classes.

    Subgroups are first bucketed by fingerprint, so isomorphism searches only
    run inside a bucket, against one representative per class found so far.
    """
    lat = all_subgroups(G)
    buckets = defaultdict(list)
    for H in lat.nodes:
        buckets[H.order].append(H)
    classes = []
    for same_order in buckets.values():
        if len(same_order) == 1:
            classes.append(same_order)
            continue
        by_print = defaultdict(list)
        for H in same_order:
            by_print[fingerprint(H)].append(H)
        for bucket in by_print.values():
            local: list[list[Subgroup]] = []
            rep_gens = []
            for H in bucket:
                for cls, gens in zip(local, rep_gens):
                    if _search(G, gens, H.order, G, H.members) is not None:
                        cls.append(H)
                        break
                else:
                    local.append([H])
                    rep_gens.append(list(greedy_generators(G, H.members)))
            classes.extend(local)
    return sorted(classes, key=lambda c: c[0].sort_key)


def solitary_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """Subgroups of G with no other isomorphic subgroup, in canonical order."""
    cached = getattr(G, "_solitary", None)
    if cached is None:
        cached = [cls[0] for cls in isomorphism_classes(G) if len(cls) == 1]
        cached.sort(key=lambda H: H.sort_key)
        G._solitary = cached
    return cached


@dataclass
class SolitaryLatticeReport:
    is_lattice: bool
    meet_is_intersection: bool
    join_is_generated: bool
    size: int
    failures: list[tuple[Subgroup, Subgroup]] = field(default_factory=list)


def _least(candidates):
    for X in candidates:
        if all(X <= Y for Y in candidates):
            return X
    return None


def _greatest(candidates):
    for X in candidates:
        if all(Y <= X for Y in candidates):
            return X
    return None


def solitary_lattice_report(G: FiniteGroup) -> SolitaryLatticeReport:
    """Check that every pair of solitary subgroups has a meet and a join among
    the solitary subgroups, and record whether those are the intersection and
    the generated subgroup.
    """
    sol = solitary_subgroups(G)
    report = SolitaryLatticeReport(True, True, True, len(sol))
    lat = all_subgroups(G)
    for i, A in enumerate(sol):
        for B in sol[i + 1:]:
            join = _least([X for X in sol if A <= X and B <= X])
            meet = _greatest([X for X in sol if X <= A and X <= B])
            if join is None or meet is None:
                report.is_lattice = False
                report.failures.append((A, B))
                continue
            if meet.mask != A.mask & B.mask:
                report.meet_is_intersection = False
            generated = min((X for X in lat.nodes if A <= X and B <= X), key=lambda X: X.order)
            if join.mask != generated.mask:
                report.join_is_generated = False
    return report


def check_solitary_lattice(G: FiniteGroup) -> bool:
    return solitary_lattice_report(G).is_lattice


def is_solitary(G: FiniteGroup, H: Subgroup) -> bool:
    return any(X.mask == H.mask for X in solitary_subgroups(G))


__all__ = [
    "IsoFingerprint", "fingerprint", "find_isomorphism", "are_isomorphic",
    "isomorphism_classes", "solitary_subgroups", "check_solitary_lattice",
    "solitary_lattice_report", "is_solitary",
]
