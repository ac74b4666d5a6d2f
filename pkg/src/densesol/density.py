"""Dense solitary subgroups.

G has dense solitary subgroups when every pair H < K of subgroups with H
not maximal in K has a solitary subgroup of G strictly between them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import FiniteGroup, Subgroup
from .lattice import _bits, all_subgroups
from .solitary import solitary_subgroups


@dataclass
class DensityReport:
    verdict: bool
    counterexample: tuple[Subgroup, Subgroup] | None
    checked_pairs: int
    subgroups: int
    solitary: int

    def __bool__(self):
        return self.verdict


def has_dense_solitary(G: FiniteGroup) -> DensityReport:
    """Scan every non-maximal pair H < K for a solitary subgroup in between.

    Pairs are visited with K in canonical order on the outside and H in
    canonical order inside, and the scan stops at the first failing pair.
    """
    lat = all_subgroups(G)
    sol = solitary_subgroups(G)
    sol_bits = 0
    for X in sol:
        sol_bits |= 1 << lat.index(X)
    checked = 0
    for k in range(len(lat)):
        for h in _bits(lat.down[k]):
            between = lat.interval_mask(h, k)
            if between == 0:
                continue
            checked += 1
            if between & sol_bits == 0:
                return DensityReport(False, (lat.nodes[h], lat.nodes[k]), checked,
                                     len(lat), len(sol))
    return DensityReport(True, None, checked, len(lat), len(sol))


def verify_counterexample(G: FiniteGroup, H: Subgroup, K: Subgroup) -> bool:
    """Independent recheck of a reported failing pair, straight from the lattice
    nodes rather than the precomputed bitsets."""
    lat = all_subgroups(G)
    sol = {X.mask for X in solitary_subgroups(G)}
    if not H < K:
        return False
    between = [X for X in lat.nodes if H < X and X < K]
    return bool(between) and not any(X.mask in sol for X in between)
