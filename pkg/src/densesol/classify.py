"""The classification predicate and the brute-force sweep that checks it.

A finite group has dense solitary subgroups exactly when it is cyclic, or
it is ZM(m, n, r) with m prime, d = o_m(r) prime, and n = d^alpha * p^beta
for a prime p != d, alpha >= 1 and beta in {0, 1}.  ``verify_theorem``
compares that predicate with :func:`has_dense_solitary` on every ZM triple
up to a given order, on cyclic groups, and on a small corpus of p-groups.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import gcd

from .density import has_dense_solitary
from .errors import InvalidZmTriple, OrderCapExceeded
from .groups import (DEFAULT_ORDER_CAP, FiniteGroup, has_cyclic_sylows, is_cyclic,
                     make_cyclic, make_dihedral, make_direct_product,
                     make_generalized_quaternion)
from .lattice import all_subgroups
from .numbertheory import divisors, factorize, is_prime
from .zm import ZmParams, validate_zm_triple, zm_group

CYCLIC = "cyclic"
ZM_CLASSIFIED = "zm-classified"
REJECTED = "rejected"


@dataclass(frozen=True)
class ClassificationResult:
    verdict: bool
    branch: str
    # (m, d, alpha, p, beta) on the zm-classified branch, p None when beta = 0
    detail: tuple | None = None
    reason: str = ""
    params: ZmParams | None = None


def classify_zm(m: int, n: int, r: int) -> ClassificationResult:
    """Apply the classification conditions to a ZM triple.

    Raises InvalidZmTriple when (m, n, r) is not a ZM triple at all.
    """
    p = validate_zm_triple(m, n, r)
    d = p.d
    if not is_prime(m):
        return ClassificationResult(False, REJECTED, reason=f"m = {m} is not prime", params=p)
    if not is_prime(d):
        return ClassificationResult(False, REJECTED, reason=f"d = {d} is not prime", params=p)
    alpha, rest = 0, n
    while rest % d == 0:
        rest //= d
        alpha += 1
    if rest == 1:
        return ClassificationResult(True, ZM_CLASSIFIED, (m, d, alpha, None, 0), params=p)
    if is_prime(rest):
        return ClassificationResult(True, ZM_CLASSIFIED, (m, d, alpha, rest, 1), params=p)
    return ClassificationResult(
        False, REJECTED, reason=f"n = {d}^{alpha} * {rest} with {rest} not prime", params=p)


def recognize_zm(G: FiniteGroup) -> tuple[ZmParams, int, int] | None:
    """Find (m, n, r) and elements a, b exhibiting G as ZM(m, n, r).

    Exhaustive: every coprime split |G| = m n, every a of order m and b of
    order n, accepting the first pair with b^-1 a b = a^r for a valid triple.
    Elements a, b satisfying the relations generate a quotient of ZM(m, n, r)
    of order at least |<a>||<b>| = mn, so G is isomorphic to it.
    """
    if G.is_abelian or not has_cyclic_sylows(G):
        return None
    orders = G.element_orders
    for m in divisors(G.order):
        n = G.order // m
        if m < 2 or n < 2 or gcd(m, n) != 1:
            continue
        a_cands = [int(x) for x in (orders == m).nonzero()[0]]
        b_cands = [int(x) for x in (orders == n).nonzero()[0]]
        for a in a_cands:
            exponent = {G.power(a, k): k for k in range(m)}
            for b in b_cands:
                conj = G.mul(G.mul(G.inv(b), a), b)
                r = exponent.get(conj)
                if r is None:
                    continue
                try:
                    return validate_zm_triple(m, n, r), a, b
                except InvalidZmTriple:
                    continue
    return None


def classify_group(G: FiniteGroup) -> ClassificationResult:
    if is_cyclic(G):
        return ClassificationResult(True, CYCLIC)
    found = recognize_zm(G)
    if found is None:
        return ClassificationResult(False, REJECTED, reason="neither cyclic nor a ZM-group")
    p = found[0]
    return classify_zm(p.m, p.n, p.r)


def enumerate_zm_triples(max_order: int) -> list[ZmParams]:
    """Every valid ZM triple with m * n <= max_order, in lexicographic order."""
    out = []
    for m in range(2, max_order // 2 + 1):
        for n in range(2, max_order // m + 1):
            if gcd(m, n) != 1:
                continue
            for r in range(2, m):
                try:
                    out.append(validate_zm_triple(m, n, r))
                except InvalidZmTriple:
                    pass
    return out


# p-group corpus ----------------------------------------------------------

def p_group_corpus(cap: int = DEFAULT_ORDER_CAP) -> list[tuple[str, FiniteGroup]]:
    """Cyclic p-groups of order <= 128 for p in 2, 3, 5, and the
    non-cyclic groups Q8, Q16, Q32, D8, D16, C2xC2, C3xC3, C5xC5."""
    groups = []
    for p in (2, 3, 5):
        q = p
        while q <= 128:
            groups.append((f"C{q}", make_cyclic(q, cap)))
            q *= p
    for k in (3, 4, 5):
        G = make_generalized_quaternion(k, cap)
        groups.append((G.label, G))
    for n in (4, 8):
        G = make_dihedral(n, cap)
        groups.append((G.label, G))
    for p in (2, 3, 5):
        C = make_cyclic(p, cap)
        G = make_direct_product(C, C)
        groups.append((G.label, G))
    return groups


def subgroups_of_order(G: FiniteGroup, k: int) -> int:
    return sum(1 for H in all_subgroups(G).nodes if H.order == k)


def unique_subgroup_of_prime_order(G: FiniteGroup) -> bool:
    """For a p-group G: does G have exactly one subgroup of order p?"""
    (p,) = factorize(G.order)
    return subgroups_of_order(G, p) == 1


# sweep -------------------------------------------------------------------

@dataclass
class SweepReport:
    max_order: int
    triples: int = 0
    agreements: int = 0
    disagreements: list[dict] = field(default_factory=list)
    cyclic_checked: int = 0
    corpus_checked: int = 0
    witnesses: dict[str, list[tuple[int, int, int]]] = field(
        default_factory=lambda: {"beta0": [], "beta1": []})
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def merge(self, other: SweepReport) -> SweepReport:
        witnesses = {k: sorted(set(self.witnesses[k]) | set(other.witnesses[k]))
                     for k in self.witnesses}
        return SweepReport(
            max(self.max_order, other.max_order),
            self.triples + other.triples,
            self.agreements + other.agreements,
            sorted(self.disagreements + other.disagreements, key=lambda d: d["group"]),
            self.cyclic_checked + other.cyclic_checked,
            self.corpus_checked + other.corpus_checked,
            witnesses,
            self.seconds + other.seconds,
        )

    def to_dict(self) -> dict:
        return {
            "max_order": self.max_order,
            "triples": self.triples,
            "agreements": self.agreements,
            "disagreements": self.disagreements,
            "cyclic_checked": self.cyclic_checked,
            "corpus_checked": self.corpus_checked,
            "witnesses": {k: [list(t) for t in v] for k, v in self.witnesses.items()},
            "seconds": round(self.seconds, 3),
        }


def _record(report: SweepReport, label: str, predicted: bool, brute: bool):
    if predicted == brute:
        report.agreements += 1
    else:
        report.disagreements.append({"group": label, "predicted": predicted, "brute_force": brute})


def verify_theorem(max_order: int, cap: int = DEFAULT_ORDER_CAP, cyclic: bool = True,
                   corpus: bool = True) -> SweepReport:
    """Compare the classification with brute-force density.

    Every ZM triple with m * n <= max_order is checked, then (optionally)
    every cyclic group of order <= max_order and the p-group corpus members
    of order <= max_order.
    """
    if max_order > cap:
        raise OrderCapExceeded(max_order, cap)
    start = time.perf_counter()
    report = SweepReport(max_order)
    for p in enumerate_zm_triples(max_order):
        result = classify_zm(p.m, p.n, p.r)
        brute = has_dense_solitary(zm_group(p, cap)).verdict
        report.triples += 1
        _record(report, str(p), result.verdict, brute)
        if result.branch == ZM_CLASSIFIED:
            key = "beta0" if result.detail[4] == 0 else "beta1"
            report.witnesses[key].append(p.triple)
    if cyclic:
        for n in range(1, max_order + 1):
            G = make_cyclic(n, cap)
            _record(report, G.label, classify_group(G).verdict, has_dense_solitary(G).verdict)
            report.cyclic_checked += 1
    if corpus:
        for label, G in p_group_corpus(cap):
            if G.order > max_order or is_cyclic(G):
                continue
            _record(report, label, classify_group(G).verdict, has_dense_solitary(G).verdict)
            report.corpus_checked += 1
    report.seconds = time.perf_counter() - start
    return report


def named_examples(cap: int = DEFAULT_ORDER_CAP) -> list[dict]:
    """Standard small examples of dense ZM-groups.

    The order-78 example is often quoted as (13, 6, 2), which is not a ZM
    triple since 2^6 = 12 mod 13; the row is kept as invalid and
    (13, 6, 12) is checked instead."""
    rows = []
    for triple, note in [((3, 2, 2), "S3"), ((13, 6, 2), "literal triple"),
                         ((13, 6, 12), "order-78 example, corrected r"),
                         ((3, 4, 2), "Dic3"), ((13, 12, 12), "order 156")]:
        row = {"triple": list(triple), "note": note}
        try:
            p = validate_zm_triple(*triple)
        except InvalidZmTriple as exc:
            row.update(valid=False, reason=exc.reason, message=str(exc))
        else:
            result = classify_zm(*triple)
            row.update(valid=True, order=p.order, d=p.d, predicted=result.verdict,
                       brute_force=has_dense_solitary(zm_group(p, cap)).verdict,
                       detail=list(result.detail) if result.detail else None)
        rows.append(row)
    return rows
