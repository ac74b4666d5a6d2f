"""ZM-group arithmetic and the triple parametrisation of subgroups.

Run with ``python demos/01_zm_arithmetic.py``.
"""

# %% Validating triples
from densesol import (InvalidZmTriple, enumerate_triple_set, triple_to_subgroup,
                      validate_zm_triple, zm_group, zm_mul, zm_solitary_triples)
from densesol.zm import ZmElement

for triple in [(3, 2, 2), (3, 4, 2), (13, 6, 2), (13, 6, 12), (5, 4, 1)]:
    try:
        p = validate_zm_triple(*triple)
        print(f"{p}: order {p.order}, d = o_m(r) = {p.d}")
    except InvalidZmTriple as exc:
        print("ZM({},{},{}):".format(*triple), f"rejected ({exc.reason}): {exc}")

# %% Multiplying in normal form
# an element a^y b^x is stored as (x, y); b^-1 a b = a^r
p = validate_zm_triple(3, 4, 2)
a, b = ZmElement(0, 1), ZmElement(1, 0)
print("a * b =", zm_mul(p, a, b))
print("b * a =", zm_mul(p, b, a))

# %% Subgroups from triples
# every subgroup of ZM(3,4,2) comes from exactly one triple (m1, n1, s)
G = zm_group(p)
for t in enumerate_triple_set(p):
    H = triple_to_subgroup(p, t, G)
    print(f"{tuple(t)} -> order {H.order:2d}, members {H.members.tolist()}")

print("solitary triples:", [tuple(t) for t in zm_solitary_triples(p)])
