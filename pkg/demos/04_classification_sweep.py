"""Comparing the arithmetic classification with brute force.

Run with ``python demos/04_classification_sweep.py [max_order]`` (default
120; 400 takes about half a minute).
"""

import sys

# %% The predicate on a few triples
from densesol import classify_zm, verify_theorem
from densesol.classify import classify_group, recognize_zm
from densesol.groups import make_dihedral

for triple in [(3, 2, 2), (3, 4, 2), (13, 12, 12), (5, 4, 2), (7, 30, 6)]:
    result = classify_zm(*triple)
    name = "ZM({},{},{})".format(*triple)
    print(f"{name}: {result.verdict} [{result.branch}] {result.detail or result.reason}")

# %% Recognising a group given only its Cayley table
D5 = make_dihedral(5)
params, a, b = recognize_zm(D5)
print(f"{D5.label} is {params} with a = {a}, b = {b}: {classify_group(D5).verdict}")

# %% The sweep
max_order = int(sys.argv[1]) if len(sys.argv) > 1 else 120
report = verify_theorem(max_order)
print(f"{report.triples} ZM triples, {report.cyclic_checked} cyclic groups, "
      f"{report.corpus_checked} p-groups: {len(report.disagreements)} disagreements "
      f"in {report.seconds:.1f} s")
print("beta = 0 witnesses:", report.witnesses["beta0"][:5])
print("beta = 1 witnesses:", report.witnesses["beta1"][:5])
