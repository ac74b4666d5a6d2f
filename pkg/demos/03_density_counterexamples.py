"""Deciding the dense solitary subgroups property by brute force.

Run with ``python demos/03_density_counterexamples.py``.
"""

# %% Dense and non-dense groups
from densesol import (has_dense_solitary, make_cyclic, make_dihedral,
                      make_generalized_quaternion, validate_zm_triple, zm_group)
from densesol.density import verify_counterexample

groups = [make_cyclic(12), zm_group(validate_zm_triple(3, 2, 2)),
          zm_group(validate_zm_triple(5, 4, 2)), make_generalized_quaternion(3),
          make_dihedral(4)]
for G in groups:
    rep = has_dense_solitary(G)
    line = f"{G.label:>14}: {rep.solitary}/{rep.subgroups} solitary, dense = {rep.verdict}"
    if rep.counterexample:
        H, K = rep.counterexample
        line += f", gap between orders {H.order} and {K.order}"
    print(line)

# %% Checking a counterexample independently
# in Q8 nothing solitary sits strictly between the center and the whole group
Q8 = make_generalized_quaternion(3)
H, K = has_dense_solitary(Q8).counterexample
print("counterexample holds:", verify_counterexample(Q8, H, K))
