"""Subgroup lattices, isomorphism classes and solitary subgroups.

Run with ``python demos/02_lattice_and_solitary.py``.  Pipe the DOT text at
the end through ``dot -Tpng`` to draw the Hasse diagram.
"""

# %% The lattice of the quaternion group
from densesol import (all_subgroups, are_isomorphic, make_dihedral,
                      make_generalized_quaternion, solitary_subgroups)
from densesol.cli import lattice_dot
from densesol.solitary import isomorphism_classes

Q8 = make_generalized_quaternion(3)
lat = all_subgroups(Q8)
print(f"{Q8.label}: {len(lat)} subgroups")
for i, j in lat.covers:
    print(f"  {lat.nodes[i].members.tolist()} < {lat.nodes[j].members.tolist()}")

# %% Isomorphism classes
# Q8 has three cyclic subgroups of order 4, all isomorphic, so none is solitary
for cls in isomorphism_classes(Q8):
    print(f"order {cls[0].order}: {len(cls)} subgroup(s)")
print("solitary orders:", [H.order for H in solitary_subgroups(Q8)])

# %% Same orders, different groups
D8 = make_dihedral(4)
print("D8 ~ Q8:", are_isomorphic(D8, Q8))
print("D8 solitary orders:", [H.order for H in solitary_subgroups(D8)])

# %% Hasse diagram
print(lattice_dot(Q8))
