"""Finite groups, subgroup lattices, solitary subgroups and the dense
solitary subgroups property, with ZM-groups as the main example family."""

from .classify import (ClassificationResult, SweepReport, classify_group, classify_zm,
                       enumerate_zm_triples, named_examples, recognize_zm, verify_theorem)
from .density import DensityReport, has_dense_solitary
from .errors import (AbelianTriple, GcdViolation, GroupError, InvalidZmTriple,
                     OrderCapExceeded, OrderViolation, RangeViolation)
from .groups import (DEFAULT_ORDER_CAP, FiniteGroup, Subgroup, center, element_order,
                     make_cyclic, make_dihedral, make_direct_product,
                     make_generalized_quaternion)
from .lattice import (SubgroupLattice, all_subgroups, conjugates, generated_subgroup,
                      interval, is_maximal_in, is_normal)
from .numbertheory import factorize, is_prime, multiplicative_order
from .solitary import (IsoFingerprint, are_isomorphic, check_solitary_lattice, fingerprint,
                       solitary_subgroups)
from .zm import (SubgroupTriple, ZmElement, ZmParams, enumerate_triple_set,
                 triple_to_subgroup, validate_zm_triple, zm_group, zm_mul,
                 zm_solitary_triples)

__version__ = "0.1.0"
