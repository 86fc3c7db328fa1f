"""Equivariant cohomology classes of orbit closures of symmetric subgroups
O(N), SO(2n) and Sp(2n) on the type A flag variety, computed by
divided-difference recursion from the closed orbits and checked by
localization at torus-fixed points."""

from .combinatorics import (Family, Permutation, SignedPermutation, SymmetricPairConfig,
                            enumerate_fpf_involutions, enumerate_involutions, rank_numbers)
from .polyring import LinearWeight, PolyRing, Polynomial, divided_difference, restrict_at_fixed_point
from .localization import (normal_weights, fixed_point_in_orbit_closure,
                           verify_closed_orbit_class, verify_vanishing_outside_closure)
from .weak_order import (OrbitParameter, WeakOrderGraph, component_representative,
                         generate_graph, resolve_split_edge, weak_order_step)
from .closed_orbits import ClosedOrbitDatum, closed_orbit_classes
from .class_engine import ClassTable, compute_classes, verify_table
from .degeneracy import (ChernFormula, FlagBasis, gram_matrix, representative_flag,
                         to_chern_formula, verify_orbit_membership)

__version__ = "0.1.0"

__all__ = [
    "Family", "Permutation", "SignedPermutation", "SymmetricPairConfig",
    "enumerate_involutions", "enumerate_fpf_involutions", "rank_numbers",
    "LinearWeight", "PolyRing", "Polynomial", "divided_difference", "restrict_at_fixed_point",
    "normal_weights", "fixed_point_in_orbit_closure", "verify_closed_orbit_class",
    "verify_vanishing_outside_closure", "OrbitParameter", "WeakOrderGraph",
    "component_representative", "generate_graph", "resolve_split_edge", "weak_order_step",
    "ClosedOrbitDatum", "closed_orbit_classes", "ClassTable", "compute_classes",
    "verify_table", "ChernFormula", "FlagBasis", "gram_matrix", "representative_flag",
    "to_chern_formula", "verify_orbit_membership",
]
