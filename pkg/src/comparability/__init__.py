"""Comparability, permutation, and k-dimensional comparability graphs.

The package builds Gallai modular decomposition trees, assembles
automorphism groups from them, enumerates transitive orientations,
produces two-linear-order representations of permutation graphs, and
constructs the path gadget that pins comparability dimension at four.
Every structural routine is backed by a small brute-force oracle in
:mod:`comparability.oracles` so claims can be checked exhaustively at
desk scale.
"""

from .errors import ComparabilityError, DomainError, InputError, OracleBoundError
from .graphs import Graph
from .modular import ModularTree, alternating_path_adjacent, build_modular_tree
from .groups import aut_tree, realize
from .orientations import (
    count_orientations, is_comparability, transitive_orientations,
)
from .permgraphs import (
    build_representation, gadget_product, gadget_rectangle, gadget_wreath,
    intersection_graph, is_permutation_graph, orientation_pairs,
    pair_action_orbits, prime_symmetry_class,
)
from .dim4 import (
    aut_preservation_check, construct_cx, four_chains, gi_reduction,
    incidence_graph, recover_pqr, verify_chain_intersection,
)

__version__ = "0.1.0"

__all__ = [
    "ComparabilityError", "DomainError", "InputError", "OracleBoundError",
    "Graph",
    "ModularTree", "alternating_path_adjacent", "build_modular_tree",
    "aut_tree", "realize",
    "count_orientations", "is_comparability", "transitive_orientations",
    "build_representation", "gadget_product", "gadget_rectangle",
    "gadget_wreath", "intersection_graph", "is_permutation_graph",
    "orientation_pairs", "pair_action_orbits", "prime_symmetry_class",
    "aut_preservation_check", "construct_cx", "four_chains", "gi_reduction",
    "incidence_graph", "recover_pqr", "verify_chain_intersection",
]
