"""
Permutation graphs and their two-order representations
======================================================

A permutation graph is one where both the graph and its complement can
be transitively oriented.  Merging an orientation of each yields two
linear orders; vertices are adjacent exactly when the orders disagree
about them, which is the classical picture of segments between two
parallel lines.  The automorphism group permutes these (orientation,
complement orientation) pairs without ever fixing one, which is what
caps the symmetry of prime permutation graphs at Z2 x Z2.
"""

from comparability import (
    Graph, build_representation, intersection_graph, is_permutation_graph,
    orientation_pairs, pair_action_orbits, prime_symmetry_class,
)
from comparability.permgraphs import representation_svg

p4 = Graph.path(4)
print(f"P4 is a permutation graph: {is_permutation_graph(p4)}")
print(f"C5 is a permutation graph: {is_permutation_graph(Graph.cycle(5))}")
print()

pairs = orientation_pairs(p4)
print(f"P4 has {len(pairs)} orientation pairs; each gives two orders:")
for p in pairs:
    rep = build_representation(p4, p)
    assert intersection_graph(rep) == p4      # the orders recover the graph
    print(f"  L1 = {rep.l1}   L2 = {rep.l2}")
print()

# the pair action is semiregular: every orbit has full group size, so
# counting orbits counts pairs up to symmetry
orbits = pair_action_orbits(p4)
print(f"pair orbits of P4: sizes {[len(o) for o in orbits]} "
      f"(|Aut(P4)| = 2)")

# prime permutation graphs carry at most Z2 x Z2, and each involution
# acts on the segment picture as a horizontal or vertical mirror or as
# a half-turn
cls = prime_symmetry_class(p4)
print(f"P4 symmetry class: {cls.subgroup}")
print()

# the segment picture itself, as SVG
svg = representation_svg(build_representation(p4, pairs[0]))
print(svg[:svg.index(">") + 1])
print(f"... {svg.count('<line')} segments, one per vertex")
