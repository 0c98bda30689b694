"""
Automorphism groups from the modular tree
=========================================

The automorphism group of a graph equals the automorphism group of its
modular tree, and the tree makes the group's shape explicit: symmetric
groups for interchangeable module copies, wreath products for copies
that can also be permuted internally, and rigid prime quotients that
contribute nothing.  aut_tree returns both a structural expression and
the concrete permutation group, and we cross-check the latter against
the exhaustive oracle.
"""

from comparability import Graph, aut_tree, build_modular_tree, realize
from comparability.graphs import disjoint_union
from comparability.oracles import brute_force_aut

samples = [
    ("P4", Graph.path(4)),
    ("K4", Graph.complete(4)),
    ("C6", Graph.cycle(6)),
    ("3 x K2", disjoint_union([Graph.complete(2)] * 3)),
    ("star K1,3", Graph(4, [(0, 1), (0, 2), (0, 3)])),
    ("P4 join P4", Graph(8, [(0, 1), (1, 2), (2, 3),
                             (4, 5), (5, 6), (6, 7)]
                         + [(a, b) for a in range(4)
                            for b in range(4, 8)])),
]

for name, g in samples:
    expr, group = aut_tree(build_modular_tree(g))
    oracle = brute_force_aut(g)
    assert group.order() == oracle.order() == realize(expr)
    print(f"{name:12s}  |Aut| = {group.order():4d}   {expr}")

print()

# the wreath case in slow motion: 3 disjoint copies of K2 give the
# swap inside each copy, wreathed by the S3 permuting the copies
g = disjoint_union([Graph.complete(2)] * 3)
expr, group = aut_tree(build_modular_tree(g))
print(f"three K2 copies: {expr}, order {realize(expr)} = 2^3 * 3!")

# the concrete group is a list of honest vertex permutations
sample = sorted(group.elements())[:4]
for p in sample:
    print(f"  {p}")
print(f"  ... {group.order()} elements in total")
