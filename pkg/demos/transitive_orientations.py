"""
Enumerating transitive orientations
===================================

A comparability graph is one whose edges can be directed so the arc
relation is transitive.  All freedom lives in the modular tree: every
prime node contributes an independent binary flip and every complete
node a free linear order of its children, so the count is
2^(#prime) * product of k! over complete nodes.
"""

from math import factorial

from comparability import (
    Graph, build_modular_tree, count_orientations, is_comparability,
    transitive_orientations,
)
from comparability.graphs import substitute

p4 = Graph.path(4)
print(f"P4 is comparability: {is_comparability(p4)}")
for o in transitive_orientations(p4):
    arcs = " ".join(f"{u}>{v}" for u, v in o.sorted_arcs())
    print(f"  {arcs}")

# an odd cycle admits no transitive orientation at all
print(f"C5 is comparability: {is_comparability(Graph.cycle(5))}")
print()

# the counting formula, spelled out on a composite graph: a triangle
# with one vertex blown up into P4
g, _ = substitute(Graph.path(4), {0: Graph.complete(3)})
t = build_modular_tree(g)
primes = sum(nd.kind == "prime" for nd in t.nodes)
completes = [len(nd.members) for nd in t.nodes
             if nd.kind == "complete" and len(nd.members) > 1]
predicted = 2 ** primes
for k in completes:
    predicted *= factorial(k)
terms = " * ".join(f"{k}!" for k in completes)
print(f"K3 substituted into P4: {primes} prime node(s), "
      f"complete sizes {completes}")
print(f"predicted 2^{primes} * {terms} = {predicted}, "
      f"counted = {count_orientations(t)}")

# complete graphs are one big complete node: n! orientations
for n in (3, 4, 5):
    t = build_modular_tree(Graph.complete(n))
    print(f"K{n}: {count_orientations(t)} orientations")
