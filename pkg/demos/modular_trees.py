"""
Modular decomposition trees
===========================

A module is a vertex set whose members look identical from the outside.
Gallai's decomposition splits a graph along its modules into a rooted
tree whose internal nodes are complete, independent, or prime, and that
tree determines almost everything this package computes.
"""

from comparability import Graph, build_modular_tree
from comparability.modular import tree_to_dot

# a graph assembled from obvious modules: two ends of a path blown up
# into a triangle and a pair of twins
g = Graph(7, [(0, 1), (0, 2), (1, 2),            # triangle, one module
              (0, 3), (1, 3), (2, 3),
              (3, 4),
              (4, 5), (4, 6), (5, 6)])           # triangle again

t = build_modular_tree(g)
nodes = sorted(t.nodes, key=lambda nd: nd.id)
root = next(nd for nd in nodes if nd.id == t.root)
print(f"graph with {g.n} vertices, {g.num_edges} edges")
print(f"tree has {len(nodes)} nodes, root kind {root.kind}")
print()

for node in nodes:
    below = " ".join(str(v) for v in node.vertices_under)
    kind = "leaf" if node.is_leaf else node.kind
    print(f"  node {node.id:2d}  {kind:12s}  covers: {below}")

# the same structure as DOT, ready for graphviz
print()
print(tree_to_dot(t))

# a prime graph decomposes into a single prime root over leaves
tp = build_modular_tree(Graph.path(4))
root_kind = next(nd for nd in tp.nodes if nd.id == tp.root).kind
print(f"P4 root kind: {root_kind} (prime graphs are their own quotient)")
