"""Modular decomposition and the marker tree that encodes it.

One decomposition step partitions the vertex set into modules:

* disconnected graph          -> connected components (quotient edgeless)
* disconnected complement     -> co-components (quotient complete)
* both connected              -> inclusion-maximal proper modules
                                 (quotient prime)
* prime or degenerate graph   -> stop

Recursing yields the modular tree. Each composite step becomes an inner
node whose members are fresh quotient markers m_1..m_k; each child subtree
is entered through an attachment marker m'_i adjacent to exactly the root
node of that subtree, and a directed tree edge m_i -> m'_i links the two.
Leaf nodes hold original vertices; inner nodes hold only markers. The
original adjacency is recoverable from alternating normal/tree-edge paths
(see ``alternating_path_adjacent``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
import json

from .errors import InputError
from .graphs import Edge, Graph, is_degenerate

STOP = "stop"
MAXIMAL_MODULES = "maximal_modules"
COMPONENTS = "components"
COCOMPONENTS = "cocomponents"

PRIME = "prime"
COMPLETE = "complete"
INDEPENDENT = "independent"


@dataclass(frozen=True)
class ModularPartition:
    """Result of one decomposition step: a kind tag plus the blocks,
    each block sorted, blocks ordered by (size, contents)."""
    kind: str
    blocks: tuple[tuple[int, ...], ...]


def _module_closure(g: Graph, u: int, v: int) -> int:
    """Bitmask of the smallest module containing {u, v}: any vertex that
    distinguishes two members must be absorbed."""
    mask = 1 << u | 1 << v
    changed = True
    while changed:
        changed = False
        for w in range(g.n):
            if mask >> w & 1:
                continue
            inter = g.adjacency_mask(w) & mask
            if inter != 0 and inter != mask:
                mask |= 1 << w
                changed = True
    return mask


def _maximal_proper_modules(g: Graph) -> list[int]:
    """Maximal modules other than V itself, as bitmasks, for a graph whose
    complement and self are both connected. Overlapping modules merge into
    modules, and in this branch a merge can never reach all of V."""
    full = (1 << g.n) - 1
    cands: list[int] = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            m = _module_closure(g, u, v)
            if m != full:
                cands.append(m)
    merged: list[int] = []
    for m in cands:
        group = m
        keep = []
        for other in merged:
            if group & other:
                group |= other
            else:
                keep.append(other)
        assert group != full, "overlapping proper modules covered V"
        keep.append(group)
        merged = keep
    covered = 0
    for m in merged:
        covered |= m
    for v in range(g.n):
        if not covered >> v & 1:
            merged.append(1 << v)
    return sorted(merged, key=lambda m: (bin(m).count("1"), m))


def _mask_to_block(mask: int, n: int) -> tuple[int, ...]:
    return tuple(v for v in range(n) if mask >> v & 1)


def decomposition_step(g: Graph) -> ModularPartition:
    """Single Gallai step; see the module docstring for the case split."""
    if g.n == 0:
        raise InputError("decomposition_step needs at least one vertex")
    singletons = tuple((v,) for v in range(g.n))
    if g.n == 1 or is_degenerate(g):
        return ModularPartition(STOP, singletons)
    comps = g.connected_components()
    if len(comps) > 1:
        blocks = sorted(comps, key=lambda b: (len(b), b))
        return ModularPartition(COMPONENTS, tuple(blocks))
    co = g.complement().connected_components()
    if len(co) > 1:
        blocks = sorted(co, key=lambda b: (len(b), b))
        return ModularPartition(COCOMPONENTS, tuple(blocks))
    masks = _maximal_proper_modules(g)
    if all(bin(m).count("1") == 1 for m in masks):
        return ModularPartition(STOP, singletons)  # prime
    blocks = tuple(_mask_to_block(m, g.n) for m in masks)
    return ModularPartition(MAXIMAL_MODULES, blocks)


def quotient(g: Graph, blocks: tuple[tuple[int, ...], ...]) -> Graph:
    """Quotient graph with one vertex per block, in block order."""
    from .graphs import is_module
    seen: set[int] = set()
    for b in blocks:
        if not b:
            raise InputError("empty block in partition")
        if not is_module(g, b):
            raise InputError(f"block {b} is not a module")
        if seen & set(b):
            raise InputError(f"block {b} overlaps another block")
        seen |= set(b)
    if seen != set(range(g.n)):
        raise InputError("blocks do not cover the vertex set")
    k = len(blocks)
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)
             if g.has_edge(blocks[i][0], blocks[j][0])]
    return Graph(k, edges)


# -- the tree ------------------------------------------------------------

@dataclass(frozen=True)
class TreeNode:
    id: int
    kind: str                        # prime | complete | independent
    is_leaf: bool
    members: tuple[int, ...]         # original vertices (leaf) or markers
    children: tuple[int, ...]        # child node ids, aligned with members
    attach_markers: tuple[int, ...]  # m'_i, aligned with children
    vertices_under: tuple[int, ...]  # original vertices below this node


@dataclass(frozen=True)
class ModularTree:
    n: int                     # original vertex count; markers start at n
    total_vertices: int
    root: int
    nodes: tuple[TreeNode, ...]
    normal_edges: frozenset[Edge]
    tree_edges: frozenset[tuple[int, int]]   # directed (m_i, m'_i)
    marker_origin: tuple[tuple[int, int], ...]  # (marker id, node id)

    def is_marker(self, v: int) -> bool:
        return v >= self.n

    def node_graph(self, node_id: int) -> Graph:
        """Graph on the node's members, relabeled by member position."""
        node = self.nodes[node_id]
        pos = {v: i for i, v in enumerate(node.members)}
        edges = [(pos[u], pos[v]) for u, v in self.normal_edges
                 if u in pos and v in pos]
        return Graph(len(node.members), edges)

    @cached_property
    def _normal_adj(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in range(self.total_vertices)}
        for u, v in self.normal_edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    @cached_property
    def _tree_adj(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in range(self.total_vertices)}
        for u, v in self.tree_edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


def _classify_leaf(g: Graph) -> str:
    if g.num_edges == g.n * (g.n - 1) // 2:
        return COMPLETE          # includes K_1
    if g.num_edges == 0:
        return INDEPENDENT
    return PRIME


_INNER_KIND = {MAXIMAL_MODULES: PRIME, COMPONENTS: INDEPENDENT,
               COCOMPONENTS: COMPLETE}


class _TreeBuilder:
    def __init__(self, g: Graph):
        self.g = g
        self.next_vertex = g.n
        self.nodes: list[TreeNode | None] = []
        self.normal: set[Edge] = set()
        self.tree: set[tuple[int, int]] = set()
        self.origin: list[tuple[int, int]] = []

    def _alloc(self, node_id: int, count: int) -> list[int]:
        out = list(range(self.next_vertex, self.next_vertex + count))
        self.next_vertex += count
        self.origin.extend((m, node_id) for m in out)
        return out

    def build(self, vs: tuple[int, ...]) -> int:
        local = self.g.induced(vs)
        back = dict(enumerate(vs))  # local id -> global id
        step = decomposition_step(local)
        node_id = len(self.nodes)
        self.nodes.append(None)
        if step.kind == STOP:
            self.normal.update(
                (min(back[u], back[v]), max(back[u], back[v]))
                for u, v in local.edges)
            self.nodes[node_id] = TreeNode(
                node_id, _classify_leaf(local), True, tuple(vs), (), (),
                tuple(vs))
            return node_id
        blocks = [tuple(back[v] for v in b) for b in step.blocks]
        blocks.sort(key=lambda b: (len(b), b))
        k = len(blocks)
        markers = self._alloc(node_id, k)
        attach = self._alloc(node_id, k)
        for i in range(k):
            for j in range(i + 1, k):
                if self.g.has_edge(blocks[i][0], blocks[j][0]):
                    self.normal.add((markers[i], markers[j]))
            self.tree.add((markers[i], attach[i]))
        children = []
        for i, block in enumerate(blocks):
            child_id = self.build(block)
            children.append(child_id)
            child = self.nodes[child_id]
            assert child is not None
            self.normal.update(
                (min(attach[i], w), max(attach[i], w))
                for w in child.members)
        self.nodes[node_id] = TreeNode(
            node_id, _INNER_KIND[step.kind], False, tuple(markers),
            tuple(children), tuple(attach), tuple(vs))
        return node_id


def build_modular_tree(g: Graph) -> ModularTree:
    """The (unique) modular tree of a nonempty graph."""
    if g.n == 0:
        raise InputError("build_modular_tree needs at least one vertex")
    b = _TreeBuilder(g)
    root = b.build(tuple(range(g.n)))
    nodes = tuple(node for node in b.nodes if node is not None)
    assert len(nodes) == len(b.nodes)
    return ModularTree(g.n, b.next_vertex, root, nodes,
                       frozenset(b.normal), frozenset(b.tree),
                       tuple(b.origin))


def alternating_path_adjacent(t: ModularTree, x: int, y: int) -> bool:
    """True iff the tree contains a path x m_1 .. m_2k y whose interior is
    all markers and whose edges alternate normal, tree, normal, ..,
    normal. For original vertices this recovers adjacency in the source
    graph."""
    for v in (x, y):
        if not 0 <= v < t.n:
            raise InputError(f"vertex {v} is not an original vertex")
    if x == y:
        return False
    normal_adj = t._normal_adj
    tree_adj = t._tree_adj
    # state: (vertex, next edge kind); True = next hop is a normal edge
    seen = {(x, True)}
    stack: list[tuple[int, bool]] = [(x, True)]
    while stack:
        v, expect_normal = stack.pop()
        if expect_normal:
            for u in normal_adj[v]:
                if u == y:
                    return True
                if t.is_marker(u) and (u, False) not in seen:
                    seen.add((u, False))
                    stack.append((u, False))
        else:
            for u in tree_adj[v]:
                if (u, True) not in seen:
                    seen.add((u, True))
                    stack.append((u, True))
    return False


# -- serialization -------------------------------------------------------

def tree_to_json(t: ModularTree) -> str:
    data = {
        "vertex_count": t.n,
        "marker_count": t.total_vertices - t.n,
        "root": t.root,
        "nodes": [
            {
                "id": node.id,
                "kind": node.kind,
                "leaf": node.is_leaf,
                "members": list(node.members),
                "children": list(node.children),
                "attach_markers": list(node.attach_markers),
                "vertices": list(node.vertices_under),
            }
            for node in t.nodes
        ],
        "normal_edges": sorted(map(list, t.normal_edges)),
        "tree_edges": sorted(map(list, t.tree_edges)),
        "marker_origin": sorted(map(list, t.marker_origin)),
    }
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def tree_to_dot(t: ModularTree) -> str:
    """DOT rendering: markers hollow, originals filled, tree edges dashed
    arrows."""
    lines = ["graph modular_tree {"]
    for v in range(t.total_vertices):
        if t.is_marker(v):
            lines.append(f'  {v} [shape=circle, style=solid, label="m{v}"];')
        else:
            lines.append(f"  {v} [shape=circle, style=filled, "
                         f"fillcolor=lightgray];")
    for u, v in sorted(t.normal_edges):
        lines.append(f"  {u} -- {v};")
    for u, v in sorted(t.tree_edges):
        lines.append(f"  {u} -- {v} [style=dashed, dir=forward];")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- structural validation (test support) --------------------------------

def check_tree(t: ModularTree, g: Graph) -> None:
    """Assert every structural invariant of the tree against its source
    graph. Exponential checks included; call on small graphs only."""
    from .graphs import is_module, is_prime
    assert t.n == g.n
    leaves = [v for node in t.nodes if node.is_leaf for v in node.members]
    assert sorted(leaves) == list(range(g.n)), "leaf members must tile V"
    for node in t.nodes:
        if node.is_leaf:
            assert not node.children and not node.attach_markers
            assert all(v < t.n for v in node.members)
        else:
            assert all(v >= t.n for v in node.members)
            assert len(node.children) == len(node.members) == \
                len(node.attach_markers) >= 2
        local = t.node_graph(node.id)
        if node.kind == COMPLETE:
            assert local.num_edges == local.n * (local.n - 1) // 2
        elif node.kind == INDEPENDENT:
            assert local.num_edges == 0
        else:
            assert is_prime(local), f"node {node.id} marked prime is not"
        rel = {v: i for i, v in enumerate(sorted(node.vertices_under))}
        gsub = g.induced(node.vertices_under)
        for child_id in node.children:
            child = t.nodes[child_id]
            assert is_module(gsub, [rel[v] for v in child.vertices_under])
    # each attachment marker neighbors exactly its child root node
    adj = t._normal_adj
    for node in t.nodes:
        for child_id, mprime in zip(node.children, node.attach_markers):
            child = t.nodes[child_id]
            assert adj[mprime] == set(child.members)
    # tree edges form a perfect pairing of markers
    paired: set[int] = set()
    for a, b in t.tree_edges:
        assert a not in paired and b not in paired
        paired.update((a, b))
    assert paired == set(range(t.n, t.total_vertices))
    # adjacency is recoverable through alternating paths
    for x in range(g.n):
        for y in range(x + 1, g.n):
            assert alternating_path_adjacent(t, x, y) == g.has_edge(x, y)


def typed_tree_graph(t: ModularTree) -> tuple[Graph, tuple[int, ...]]:
    """Encode the tree as a vertex-colored simple graph for isomorphism
    testing: colors distinguish originals, quotient markers, attachment
    markers, and a dummy vertex planted on every tree edge."""
    attach = {b for _, b in t.tree_edges}
    colors = []
    for v in range(t.total_vertices):
        if v < t.n:
            colors.append(0)
        elif v in attach:
            colors.append(2)
        else:
            colors.append(1)
    edges = [tuple(e) for e in t.normal_edges]
    nxt = t.total_vertices
    for a, b in sorted(t.tree_edges):
        edges.append((a, nxt))
        edges.append((nxt, b))
        colors.append(3)
        nxt += 1
    return Graph(nxt, edges), tuple(colors)


def trees_isomorphic(t1: ModularTree, t2: ModularTree,
                     max_n: int = 40) -> bool:
    """Typed-tree isomorphism via the colored encoding."""
    from .oracles import brute_force_iso
    g1, c1 = typed_tree_graph(t1)
    g2, c2 = typed_tree_graph(t2)
    return brute_force_iso(g1, g2, max_n=max_n,
                           colors1=c1, colors2=c2) is not None
