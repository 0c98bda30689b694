"""Transitive orientations through the modular tree.

A transitive orientation directs every edge so that u->v and v->w force
u->w.  Prime graphs admit at most two, each the reversal of the other;
complete graphs K_k admit one per linear order, k! in total; edgeless
graphs exactly one (the empty one).  Any comparability graph composes
these node by node along its modular tree, and every transitive
orientation of the whole graph arises from exactly one choice vector.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, InputError, OracleBoundError
from .graphs import Graph, is_prime
from .modular import COMPLETE, PRIME, ModularTree, build_modular_tree
from .oracles import DEFAULT_VERTEX_BOUND, brute_force_aut
from .perms import Permutation, PermutationGroup

DEFAULT_EDGE_BOUND = 20


@dataclass(frozen=True)
class Orientation:
    """One direction per edge of an underlying graph."""

    graph: Graph
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        object.__setattr__(self, "arcs",
                           frozenset((int(u), int(v)) for u, v in self.arcs))
        covered = {tuple(sorted(a)) for a in self.arcs}
        if len(self.arcs) != self.graph.num_edges or \
                covered != set(self.graph.edges):
            raise InputError("arcs must cover each edge exactly once")

    def sorted_arcs(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.arcs))

    def reversed(self) -> "Orientation":
        return Orientation(self.graph, frozenset((v, u) for u, v in self.arcs))

    def __repr__(self) -> str:
        return f"Orientation({list(self.sorted_arcs())!r})"


def _arcs_transitive(n: int, arcs) -> bool:
    succ = [0] * n
    for u, v in arcs:
        succ[u] |= 1 << v
    return all(succ[v] & ~succ[u] == 0 for u, v in arcs)


def is_transitive(g: Graph, o: Orientation) -> bool:
    """True when no arc pair u->v->w misses the shortcut arc u->w."""
    if o.graph != g:
        raise InputError("orientation does not cover this graph's edges")
    return _arcs_transitive(g.n, o.arcs)


def brute_force_transitive_orientations(g: Graph, max_edges: int = DEFAULT_EDGE_BOUND
                                        ) -> tuple[Orientation, ...]:
    """All transitive orientations by trying every direction assignment.

    Deterministic: assignments are scanned in ascending bitmask order,
    where bit k set means edge k runs high-to-low.
    """
    edges = g.edges
    m = len(edges)
    if m > max_edges:
        raise OracleBoundError(
            f"{m} edges exceeds the orientation oracle bound max_edges={max_edges}")
    found = []
    for mask in range(1 << m):
        arcs = [(v, u) if mask >> k & 1 else (u, v)
                for k, (u, v) in enumerate(edges)]
        if _arcs_transitive(g.n, arcs):
            found.append(Orientation(g, frozenset(arcs)))
    return tuple(found)


# -- forcing on prime graphs ----------------------------------------------

def _force_from_seed(g: Graph) -> tuple[frozenset | None, bool]:
    """Propagate forced directions from the first edge.

    An arc a->b forces a->c for every c adjacent to a but not b, and
    c->b for every c adjacent to b but not a.  Returns (arcs, complete);
    arcs is None when both directions of some edge got forced.  complete
    is False when edges remain untouched, which cannot happen on a prime
    graph (its forcing relation links all edges).
    """
    edges = g.edges
    if not edges:
        return frozenset(), True
    chosen: dict[tuple[int, int], tuple[int, int]] = {}
    stack = [edges[0]]
    chosen[edges[0]] = edges[0]

    def push(x: int, y: int) -> bool:
        key = (x, y) if x < y else (y, x)
        prev = chosen.get(key)
        if prev is None:
            chosen[key] = (x, y)
            stack.append((x, y))
            return True
        return prev == (x, y)

    while stack:
        a, b = stack.pop()
        for c in g.neighbors(a):
            if c != b and not g.has_edge(c, b):
                if not push(a, c):
                    return None, True
        for c in g.neighbors(b):
            if c != a and not g.has_edge(c, a):
                if not push(c, b):
                    return None, True
    return frozenset(chosen.values()), len(chosen) == len(edges)


def _prime_graph_orientations(g: Graph, max_edges: int
                              ) -> tuple[Orientation, Orientation] | None:
    """Both transitive orientations of a prime graph, or None."""
    arcs, complete = _force_from_seed(g)
    if arcs is not None and complete:
        if not _arcs_transitive(g.n, arcs):
            return None
        o = Orientation(g, arcs)
        return o, o.reversed()
    if arcs is None:
        # the seed direction led to a conflict; by symmetry so does the
        # other one, hence no transitive orientation at all
        return None
    both = brute_force_transitive_orientations(g, max_edges)
    if not both:
        return None
    assert len(both) == 2, "prime graph with more than two orientations"
    return both[0], both[1]


def prime_orientations(g: Graph, max_edges: int = DEFAULT_EDGE_BOUND
                       ) -> tuple[Orientation, Orientation]:
    """The two transitive orientations of a prime comparability graph."""
    if not is_prime(g):
        raise InputError("graph is not prime")
    pair = _prime_graph_orientations(g, max_edges)
    if pair is None:
        raise DomainError("prime graph is not a comparability graph")
    return pair


def is_comparability(g: Graph, max_edges: int = DEFAULT_EDGE_BOUND) -> bool:
    """A graph is comparability iff every node of its modular tree is.

    Degenerate nodes always are; prime nodes are settled by forcing (the
    exhaustive oracle only serves as a fallback and the bound only
    applies there).
    """
    t = build_modular_tree(g)
    for node in t.nodes:
        if node.kind == PRIME:
            if _prime_graph_orientations(t.node_graph(node.id), max_edges) is None:
                return False
    return True


# -- composing orientations from the tree ---------------------------------

@dataclass(frozen=True)
class OrientationChoice:
    """One decision per tree node that has any freedom.

    prime_bits holds (node id, 0 or 1): 0 is the forcing-seeded
    orientation of the node graph, 1 its reversal.  linear_orders holds
    (node id, members of a complete node in the chosen order); earlier
    members point at later ones.
    """

    prime_bits: tuple[tuple[int, int], ...]
    linear_orders: tuple[tuple[int, tuple[int, ...]], ...]


@lru_cache(maxsize=None)
def _choice_slots(t: ModularTree) -> tuple[tuple[int, ...],
                                           tuple[tuple[int, tuple[int, ...]], ...]]:
    """Node ids needing a prime bit, and (id, members) needing an order."""
    prime_ids = []
    complete_slots = []
    for node in t.nodes:
        if node.kind == PRIME:
            prime_ids.append(node.id)
        elif node.kind == COMPLETE and len(node.members) >= 2:
            complete_slots.append((node.id, node.members))
    return tuple(prime_ids), tuple(complete_slots)


@lru_cache(maxsize=None)
def _prime_node_plans(t: ModularTree, max_edges: int
                      ) -> dict[int, tuple[frozenset, frozenset]]:
    """Per prime node: its two orientations, written in member ids."""
    plans = {}
    for node in t.nodes:
        if node.kind != PRIME:
            continue
        pair = _prime_graph_orientations(t.node_graph(node.id), max_edges)
        if pair is None:
            raise DomainError(
                f"not a comparability graph: tree node {node.id} has no "
                "transitive orientation")
        plans[node.id] = tuple(
            frozenset((node.members[a], node.members[b]) for a, b in o.arcs)
            for o in pair)
    return plans


def _local_edges(t: ModularTree, node_id: int) -> list[tuple[int, int]]:
    inside = set(t.nodes[node_id].members)
    return [(u, v) for u, v in t.normal_edges if u in inside and v in inside]


def orientation_choices(t: ModularTree, max_edges: int = DEFAULT_EDGE_BOUND):
    """Iterate every choice vector exactly once.

    Prime bits vary before complete-node orders; within each kind, nodes
    go in id order and the last slot moves fastest.
    """
    prime_ids, complete_slots = _choice_slots(t)
    _prime_node_plans(t, max_edges)   # fail fast on non-comparability
    options = [(0, 1)] * len(prime_ids) + \
              [tuple(itertools.permutations(ms)) for _, ms in complete_slots]

    def stream():
        for combo in itertools.product(*options):
            bits = combo[:len(prime_ids)]
            orders = combo[len(prime_ids):]
            yield OrientationChoice(
                prime_bits=tuple(zip(prime_ids, bits)),
                linear_orders=tuple(zip((nid for nid, _ in complete_slots),
                                        orders)))

    return stream()


def compose_orientation(t: ModularTree, c: OrientationChoice,
                        max_edges: int = DEFAULT_EDGE_BOUND) -> Orientation:
    """Expand per-node decisions into an orientation of the whole graph.

    A quotient arc m_i -> m_j orients every edge between the two child
    blocks from block i to block j; leaf arcs orient themselves.
    """
    prime_ids, complete_slots = _choice_slots(t)
    bits = dict(c.prime_bits)
    orders = dict(c.linear_orders)
    if sorted(bits) != sorted(prime_ids) or \
            any(b not in (0, 1) for b in bits.values()):
        raise InputError("choice must give each prime node a bit in {0, 1}")
    expected = {nid: ms for nid, ms in complete_slots}
    if sorted(orders) != sorted(expected):
        raise InputError("choice must give each complete node one order")
    for nid, order in orders.items():
        if tuple(sorted(order)) != expected[nid]:
            raise InputError(
                f"order for node {nid} is not a permutation of its members")

    plans = _prime_node_plans(t, max_edges)
    arcs: set[tuple[int, int]] = set()
    for node in t.nodes:
        locals_ = _local_edges(t, node.id)
        if not locals_:
            continue
        if node.kind == PRIME:
            chosen = plans[node.id][bits[node.id]]
            directed = {tuple(sorted(a)): a for a in chosen}
        else:
            rank = {m: i for i, m in enumerate(orders[node.id])}
            directed = {tuple(sorted((a, b))):
                        ((a, b) if rank[a] < rank[b] else (b, a))
                        for a, b in locals_}
        if node.is_leaf:
            under = {m: (m,) for m in node.members}
        else:
            under = {m: t.nodes[ch].vertices_under
                     for m, ch in zip(node.members, node.children)}
        for a, b in locals_:
            tail, head = directed[tuple(sorted((a, b)))]
            for u in under[tail]:
                for v in under[head]:
                    arcs.add((u, v))

    edges = sorted(tuple(sorted(a)) for a in arcs)
    return Orientation(Graph(t.n, edges), frozenset(arcs))


def transitive_orientations(g: Graph, max_edges: int = DEFAULT_EDGE_BOUND):
    """All transitive orientations, lazily, one per choice vector."""
    t = build_modular_tree(g)
    choices = orientation_choices(t, max_edges)
    return (compose_orientation(t, c, max_edges) for c in choices)


def count_orientations(t: ModularTree, max_edges: int = DEFAULT_EDGE_BOUND) -> int:
    """Product over nodes: prime 2, complete K_k k!, independent 1."""
    _prime_node_plans(t, max_edges)   # raises on non-comparability
    prime_ids, complete_slots = _choice_slots(t)
    total = 2 ** len(prime_ids)
    for _, members in complete_slots:
        total *= math.factorial(len(members))
    return total


# -- the automorphism action ----------------------------------------------

def _act_arcs(p: Permutation, arcs: frozenset) -> frozenset:
    return frozenset((p(u), p(v)) for u, v in arcs)


def act(p: Permutation, o: Orientation) -> Orientation:
    """Relabel an orientation by an automorphism of its graph."""
    g = o.graph
    if p.degree != g.n:
        raise InputError("permutation degree does not match the graph")
    if any(not g.has_edge(p(u), p(v)) for u, v in g.edges):
        raise InputError("permutation is not an automorphism of the graph")
    moved = _act_arcs(p, o.arcs)
    assert _arcs_transitive(g.n, moved) == _arcs_transitive(g.n, o.arcs)
    return Orientation(g, moved)


def orientation_stabilizer(g: Graph, o: Orientation,
                           max_n: int = DEFAULT_VERTEX_BOUND) -> PermutationGroup:
    """Automorphisms of g fixing o; the symmetry group of the poset."""
    if o.graph != g:
        raise InputError("orientation does not cover this graph's edges")
    if not _arcs_transitive(g.n, o.arcs):
        raise InputError("orientation is not transitive")
    aut = brute_force_aut(g, max_n=max_n)
    fixed = [p for p in aut.elements() if _act_arcs(p, o.arcs) == o.arcs]
    return PermutationGroup.from_elements(g.n, fixed)
