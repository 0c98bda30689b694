"""Modular decomposition: steps, quotients, tree structure, alternating
paths, uniqueness."""

from __future__ import annotations

import json

import pytest

from comparability.errors import InputError
from comparability.graphs import Graph, disjoint_union, is_module, substitute
from comparability.modular import (
    COCOMPONENTS, COMPONENTS, MAXIMAL_MODULES, STOP,
    alternating_path_adjacent, build_modular_tree, check_tree,
    decomposition_step, quotient, tree_to_dot, tree_to_json,
    trees_isomorphic,
)
from comparability.oracles import graphs_up_to, nonisomorphic_graphs


def test_step_p3_cocomponents():
    step = decomposition_step(Graph.path(3))
    assert step.kind == COCOMPONENTS
    assert step.blocks == ((1,), (0, 2))


def test_step_disconnected_components():
    g = disjoint_union([Graph.complete(2), Graph.complete(2)])
    step = decomposition_step(g)
    assert step.kind == COMPONENTS
    assert step.blocks == ((0, 1), (2, 3))


def test_step_prime_stops():
    step = decomposition_step(Graph.path(4))
    assert step.kind == STOP
    assert step.blocks == ((0,), (1,), (2,), (3,))


def test_step_degenerate_stops():
    assert decomposition_step(Graph.complete(4)).kind == STOP
    assert decomposition_step(Graph.empty(4)).kind == STOP
    assert decomposition_step(Graph(1)).kind == STOP


def test_step_maximal_modules():
    # P4 with its second vertex blown up into a false twin pair: the only
    # nontrivial proper module is that pair, the quotient is prime
    g, blocks = substitute(Graph.path(4), {1: Graph.empty(2)})
    step = decomposition_step(g)
    assert step.kind == MAXIMAL_MODULES
    assert step.blocks == ((0,), (3,), (4,), (1, 2))
    for b in step.blocks:
        assert is_module(g, b)


def test_step_blocks_are_modules_everywhere():
    for g in graphs_up_to(6):
        step = decomposition_step(g)
        covered = sorted(v for b in step.blocks for v in b)
        assert covered == list(range(g.n))
        for b in step.blocks:
            assert is_module(g, b)


def test_quotient_of_p3():
    q = quotient(Graph.path(3), ((1,), (0, 2)))
    assert q == Graph.complete(2)


def test_quotient_rejects_bad_partitions():
    g = Graph.path(3)
    with pytest.raises(InputError):
        quotient(g, ((0, 1), (2,)))       # {0,1} not a module
    with pytest.raises(InputError):
        quotient(g, ((0, 2), (0,), (1,)))  # overlap
    with pytest.raises(InputError):
        quotient(g, ((0, 2),))             # does not cover


def test_tree_prime_graph_is_single_leaf():
    t = build_modular_tree(Graph.path(4))
    assert len(t.nodes) == 1
    node = t.nodes[t.root]
    assert node.is_leaf and node.kind == "prime"
    assert node.members == (0, 1, 2, 3)
    assert t.total_vertices == 4 and not t.tree_edges


def test_tree_single_vertex():
    t = build_modular_tree(Graph(1))
    assert len(t.nodes) == 1 and t.nodes[0].is_leaf


def test_tree_p3_shape():
    t = build_modular_tree(Graph.path(3))
    root = t.nodes[t.root]
    assert not root.is_leaf and root.kind == "complete"
    assert len(root.children) == 2
    kinds = sorted(t.nodes[c].kind for c in root.children)
    assert kinds == ["complete", "independent"]  # K1 leaf and 2K1 leaf


def test_tree_k1_plus_k2_shape():
    t = build_modular_tree(disjoint_union([Graph(1), Graph.complete(2)]))
    root = t.nodes[t.root]
    assert root.kind == "independent" and len(root.children) == 2


def test_tree_markers_allocated_above_n():
    g, _ = substitute(Graph.path(4), {1: Graph.empty(2)})
    t = build_modular_tree(g)
    assert all(m >= g.n for m, _ in t.marker_origin)
    origin = dict(t.marker_origin)
    for node in t.nodes:
        for m in node.members:
            if t.is_marker(m):
                assert origin[m] == node.id


def test_tree_attachment_markers_see_child_root():
    g, _ = substitute(Graph.path(4), {1: Graph.empty(2)})
    t = build_modular_tree(g)
    root = t.nodes[t.root]
    for child_id, mprime in zip(root.children, root.attach_markers):
        child = t.nodes[child_id]
        nbrs = {u for u, v in t.normal_edges if v == mprime} | \
               {v for u, v in t.normal_edges if u == mprime}
        assert nbrs == set(child.members)


def test_tree_invariants_sweep_n_le_6():
    for g in graphs_up_to(6):
        check_tree(build_modular_tree(g), g)


@pytest.mark.slow
def test_tree_invariants_sweep_n_7():
    for g in nonisomorphic_graphs(7):
        check_tree(build_modular_tree(g), g)


def test_alternating_path_recovers_adjacency():
    g = Graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (2, 3), (1, 3),
                  (0, 3), (4, 5)])
    t = build_modular_tree(g)
    for x in range(g.n):
        for y in range(g.n):
            expected = x != y and g.has_edge(x, y)
            assert alternating_path_adjacent(t, x, y) == expected


def test_alternating_path_rejects_markers():
    t = build_modular_tree(Graph.path(3))
    with pytest.raises(InputError):
        alternating_path_adjacent(t, 0, 3)


def test_tree_unique_up_to_iso_under_relabeling():
    cases = [
        Graph.path(5),
        disjoint_union([Graph.complete(3), Graph.complete(3)]),
        substitute(Graph.path(4), {1: Graph.empty(2)})[0],
        Graph.complete_bipartite(2, 3),
    ]
    for g in cases:
        t1 = build_modular_tree(g)
        t2 = build_modular_tree(g.relabel(list(reversed(range(g.n)))))
        assert trees_isomorphic(t1, t2)


def test_trees_of_different_graphs_not_isomorphic():
    t1 = build_modular_tree(Graph.path(5))
    t2 = build_modular_tree(Graph.cycle(5))
    assert not trees_isomorphic(t1, t2)


def test_json_export_is_stable_and_complete():
    t = build_modular_tree(Graph.path(3))
    payload = json.loads(tree_to_json(t))
    assert payload["vertex_count"] == 3
    assert payload["marker_count"] == 4
    assert len(payload["nodes"]) == 3
    assert tree_to_json(t) == tree_to_json(build_modular_tree(Graph.path(3)))


def test_dot_export_marks_tree_edges_dashed():
    t = build_modular_tree(Graph.path(3))
    text = tree_to_dot(t)
    assert "style=dashed" in text and "fillcolor=lightgray" in text
