"""Graph core: construction, validation, formats, modules."""

from __future__ import annotations

from itertools import combinations

import pytest

from comparability.errors import InputError
from comparability.graphs import (
    Graph, all_modules, disjoint_union, from_edge_list_text, from_graph6,
    is_cycle_graph, is_degenerate, is_module, is_prime, substitute,
    to_dot, to_edge_list_text, to_graph6,
)


def test_rejects_self_loop():
    with pytest.raises(InputError):
        Graph(3, [(0, 0)])


def test_rejects_duplicate_edge():
    with pytest.raises(InputError):
        Graph(3, [(0, 1), (1, 0)])


def test_rejects_out_of_range():
    with pytest.raises(InputError):
        Graph(3, [(0, 3)])


def test_edges_normalized_sorted():
    g = Graph(4, [(3, 1), (2, 0)])
    assert g.edges == ((0, 2), (1, 3))


def test_degrees_and_neighbors():
    g = Graph.path(4)
    assert g.degrees() == (1, 2, 2, 1)
    assert g.neighbors(1) == (0, 2)


def test_complement_is_involution():
    g = Graph(5, [(0, 1), (1, 2), (3, 4)])
    assert g.complement().complement() == g


def test_complement_edge_counts():
    g = Graph.path(4)
    assert g.num_edges + g.complement().num_edges == 6


def test_induced_subgraph():
    g = Graph.cycle(5)
    h = g.induced([0, 1, 3])
    assert h.n == 3 and h.edges == ((0, 1),)


def test_connectivity():
    assert Graph.path(5).is_connected()
    assert not disjoint_union([Graph(1), Graph(1)]).is_connected()
    assert Graph(1).is_connected()
    comps = disjoint_union([Graph.complete(2), Graph.path(3)]).connected_components()
    assert comps == ((0, 1), (2, 3, 4))


def test_bipartition_convention():
    # per component the side holding the smallest vertex goes first
    g = Graph.path(4)
    assert g.bipartition() == ((0, 2), (1, 3))
    assert Graph.cycle(5).bipartition() is None


def test_is_module_definition():
    # independent re-check straight from the definition, all subsets of P4
    g = Graph.path(4)
    for k in range(1, 5):
        for sub in combinations(range(4), k):
            expected = all(
                all(g.has_edge(w, v) for v in sub) or
                not any(g.has_edge(w, v) for v in sub)
                for w in range(4) if w not in sub)
            assert is_module(g, sub) == expected


def test_p4_modules_are_trivial_only():
    g = Graph.path(4)
    mods = all_modules(g)
    assert sorted(mods) == sorted(
        [(0,), (1,), (2,), (3,), (0, 1, 2, 3)])
    assert is_prime(g)


def test_p3_has_nontrivial_module():
    assert is_module(Graph.path(3), [0, 2])
    assert not is_prime(Graph.path(3))


def test_small_graphs_never_prime():
    assert not is_prime(Graph.complete(2))
    assert not is_prime(Graph.complete(3))


def test_degenerate():
    assert is_degenerate(Graph.complete(4))
    assert is_degenerate(Graph.empty(4))
    assert not is_degenerate(Graph.path(3))


def test_is_cycle_graph():
    assert is_cycle_graph(Graph.cycle(5))
    assert not is_cycle_graph(Graph.path(5))
    assert not is_cycle_graph(Graph.complete(4))
    assert is_cycle_graph(Graph.complete(3))  # K3 is C3


def test_substitute_blocks():
    base = Graph.path(3)
    composed, blocks = substitute(base, {1: Graph.complete(2)})
    assert composed.n == 4
    assert blocks == {0: (0,), 1: (1, 2), 2: (3,)}
    # both copies of the K2 see the old neighbors of vertex 1
    assert composed.has_edge(0, 1) and composed.has_edge(0, 2)
    assert composed.has_edge(1, 3) and composed.has_edge(2, 3)
    assert composed.has_edge(1, 2)
    assert not composed.has_edge(0, 3)
    assert is_module(composed, blocks[1])


def test_edge_list_roundtrip():
    g = Graph(4, [(0, 1), (2, 3)])
    assert from_edge_list_text(to_edge_list_text(g)) == g


@pytest.mark.parametrize("bad", [
    "", "3", "3 1", "3 1\n0 0 1", "3 2\n0 1", "3 1\n0 5", "x y\n",
    "3 1\n0 1\n1 2",
])
def test_edge_list_rejects_malformed(bad):
    with pytest.raises(InputError):
        from_edge_list_text(bad)


def test_graph6_known_strings():
    # K3 encodes to 'Bw': n-byte chr(3+63)='B', bits 111000 -> chr(56+63)='w'
    assert to_graph6(Graph.complete(3)) == "Bw"
    assert from_graph6("Bw") == Graph.complete(3)


def test_graph6_roundtrip_sweep():
    for g in [Graph.path(5), Graph.cycle(6), Graph.complete(7),
              Graph.empty(4), Graph.complete_bipartite(2, 3)]:
        assert from_graph6(to_graph6(g)) == g


def test_graph6_matches_networkx():
    nx = pytest.importorskip("networkx")
    g = Graph(6, [(0, 1), (0, 3), (1, 4), (2, 5), (3, 4), (4, 5)])
    ours = to_graph6(g)
    ng = nx.Graph()
    ng.add_nodes_from(range(g.n))
    ng.add_edges_from(g.edges)
    theirs = nx.to_graph6_bytes(ng, header=False).decode().strip()
    assert ours == theirs
    back = from_graph6(theirs)
    assert back == g


def test_graph6_rejects_bad_payload():
    with pytest.raises(InputError):
        from_graph6("B")  # truncated
    with pytest.raises(InputError):
        from_graph6("~~~")  # long form


def test_dot_output_contains_edges():
    text = to_dot(Graph.path(3))
    assert "0 -- 1;" in text and "1 -- 2;" in text


def test_labels_sidecar_preserved():
    g = Graph(3, [(0, 1)], labels=["a", "b", "c"])
    assert g.complement().labels == ("a", "b", "c")
    assert g.induced([0, 2]).labels == ("a", "c")
