"""Shared fixtures: named small graphs used across the suite."""

from __future__ import annotations

import pytest

from comparability.graphs import Graph, disjoint_union


@pytest.fixture(scope="session")
def named_graphs() -> dict[str, Graph]:
    return {
        "K1": Graph(1),
        "K2": Graph.complete(2),
        "K3": Graph.complete(3),
        "K4": Graph.complete(4),
        "P3": Graph.path(3),
        "P4": Graph.path(4),
        "C4": Graph.cycle(4),
        "C5": Graph.cycle(5),
        "C6": Graph.cycle(6),
        "K23": Graph.complete_bipartite(2, 3),
        "2K2": disjoint_union([Graph.complete(2), Graph.complete(2)]),
        "K1+K2": disjoint_union([Graph(1), Graph.complete(2)]),
        "bull": Graph(5, [(0, 1), (1, 2), (2, 0), (1, 3), (2, 4)]),
    }
