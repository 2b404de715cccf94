from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import atlas_connected_graphs  # noqa: E402

from hellymetric import Graph, apsp, hull, is_helly  # noqa: E402
from hellymetric.graphs import random_connected_graph  # noqa: E402
from hellymetric.hull import HullBudgetError  # noqa: E402


@pytest.fixture(scope="session")
def atlas_graphs() -> list[Graph]:
    """All 996 connected graphs with at most 7 vertices."""
    graphs = atlas_connected_graphs(7)
    assert len(graphs) == 996
    return graphs


@pytest.fixture(scope="session")
def atlas_helly(atlas_graphs: list[Graph]) -> list[Graph]:
    """The Helly members of the small-graph corpus."""
    return [g for g in atlas_graphs if is_helly(g, dm=apsp(g))]


@pytest.fixture(scope="session")
def hull_corpus() -> list[Graph]:
    """200 seeded injective hulls of random graphs (hull size <= 60)."""
    out: list[Graph] = []
    seed = 0
    while len(out) < 200:
        seed += 1
        base = random_connected_graph(5 + seed % 5, 0.25 + 0.05 * (seed % 5), seed)
        try:
            hg = hull(base).graph
        except HullBudgetError:
            continue
        if hg.n <= 60:
            out.append(hg)
    return out
