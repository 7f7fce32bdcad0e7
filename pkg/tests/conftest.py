"""Shared fixtures and small-graph generators."""

from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import strategies as st

from closedgraphs.graph import Graph


def graph_from_mask(n: int, pairs: list[tuple[int, int]], mask: int) -> Graph:
    adj = [0] * (n + 1)
    while mask:
        low = mask & -mask
        u, v = pairs[low.bit_length() - 1]
        mask ^= low
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph._from_bitsets(n, adj)


def all_graphs(n: int):
    """Every simple graph on {1..n}, one per edge subset."""
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield graph_from_mask(n, pairs, mask)


def path_graph(n: int) -> Graph:
    return Graph(n, [(v, v + 1) for v in range(1, n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(1, n + 1), 2))


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(v, v + 1) for v in range(1, n)] + [(1, n)])


def star_graph(n: int) -> Graph:
    """K_{1,n-1} with the center labeled 1."""
    return Graph(n, [(1, v) for v in range(2, n + 1)])


@pytest.fixture
def paw() -> Graph:
    """Triangle 1-2-3 with a pendant vertex 4 attached to 3."""
    return Graph(4, [(1, 2), (1, 3), (2, 3), (3, 4)])


@pytest.fixture
def claw() -> Graph:
    return star_graph(4)


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(1, n + 1), 2))
    mask = draw(st.integers(0, (1 << len(pairs)) - 1))
    return graph_from_mask(n, pairs, mask)


@st.composite
def graphs_with_labelings(draw, min_n: int = 1, max_n: int = 7):
    g = draw(graphs(min_n, max_n))
    lab = tuple(draw(st.permutations(range(1, g.n + 1))))
    return g, lab
