"""Graph construction, labelings, neighborhoods, distances, edge-list format."""

import pytest
from hypothesis import given

from closedgraphs import (
    DomainError,
    EdgeListParseError,
    Graph,
    InvalidLabelingError,
    NotConnectedError,
    bfs_distances,
    diameter,
    format_edge_list,
    identity_labeling,
    inverse_labeling,
    is_complete_on,
    is_connected,
    is_interval,
    lower_neighborhood,
    parse_edge_list,
    relabel,
    upper_neighborhood,
)
from .conftest import (
    all_graphs,
    complete_graph,
    graphs,
    graphs_with_labelings,
    path_graph,
)


def test_construction_rejects_bad_input():
    with pytest.raises(DomainError):
        Graph(0)
    with pytest.raises(DomainError):
        Graph(3, [(1, 1)])
    with pytest.raises(DomainError):
        Graph(3, [(1, 4)])


def test_duplicate_edges_collapse():
    g = Graph(3, [(1, 2), (2, 1), (1, 2)])
    assert g.edges() == [(1, 2)]


def test_edges_sorted():
    g = Graph(4, [(3, 4), (1, 3), (1, 2), (2, 3)])
    assert g.edges() == [(1, 2), (1, 3), (2, 3), (3, 4)]


def test_relabel_identity():
    g = path_graph(3)
    assert relabel(g, identity_labeling(3)) == g


def test_relabel_swap_keeps_edge_set(paw):
    assert relabel(paw, (2, 1, 3, 4)) == paw


def test_relabel_moves_edges():
    g = path_graph(3)
    assert relabel(g, (2, 1, 3)).edges() == [(1, 2), (1, 3)]


def test_relabel_rejects_bad_labelings(paw):
    with pytest.raises(InvalidLabelingError):
        relabel(paw, (1, 2, 3))
    with pytest.raises(InvalidLabelingError):
        relabel(paw, (1, 2, 3, 3))


@given(graphs_with_labelings())
def test_relabel_inverse_roundtrip(gl):
    g, lab = gl
    assert relabel(relabel(g, lab), inverse_labeling(lab)) == g


def test_neighborhood_examples(paw):
    assert upper_neighborhood(paw, 1) == (2, 3)
    assert upper_neighborhood(paw, 3) == (4,)
    assert lower_neighborhood(paw, 3) == (1, 2)
    assert upper_neighborhood(paw, 4) == ()


def test_neighborhood_domain_error(paw):
    with pytest.raises(DomainError):
        upper_neighborhood(paw, 5)
    with pytest.raises(DomainError):
        lower_neighborhood(paw, 0)


@given(graphs())
def test_neighborhoods_partition(g):
    for v in g.vertices():
        upper = upper_neighborhood(g, v)
        lower = lower_neighborhood(g, v)
        assert set(upper) | set(lower) == set(g.neighbors(v))
        assert not set(upper) & set(lower)
        assert all(u > v for u in upper)
        assert all(u < v for u in lower)


def test_is_interval():
    assert is_interval({2, 3, 4})
    assert not is_interval({2, 4})
    assert is_interval(())
    assert is_interval([7])


def test_is_complete_on(paw):
    assert is_complete_on(complete_graph(3), {1, 2, 3})
    assert not is_complete_on(paw, {2, 4})
    assert is_complete_on(paw, {3})
    assert is_complete_on(paw, ())


def test_bfs_examples(paw):
    assert bfs_distances(path_graph(3), 1) == [0, 1, 2]
    assert bfs_distances(paw, 1) == [0, 1, 1, 2]
    assert bfs_distances(Graph(2), 1) == [0, None]


def _floyd_warshall(g):
    inf = float("inf")
    n = g.n
    dist = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for u, v in g.edges():
        dist[u - 1][v - 1] = dist[v - 1][u - 1] = 1
    for k in range(n):
        for i in range(n):
            dk = dist[i][k]
            if dk is inf:
                continue
            row = dist[i]
            krow = dist[k]
            for j in range(n):
                if dk + krow[j] < row[j]:
                    row[j] = dk + krow[j]
    return dist


def test_bfs_matches_floyd_warshall_small():
    for n in range(1, 5):
        for g in all_graphs(n):
            fw = _floyd_warshall(g)
            for src in g.vertices():
                got = [d if d is not None else float("inf") for d in bfs_distances(g, src)]
                assert got == fw[src - 1]


@given(graphs(max_n=6))
def test_bfs_matches_floyd_warshall_random(g):
    fw = _floyd_warshall(g)
    for src in g.vertices():
        got = [d if d is not None else float("inf") for d in bfs_distances(g, src)]
        assert got == fw[src - 1]


def test_diameter_examples(paw):
    assert diameter(complete_graph(4)) == 1
    assert diameter(path_graph(3)) == 2
    assert diameter(paw) == 2
    assert diameter(Graph(1)) == 0
    with pytest.raises(NotConnectedError):
        diameter(Graph(2))


def test_is_connected():
    assert is_connected(path_graph(5))
    assert not is_connected(Graph(4, [(1, 2), (3, 4)]))
    assert is_connected(Graph(1))


# ---------------------------------------------------------------------------
# Edge-list format


def test_parse_roundtrip(paw):
    text = format_edge_list(paw)
    assert text == "4 4\n1 2\n1 3\n2 3\n3 4\n"
    assert parse_edge_list(text) == paw


def test_parse_isolated_vertices():
    g = parse_edge_list("3 1\n1 2\n")
    assert g.n == 3
    assert g.edges() == [(1, 2)]


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("", "line 1"),
        ("4\n", "header"),
        ("a b\n", "header"),
        ("0 0\n", "positive"),
        ("2 1\n1 1\n", "self-loop"),
        ("4 1\n2 1\n", "1 <= u < v"),
        ("4 1\n1 5\n", "1 <= u < v"),
        ("4 2\n1 2\n1 2\n", "duplicate"),
        ("4 2\n1 2\n", "2 edges"),
        ("4 1\n1 2\n3 4\n", "1 edges"),
        ("4 1\n1 2 3\n", "expected"),
        ("4 1\n1 x\n", "integers"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(EdgeListParseError) as err:
        parse_edge_list(text)
    assert fragment in str(err.value)


def test_parse_error_line_numbers():
    with pytest.raises(EdgeListParseError) as err:
        parse_edge_list("3 2\n1 2\n2 2\n")
    assert "line 3" in str(err.value)
