"""Closedness predicates, layers, and the layer-structure report."""

import pytest
from hypothesis import given

from closedgraphs import (
    Graph,
    NotClosedError,
    NotConnectedError,
    bfs_distances,
    closure_violation,
    edges_span_adjacent_layers,
    enumerate_closed_graphs,
    is_closed_by_definition,
    is_closed_by_intervals,
    is_connected,
    layer_decomposition,
    layer_partitions,
    verify_layer_theorems,
)
from .conftest import all_graphs, complete_graph, graphs, path_graph, star_graph


def test_definition_examples(paw, claw):
    assert is_closed_by_definition(paw)
    assert not is_closed_by_definition(claw)
    for n in range(1, 6):
        assert is_closed_by_definition(complete_graph(n))


def test_definition_is_total_on_disconnected():
    two_edges = Graph(4, [(1, 2), (3, 4)])
    assert is_closed_by_definition(two_edges)
    interleaved = Graph(4, [(1, 3), (2, 4)])
    assert is_closed_by_definition(interleaved)


def test_closure_violation_witness(paw, claw):
    assert closure_violation(paw) is None
    assert closure_violation(claw) == (1, 2, 3)
    # lower-side violation: center gets the largest label
    assert closure_violation(Graph(3, [(1, 3), (2, 3)])) == (3, 1, 2)


def test_interval_examples(paw):
    assert is_closed_by_intervals(paw)
    assert not is_closed_by_intervals(star_graph(3))
    assert is_closed_by_intervals(path_graph(4))
    with pytest.raises(NotConnectedError):
        is_closed_by_intervals(Graph(2))


def test_interval_criterion_needs_anchor():
    # all upper neighborhoods are cliques and plain intervals here, yet the
    # labeling is not closed: the two lower neighbors of 3 are not adjacent
    g = Graph(3, [(1, 3), (2, 3)])
    assert not is_closed_by_definition(g)
    assert not is_closed_by_intervals(g)


def test_interval_equals_definition_exhaustive():
    for n in range(1, 6):
        for g in all_graphs(n):
            if is_connected(g):
                assert is_closed_by_intervals(g) == is_closed_by_definition(g), g


def test_layer_examples(paw):
    assert layer_decomposition(paw).layers == ((1,), (2, 3), (4,))
    assert layer_decomposition(path_graph(3)).layers == ((1,), (2,), (3,))
    assert layer_decomposition(complete_graph(3)).layers == ((1,), (2, 3))
    with pytest.raises(NotConnectedError):
        layer_decomposition(Graph(3, [(1, 2)]))


@given(graphs(max_n=6))
def test_layer_invariants(g):
    if not is_connected(g):
        return
    decomp = layer_decomposition(g)
    assert decomp.layers[0] == (1,)
    seen = [v for layer in decomp.layers for v in layer]
    assert sorted(seen) == list(g.vertices())
    assert all(decomp.layers)
    dist = bfs_distances(g, 1)
    for idx, layer in enumerate(decomp.layers):
        assert all(dist[v - 1] == idx for v in layer)


def test_edges_span_adjacent_layers_everywhere():
    # holds for every connected graph, no closedness needed
    for n in range(1, 6):
        for g in all_graphs(n):
            if is_connected(g):
                assert edges_span_adjacent_layers(g)


def test_layer_theorems_paw(paw):
    report = verify_layer_theorems(paw)
    assert report.all_ok
    assert report.h == 2
    assert report.diameter == 2
    # max of layer 1 is 3, and its upper neighborhood is exactly layer 2
    assert report.next_layer_is_upper_of_max


def test_layer_theorems_complete_and_paths():
    for n in range(2, 6):
        report = verify_layer_theorems(complete_graph(n))
        assert report.all_ok and report.h == 1
    for n in range(1, 7):
        report = verify_layer_theorems(path_graph(n))
        assert report.all_ok and report.h == n - 1


def test_layer_theorems_preconditions(claw):
    with pytest.raises(NotConnectedError):
        verify_layer_theorems(Graph(2))
    with pytest.raises(NotClosedError) as err:
        verify_layer_theorems(claw)
    assert "(d)" in str(err.value)


def test_layer_theorems_hold_on_census():
    for n in range(1, 8):
        for p in layer_partitions(n):
            for g in enumerate_closed_graphs(p):
                assert verify_layer_theorems(g).all_ok, g
