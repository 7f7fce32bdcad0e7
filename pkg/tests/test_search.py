"""Brute-force oracle and backtracking search for closed labelings."""

import random
from itertools import combinations, permutations

import pytest
from hypothesis import given

from closedgraphs import (
    Graph,
    OracleLimitError,
    all_closed_labelings_bruteforce,
    find_closed_labeling,
    is_closed_by_definition,
    is_closed_graph,
    labeling_is_closed,
    relabel,
    reversed_labeling,
)
from .conftest import all_graphs, complete_graph, graph_from_mask, graphs, path_graph, star_graph


def test_bruteforce_paw(paw):
    labelings = all_closed_labelings_bruteforce(paw)
    assert len(labelings) == 4
    assert (1, 2, 3, 4) in labelings
    assert (2, 1, 3, 4) in labelings
    assert labelings == sorted(labelings)


def test_bruteforce_complete():
    assert len(all_closed_labelings_bruteforce(complete_graph(3))) == 6


def test_bruteforce_claw(claw):
    assert all_closed_labelings_bruteforce(claw) == []


def test_bruteforce_respects_bound():
    with pytest.raises(OracleLimitError):
        all_closed_labelings_bruteforce(complete_graph(4), bound=3)


@given(graphs(max_n=5))
def test_labeling_check_matches_relabel(g):
    for lab in permutations(range(1, g.n + 1)):
        assert labeling_is_closed(g, lab) == is_closed_by_definition(relabel(g, lab))


def test_find_examples(paw, claw):
    assert find_closed_labeling(Graph(1)) == (1,)
    assert find_closed_labeling(claw) is None
    assert find_closed_labeling(paw) == (1, 2, 3, 4)
    # path with its center at vertex 1: the center must get the middle label
    assert find_closed_labeling(Graph(3, [(1, 2), (1, 3)])) == (2, 1, 3)


def test_find_is_lexicographically_least_exhaustive():
    for n in range(1, 6):
        for g in all_graphs(n):
            brute = all_closed_labelings_bruteforce(g)
            found = find_closed_labeling(g)
            if brute:
                assert found == brute[0], g
            else:
                assert found is None, g


def test_find_agrees_with_oracle_random_sample():
    # existence must match the oracle on large random samples as well
    rng = random.Random(20240810)
    for n in (6, 7):
        pairs = list(combinations(range(1, n + 1), 2))
        for _ in range(10_000):
            g = graph_from_mask(n, pairs, rng.getrandbits(len(pairs)))
            brute = all_closed_labelings_bruteforce(g)
            found = find_closed_labeling(g)
            assert (found is not None) == bool(brute), g
            if brute:
                assert found == brute[0], g


@given(graphs(max_n=6))
def test_found_labelings_verify(g):
    found = find_closed_labeling(g)
    if found is not None:
        assert is_closed_by_definition(relabel(g, found))
        # the reversal of a closed labeling is closed as well
        assert is_closed_by_definition(relabel(g, reversed_labeling(found)))


def test_reversals_of_oracle_output_are_closed(paw):
    labelings = all_closed_labelings_bruteforce(paw)
    for lab in labelings:
        assert reversed_labeling(lab) in labelings


def test_is_closed_graph(claw):
    for n in range(1, 7):
        assert is_closed_graph(path_graph(n))
    assert not is_closed_graph(claw)
    assert not is_closed_graph(star_graph(5))
    assert is_closed_graph(Graph(4, [(1, 2), (3, 4)]))
