"""Exchangeable vertices, quotient graphs, and exact closed-labeling counts.

Two vertices are exchangeable when their full neighborhoods {v} | N(v)
coincide; the classes of this relation are label-free graph invariants, are
cliques, and on a connected graph with closed identity labeling they are
intervals. The number of closed labelings of a connected closed graph is
2 * prod |E_a|! when there is more than one class, and n! when there is one
(the graph is then complete).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from math import factorial
from typing import Iterator, Optional

from .closure import is_closed_by_definition
from .errors import ExchangeabilityError, NotClosedError, NotConnectedError
from .graph import Graph, bits_to_tuple, identity_labeling, is_connected, relabel
from .search import find_closed_labeling


def full_neighborhood(g: Graph, v: int) -> tuple[int, ...]:
    """The vertex together with its neighbors, sorted."""
    return bits_to_tuple(g.neighbor_bits(v) | (1 << v))


@dataclass(frozen=True)
class ExchangePartition:
    """Equal-full-neighborhood classes, ordered by minimum element."""

    classes: tuple[tuple[int, ...], ...]
    class_of: dict

    @property
    def r(self) -> int:
        return len(self.classes)

    def class_index(self, v: int) -> int:
        return self.class_of[v]


def exchange_partition(g: Graph) -> ExchangePartition:
    """Group vertices by equal full neighborhoods."""
    groups: dict[int, list[int]] = {}
    for v in g.vertices():
        groups.setdefault(g._adj[v] | (1 << v), []).append(v)
    classes = tuple(tuple(members) for members in sorted(groups.values()))
    class_of = {v: idx for idx, members in enumerate(classes) for v in members}
    return ExchangePartition(classes=classes, class_of=class_of)


def is_collapsed(g: Graph) -> bool:
    """True when every exchangeability class is a singleton."""
    return exchange_partition(g).r == g.n


def swap_exchangeable(g: Graph, i: int, j: int) -> Graph:
    """Relabel by the transposition (i j) of an exchangeable pair.

    Requires the identity labeling of g to be closed; the result is closed
    again (swapping exchangeable labels preserves closedness).
    """
    g._check_vertex(i)
    g._check_vertex(j)
    if not is_closed_by_definition(g):
        raise NotClosedError("swapping labels requires a closed identity labeling")
    if full_neighborhood(g, i) != full_neighborhood(g, j):
        raise ExchangeabilityError(
            f"vertices {i} and {j} have different full neighborhoods"
        )
    lab = list(identity_labeling(g.n))
    lab[i - 1], lab[j - 1] = j, i
    swapped = relabel(g, lab)
    assert is_closed_by_definition(swapped)
    return swapped


@dataclass(frozen=True)
class QuotientGraph:
    """The graph on exchangeability classes with inherited edges."""

    partition: ExchangePartition
    graph: Graph


def quotient_graph(g: Graph) -> QuotientGraph:
    """Collapse each exchangeability class to a single vertex.

    Classes are numbered 1..r by minimum element; {a,b} is a quotient edge
    when some (equivalently, every) cross pair is an edge of g. Requires a
    connected graph with closed identity labeling, under which the quotient
    is itself connected, collapsed, and closed.
    """
    if not is_connected(g):
        raise NotConnectedError("the quotient is defined for connected graphs")
    if not is_closed_by_definition(g):
        raise NotClosedError("the quotient requires a closed identity labeling")
    part = exchange_partition(g)
    r = part.r
    edges = []
    for a in range(r):
        for b in range(a + 1, r):
            i = part.classes[a][0]
            if any(g.has_edge(i, j) for j in part.classes[b]):
                edges.append((a + 1, b + 1))
    return QuotientGraph(partition=part, graph=Graph(r, edges))


def _closed_base_labeling(g: Graph) -> tuple[int, ...]:
    """A closed labeling to anchor counting, or the reason there is none."""
    if not is_connected(g):
        raise NotConnectedError("closed-labeling counts apply to connected graphs")
    if is_closed_by_definition(g):
        return identity_labeling(g.n)
    base = find_closed_labeling(g)
    if base is None:
        raise NotClosedError("the graph has no closed labeling")
    return base


def count_closed_labelings(g: Graph) -> int:
    """Exact number of closed labelings of a connected closed graph."""
    base = _closed_base_labeling(g)
    del base  # only existence matters; class sizes are label-free
    part = exchange_partition(g)
    if part.r == 1:
        return factorial(g.n)
    total = 2
    for members in part.classes:
        total *= factorial(len(members))
    return total


def enumerate_closed_labelings(g: Graph) -> Iterator[tuple[int, ...]]:
    """All closed labelings, each exactly once, in a reproducible order.

    A base closed labeling is computed first (the identity when it is already
    closed). Each emitted labeling composes the base with a relabeling that
    either keeps the class order or reverses it; the forward family streams
    before the mirrored one, within-class assignments in lexicographic order.
    """
    n = g.n
    base = _closed_base_labeling(g)
    g2 = relabel(g, base)
    part = exchange_partition(g2)
    classes = part.classes

    def compose(sigma: dict) -> tuple[int, ...]:
        return tuple(sigma[base[v - 1]] for v in range(1, n + 1))

    if part.r == 1:
        for values in permutations(range(1, n + 1)):
            yield compose(dict(zip(classes[0], values)))
        return

    for mirrored in (False, True):
        targets = [
            tuple(sorted(n + 1 - x for x in members)) if mirrored else members
            for members in classes
        ]
        for choice in product(
            *(permutations(target) for target in targets)
        ):
            sigma = {}
            for members, images in zip(classes, choice):
                sigma.update(zip(members, images))
            yield compose(sigma)
