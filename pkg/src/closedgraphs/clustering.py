"""Exact clustering coefficients and the bounds closed graphs satisfy.

All coefficients are exact rationals; the bounds involve thirds and tight
cases where floating point could flip a verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .closure import is_closed_by_definition
from .errors import NotClosedError, NotConnectedError, PreconditionError
from .graph import Graph, diameter, is_connected


def local_clustering(g: Graph, v: int) -> Fraction:
    """Fraction of neighbor pairs of v joined by an edge; 0 for degree <= 1."""
    nbrs = g.neighbors(v)
    d = len(nbrs)
    if d <= 1:
        return Fraction(0)
    linked = 0
    for a in range(d):
        for b in range(a + 1, d):
            if g.has_edge(nbrs[a], nbrs[b]):
                linked += 1
    return Fraction(linked, d * (d - 1) // 2)


def watts_strogatz(g: Graph) -> Fraction:
    """Mean of the local clustering coefficients over all vertices."""
    return sum((local_clustering(g, v) for v in g.vertices()), Fraction(0)) / g.n


@dataclass(frozen=True)
class BoundVerdicts:
    """One exact-comparison verdict per clustering bound."""

    deg2_lower_bound: bool  # C_v >= 1/2 - 1/(2(d-1)) whenever deg(v) = d >= 2
    deg3_lower_bound: bool  # C_v >= 1/3 whenever deg(v) >= 3
    open_vertex_bound: bool  # at most h-1 vertices with deg 2 and C_v = 0
    leaf_bound: bool  # at most two leaves
    mean_lower_bound: bool  # C_WS >= 1/3 - (h+1)/(3n)

    @property
    def all_ok(self) -> bool:
        return (
            self.deg2_lower_bound
            and self.deg3_lower_bound
            and self.open_vertex_bound
            and self.leaf_bound
            and self.mean_lower_bound
        )


@dataclass(frozen=True)
class ClusteringReport:
    """Per-vertex coefficients, degree classes, and bound verdicts."""

    per_vertex: tuple[tuple[int, int, Fraction], ...]  # (vertex, degree, C_v)
    cws: Fraction
    deg_three_plus: int
    deg_two_closed: int  # degree 2 with both neighbors adjacent (C_v = 1)
    deg_two_open: int  # degree 2 with C_v = 0; this is the count bounded by h-1
    leaf_count: int
    h: int
    n: int
    verdicts: BoundVerdicts


def verify_clustering_bounds(g: Graph) -> ClusteringReport:
    """Measure a connected closed graph and check the five clustering bounds.

    Requires n > 1 (the mean bound is stated for graphs with at least one
    edge); every verdict is provably true for closed connected graphs, so a
    False anywhere would be a counterexample.
    """
    if g.n <= 1:
        raise PreconditionError("clustering bounds are stated for graphs with n > 1")
    if not is_connected(g):
        raise NotConnectedError("clustering bounds apply to connected graphs")
    if not is_closed_by_definition(g):
        raise NotClosedError("clustering bounds require a closed identity labeling")

    per_vertex = tuple(
        (v, g.degree(v), local_clustering(g, v)) for v in g.vertices()
    )
    cws = sum((c for _, _, c in per_vertex), Fraction(0)) / g.n
    h = diameter(g)

    deg_three_plus = sum(1 for _, d, _ in per_vertex if d >= 3)
    deg_two_closed = sum(1 for _, d, c in per_vertex if d == 2 and c == 1)
    deg_two_open = sum(1 for _, d, c in per_vertex if d == 2 and c == 0)
    leaf_count = sum(1 for _, d, _ in per_vertex if d == 1)

    verdicts = BoundVerdicts(
        deg2_lower_bound=all(
            c >= Fraction(1, 2) - Fraction(1, 2 * (d - 1))
            for _, d, c in per_vertex
            if d >= 2
        ),
        deg3_lower_bound=all(
            c >= Fraction(1, 3) for _, d, c in per_vertex if d >= 3
        ),
        open_vertex_bound=deg_two_open <= h - 1,
        leaf_bound=leaf_count <= 2,
        mean_lower_bound=cws >= Fraction(1, 3) - Fraction(h + 1, 3 * g.n),
    )
    return ClusteringReport(
        per_vertex=per_vertex,
        cws=cws,
        deg_three_plus=deg_three_plus,
        deg_two_closed=deg_two_closed,
        deg_two_open=deg_two_open,
        leaf_count=leaf_count,
        h=h,
        n=g.n,
        verdicts=verdicts,
    )
