"""Closedness of the identity labeling and the distance-layer structure.

A labeling is closed when any two edges pointing away from (or toward) a
common vertex force an edge between the far endpoints. On connected graphs
this is equivalent to every upper neighborhood being a clique that occupies
the interval immediately after its vertex; the plain "clique + interval"
reading is strictly weaker (edges {1,3},{2,3} satisfy it yet fail the
definition), so the anchored form is what :func:`is_closed_by_intervals`
checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import NotClosedError, NotConnectedError
from .graph import (
    Graph,
    bfs_distances,
    bits_to_tuple,
    diameter,
    is_connected,
    lower_neighbor_bits,
    upper_neighbor_bits,
    _bits_complete,
)


def is_closed_by_definition(g: Graph) -> bool:
    """Definitional check: both neighborhood halves of every vertex are cliques.

    Total predicate; no connectivity assumption.
    """
    adj = g._adj
    for i in range(1, g.n + 1):
        a = adj[i]
        upper = a & ~((1 << (i + 1)) - 1)
        if not _bits_complete(g, upper):
            return False
        lower = a & ((1 << i) - 1)
        if not _bits_complete(g, lower):
            return False
    return True


def closure_violation(g: Graph) -> Optional[tuple[int, int, int]]:
    """First violating triple (i; j, k): j, k on the same side of i, {j,k} missing.

    Scans vertices in ascending order, the upper side before the lower side,
    pairs lexicographically. Returns None when the identity labeling is closed.
    """
    for i in range(1, g.n + 1):
        for side in (upper_neighbor_bits(g, i), lower_neighbor_bits(g, i)):
            members = bits_to_tuple(side)
            for a in range(len(members)):
                for b in range(a + 1, len(members)):
                    if not g.has_edge(members[a], members[b]):
                        return (i, members[a], members[b])
    return None


def is_closed_by_intervals(g: Graph) -> bool:
    """Fast closedness check for connected graphs via upper neighborhoods.

    Every N^>(i) must be a clique forming the interval [i+1, i+|N^>(i)|];
    on connected inputs this agrees with :func:`is_closed_by_definition`.
    """
    if not is_connected(g):
        raise NotConnectedError("the interval criterion applies to connected graphs only")
    for i in range(1, g.n + 1):
        upper = upper_neighbor_bits(g, i)
        if upper:
            size = upper.bit_count()
            if upper != ((1 << size) - 1) << (i + 1):
                return False
            if not _bits_complete(g, upper):
                return False
    return True


# ---------------------------------------------------------------------------
# Layers


@dataclass(frozen=True)
class LayerDecomposition:
    """Distance layers [L_0, ..., L_h] from vertex 1 of a connected graph."""

    layers: tuple[tuple[int, ...], ...]

    @property
    def h(self) -> int:
        return len(self.layers) - 1

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(layer) for layer in self.layers)

    def layer_index(self, v: int) -> int:
        for idx, layer in enumerate(self.layers):
            if v in layer:
                return idx
        raise KeyError(v)


def layer_decomposition(g: Graph) -> LayerDecomposition:
    """Group vertices by BFS distance from vertex 1."""
    dist = bfs_distances(g, 1)
    if any(d is None for d in dist):
        raise NotConnectedError("layer decomposition requires a connected graph")
    h = max(dist)  # type: ignore[type-var]
    layers: list[list[int]] = [[] for _ in range(h + 1)]
    for v, d in enumerate(dist, start=1):
        layers[d].append(v)  # type: ignore[index]
    return LayerDecomposition(tuple(tuple(layer) for layer in layers))


def edges_span_adjacent_layers(g: Graph) -> bool:
    """Every edge stays within one layer or joins consecutive layers.

    Holds for every connected graph, closed or not; exposed so the claim can
    be verified without any closedness assumption.
    """
    dist = bfs_distances(g, 1)
    if any(d is None for d in dist):
        raise NotConnectedError("layer comparison requires a connected graph")
    for u, v in g.edges():
        if abs(dist[u - 1] - dist[v - 1]) > 1:  # type: ignore[operator]
            return False
    return True


def _shortest_paths(g: Graph, src: int, dst: int) -> Iterator[tuple[int, ...]]:
    """All shortest src-dst paths, rebuilt from BFS predecessor sets."""
    dist = bfs_distances(g, src)
    if dist[dst - 1] is None:
        return
    preds: dict[int, list[int]] = {}
    for v in g.vertices():
        if dist[v - 1] is None:
            continue
        preds[v] = [u for u in g.neighbors(v) if dist[u - 1] == dist[v - 1] - 1]

    def walk(v: int, tail: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if v == src:
            yield (src,) + tail
            return
        for u in preds[v]:
            yield from walk(u, (v,) + tail)

    yield from walk(dst, ())


@dataclass(frozen=True)
class LayerTheoremReport:
    """Verdicts for the structural layer facts of a closed connected graph."""

    layers_complete_and_intervals: bool
    next_layer_is_upper_of_max: bool
    diameter_equals_top_index: bool
    edges_span_adjacent_layers: bool
    extremal_paths_anchored: bool
    h: int
    diameter: int
    decomposition: LayerDecomposition

    @property
    def all_ok(self) -> bool:
        return (
            self.layers_complete_and_intervals
            and self.next_layer_is_upper_of_max
            and self.diameter_equals_top_index
            and self.edges_span_adjacent_layers
            and self.extremal_paths_anchored
        )


def verify_layer_theorems(g: Graph) -> LayerTheoremReport:
    """Check the five layer-structure claims on a closed connected graph.

    (a) each layer is a clique and an interval; (b) the layer above N is the
    upper neighborhood of max(L_N); (c) the diameter equals the top layer
    index; (d) edges never skip a layer; (e) every longest shortest path runs
    from L_0 or L_1 to L_h. Claims (a), (b), (c), (e) are theorems about
    closed graphs, so a non-closed input is rejected; (d) holds for any
    connected graph and is checkable separately via
    :func:`edges_span_adjacent_layers`.
    """
    if not is_connected(g):
        raise NotConnectedError("layer theorems apply to connected graphs only")
    if not is_closed_by_definition(g):
        raise NotClosedError(
            "claims (a), (b), (c), (e) require a closed identity labeling; "
            "only claim (d) holds for arbitrary connected graphs"
        )
    from .graph import is_complete_on, is_interval

    decomp = layer_decomposition(g)
    h = decomp.h

    complete_intervals = all(
        is_complete_on(g, layer) and is_interval(layer) for layer in decomp.layers
    )

    next_from_max = True
    for idx in range(h + 1):
        d = max(decomp.layers[idx])
        above = decomp.layers[idx + 1] if idx < h else ()
        if bits_to_tuple(upper_neighbor_bits(g, d)) != above:
            next_from_max = False
            break

    diam = diameter(g)

    anchored = True
    low_anchor = set(decomp.layers[0]) | (set(decomp.layers[1]) if h >= 1 else set())
    top = set(decomp.layers[h])
    all_dist = {v: bfs_distances(g, v) for v in g.vertices()}
    for u in g.vertices():
        for v in range(u, g.n + 1):
            if all_dist[u][v - 1] != diam:
                continue
            for path in _shortest_paths(g, u, v):
                a, b = path[0], path[-1]
                if not (
                    (a in low_anchor and b in top) or (b in low_anchor and a in top)
                ):
                    anchored = False
                    break
            if not anchored:
                break
        if not anchored:
            break

    return LayerTheoremReport(
        layers_complete_and_intervals=complete_intervals,
        next_layer_is_upper_of_max=next_from_max,
        diameter_equals_top_index=(diam == h),
        edges_span_adjacent_layers=edges_span_adjacent_layers(g),
        extremal_paths_anchored=anchored,
        h=h,
        diameter=diam,
        decomposition=decomp,
    )
