"""Simple undirected graphs on the vertex set {1..n}.

Vertices are always 1-based. A "labeled graph" is just a Graph whose identity
labeling is the labeling under study; applying a different labeling produces a
new Graph via :func:`relabel`. Adjacency is stored as integer bitsets (bit v
set in ``neighbor_bits(u)`` means the edge {u,v} exists); all set-valued
results are returned as sorted tuples.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Optional, Sequence

from .errors import (
    DomainError,
    EdgeListParseError,
    InvalidLabelingError,
    NotConnectedError,
)

Labeling = tuple  # perm[v-1] is the label assigned to vertex v


def bits_to_tuple(bits: int) -> tuple[int, ...]:
    """Decode a vertex bitset into a sorted tuple of vertices."""
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return tuple(out)


def bits_of(vertices: Iterable[int]) -> int:
    bits = 0
    for v in vertices:
        bits |= 1 << v
    return bits


class Graph:
    """Immutable simple graph on {1..n} with set adjacency.

    No self-loops; edges are unordered pairs. Construction accepts any
    iterable of pairs (duplicates collapse, set semantics); the strict
    edge-list text format is handled by :func:`parse_edge_list`.
    """

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if not isinstance(n, int) or n < 1:
            raise DomainError(f"vertex count must be a positive integer, got {n!r}")
        adj = [0] * (n + 1)
        for edge in edges:
            u, v = edge
            if not (1 <= u <= n) or not (1 <= v <= n):
                raise DomainError(f"edge {{{u},{v}}} leaves the vertex range 1..{n}")
            if u == v:
                raise DomainError(f"self-loop at vertex {u} is not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)

    @classmethod
    def _from_bitsets(cls, n: int, adj: Sequence[int]) -> "Graph":
        # Trusted fast path for enumeration loops; adj[0] must be 0.
        g = object.__new__(cls)
        g.n = n
        g._adj = tuple(adj)
        return g

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 1 <= v <= self.n:
            raise DomainError(f"vertex {v!r} is outside 1..{self.n}")

    def neighbor_bits(self, v: int) -> int:
        """Bitset of N(v); low-level companion of :meth:`neighbors`."""
        self._check_vertex(v)
        return self._adj[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return bits_to_tuple(self.neighbor_bits(v))

    def degree(self, v: int) -> int:
        return self.neighbor_bits(v).bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._adj[u] >> v & 1)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted (u, v) pairs with u < v, lexicographically."""
        out = []
        for u in range(1, self.n + 1):
            rest = self._adj[u] & ~((1 << (u + 1)) - 1)
            while rest:
                low = rest & -rest
                out.append((u, low.bit_length() - 1))
                rest ^= low
        return out

    @property
    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self._adj) // 2

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph({self.n}, {self.edges()!r})"


# ---------------------------------------------------------------------------
# Labelings


def identity_labeling(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def reversed_labeling(lab: Sequence[int]) -> tuple[int, ...]:
    """The reversal v -> n+1-lab(v), which preserves closedness."""
    n = len(lab)
    return tuple(n + 1 - x for x in lab)


def inverse_labeling(lab: Sequence[int]) -> tuple[int, ...]:
    n = len(lab)
    inv = [0] * n
    for v, label in enumerate(lab, start=1):
        inv[label - 1] = v
    return tuple(inv)


def validate_labeling(n: int, lab: Sequence[int]) -> None:
    if len(lab) != n:
        raise InvalidLabelingError(
            f"labeling has length {len(lab)}, graph has {n} vertices"
        )
    if sorted(lab) != list(range(1, n + 1)):
        raise InvalidLabelingError(f"labeling {tuple(lab)!r} is not a bijection on 1..{n}")


def relabel(g: Graph, lab: Sequence[int]) -> Graph:
    """Apply a labeling: the result has edge {lab(u),lab(v)} iff g has {u,v}."""
    validate_labeling(g.n, lab)
    adj = [0] * (g.n + 1)
    for u, v in g.edges():
        lu, lv = lab[u - 1], lab[v - 1]
        adj[lu] |= 1 << lv
        adj[lv] |= 1 << lu
    return Graph._from_bitsets(g.n, adj)


# ---------------------------------------------------------------------------
# Neighborhood splits, intervals, completeness


def upper_neighbor_bits(g: Graph, i: int) -> int:
    return g.neighbor_bits(i) & ~((1 << (i + 1)) - 1)


def lower_neighbor_bits(g: Graph, i: int) -> int:
    return g.neighbor_bits(i) & ((1 << i) - 1)


def upper_neighborhood(g: Graph, i: int) -> tuple[int, ...]:
    """Neighbors of i with larger labels."""
    return bits_to_tuple(upper_neighbor_bits(g, i))


def lower_neighborhood(g: Graph, i: int) -> tuple[int, ...]:
    """Neighbors of i with smaller labels."""
    return bits_to_tuple(lower_neighbor_bits(g, i))


def is_interval(s: Iterable[int]) -> bool:
    """True iff the set is empty or consists of consecutive integers."""
    members = set(s)
    if not members:
        return True
    return max(members) - min(members) + 1 == len(members)


def _bits_form_interval(bits: int) -> bool:
    if bits == 0:
        return True
    shifted = bits >> (bits & -bits).bit_length() - 1
    return shifted & (shifted + 1) == 0


def _bits_complete(g: Graph, bits: int) -> bool:
    rest = bits
    while rest:
        low = rest & -rest
        j = low.bit_length() - 1
        rest ^= low
        if bits & ~g._adj[j] & ~low:
            return False
    return True


def is_complete_on(g: Graph, s: Iterable[int]) -> bool:
    """True iff every pair of distinct vertices in s is an edge of g."""
    members = set(s)
    for v in members:
        g._check_vertex(v)
    return _bits_complete(g, bits_of(members))


# ---------------------------------------------------------------------------
# Distances


def bfs_distances(g: Graph, src: int) -> list[Optional[int]]:
    """Shortest-path edge counts from src; None marks unreachable vertices."""
    g._check_vertex(src)
    dist: list[Optional[int]] = [None] * g.n
    dist[src - 1] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        du = dist[u - 1]
        rest = g._adj[u]
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            if dist[v - 1] is None:
                dist[v - 1] = du + 1
                queue.append(v)
    return dist


def is_connected(g: Graph) -> bool:
    seen = 1 << 1
    frontier = seen
    while frontier:
        nxt = 0
        rest = frontier
        while rest:
            low = rest & -rest
            nxt |= g._adj[low.bit_length() - 1]
            rest ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen.bit_count() == g.n


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the components, each sorted, ordered by minimum vertex."""
    remaining = ((1 << (g.n + 1)) - 2)
    comps = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            rest = frontier
            while rest:
                low = rest & -rest
                nxt |= g._adj[low.bit_length() - 1]
                rest ^= low
            frontier = nxt & ~seen
            seen |= frontier
        comps.append(bits_to_tuple(seen))
        remaining &= ~seen
    return comps


def diameter(g: Graph) -> int:
    """Largest shortest-path distance over all vertex pairs."""
    best = 0
    for v in g.vertices():
        dist = bfs_distances(g, v)
        for d in dist:
            if d is None:
                raise NotConnectedError("diameter is undefined for disconnected graphs")
            if d > best:
                best = d
    return best


# ---------------------------------------------------------------------------
# Edge-list text format: first line "n m", then m lines "u v" with u < v.


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format; raise EdgeListParseError with line numbers."""
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise EdgeListParseError("line 1: missing header 'n m'")
    header = lines[0].split()
    if len(header) != 2:
        raise EdgeListParseError("line 1: header must be two integers 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise EdgeListParseError("line 1: header must be two integers 'n m'") from None
    if n < 1:
        raise EdgeListParseError(f"line 1: vertex count must be positive, got {n}")
    if m < 0:
        raise EdgeListParseError(f"line 1: edge count must be nonnegative, got {m}")
    if len(lines) - 1 != m:
        raise EdgeListParseError(
            f"line 1: header announces {m} edges but {len(lines) - 1} edge lines follow"
        )
    adj = [0] * (n + 1)
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(f"line {lineno}: expected 'u v', got {line.strip()!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(
                f"line {lineno}: expected two integers, got {line.strip()!r}"
            ) from None
        if u == v:
            raise EdgeListParseError(f"line {lineno}: self-loop '{u} {v}' is not allowed")
        if not (1 <= u < v <= n):
            raise EdgeListParseError(
                f"line {lineno}: edge '{u} {v}' must satisfy 1 <= u < v <= {n}"
            )
        if adj[u] >> v & 1:
            raise EdgeListParseError(f"line {lineno}: duplicate edge '{u} {v}'")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph._from_bitsets(n, adj)


def format_edge_list(g: Graph) -> str:
    """Serialize to the same text format, edges in lexicographic order."""
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"
