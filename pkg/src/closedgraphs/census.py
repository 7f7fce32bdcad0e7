"""Counting and enumerating connected closed labeled graphs layer by layer.

A connected graph with closed identity labeling is determined by its layer
sizes (1, a_1, ..., a_h) together with one link sequence per non-top layer:
the s-th vertex of layer N contributes b_s, its number of edges into layer
N+1, and these sequences are weakly increasing and end at a_{N+1}. Rebuilding
from the data places a clique on every layer and wires the s-th vertex of
layer N to the first b_s vertices of layer N+1, so graphs with a prescribed
layer composition are counted by a product of binomial coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from math import comb
from typing import Iterator

from .closure import is_closed_by_definition, layer_decomposition
from .errors import (
    DomainError,
    EmptyLinkError,
    InvalidSequenceError,
    NotClosedError,
    NotConnectedError,
)
from .graph import Graph, is_connected


@dataclass(frozen=True)
class LayerPartition:
    """Layer sizes (a_0=1, a_1, ..., a_h) of a connected closed labeled graph."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts:
            raise DomainError("a layer partition needs at least one part")
        if any(not isinstance(a, int) or a < 1 for a in self.parts):
            raise DomainError(f"layer sizes must be positive integers: {self.parts!r}")
        if self.parts[0] != 1:
            raise DomainError(f"the bottom layer has size 1, got {self.parts!r}")

    @classmethod
    def from_string(cls, text: str) -> "LayerPartition":
        """Parse comma-separated sizes; a missing leading 1 is supplied.

        "1,2,1" and "2,1" both mean (1, 2, 1); a string starting with 1 is
        taken as the full form.
        """
        try:
            values = tuple(int(tok) for tok in text.split(","))
        except ValueError:
            raise DomainError(f"partition {text!r} is not comma-separated integers") from None
        if not values:
            raise DomainError("empty partition")
        if values[0] != 1:
            values = (1,) + values
        return cls(values)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def h(self) -> int:
        return len(self.parts) - 1

    def block_start(self, N: int) -> int:
        """Smallest vertex of layer N (m_N)."""
        return sum(self.parts[:N]) + 1

    def block(self, N: int) -> tuple[int, ...]:
        """The vertices of layer N, a consecutive interval."""
        start = self.block_start(N)
        return tuple(range(start, start + self.parts[N]))

    def __str__(self) -> str:
        return ",".join(str(a) for a in self.parts)


@dataclass(frozen=True)
class SequenceFamily:
    """One forward-link sequence per non-top layer."""

    seqs: tuple[tuple[int, ...], ...]

    def __str__(self) -> str:
        return " ".join("(" + ",".join(str(b) for b in s) + ")" for s in self.seqs)


def validate_sequences(p: LayerPartition, f: SequenceFamily) -> None:
    """Check the family against its partition; raise InvalidSequenceError."""
    if len(f.seqs) != p.h:
        raise InvalidSequenceError(
            f"expected {p.h} sequences for partition {p}, got {len(f.seqs)}"
        )
    for N, seq in enumerate(f.seqs):
        if len(seq) != p.parts[N]:
            raise InvalidSequenceError(
                f"sequence {N} has length {len(seq)}, layer has {p.parts[N]} vertices"
            )
        if any(not isinstance(b, int) or b < 0 for b in seq):
            raise InvalidSequenceError(f"sequence {N} has negative entries: {seq!r}")
        if any(seq[s] > seq[s + 1] for s in range(len(seq) - 1)):
            raise InvalidSequenceError(f"sequence {N} is not weakly increasing: {seq!r}")
        if seq[-1] != p.parts[N + 1]:
            raise InvalidSequenceError(
                f"sequence {N} must end at the next layer size {p.parts[N + 1]}, got {seq[-1]}"
            )


def sequences_of(g: Graph) -> tuple[LayerPartition, SequenceFamily]:
    """Read off layer sizes and forward-link counts of a closed labeled graph."""
    if not is_connected(g):
        raise NotConnectedError("layer sequences require a connected graph")
    if not is_closed_by_definition(g):
        raise NotClosedError("layer sequences require a closed identity labeling")
    decomp = layer_decomposition(g)
    partition = LayerPartition(decomp.sizes)
    seqs = []
    for N in range(decomp.h):
        above = set(decomp.layers[N + 1])
        seqs.append(
            tuple(
                sum(1 for u in g.neighbors(v) if u in above)
                for v in decomp.layers[N]
            )
        )
    return partition, SequenceFamily(tuple(seqs))


def graph_from_sequences(p: LayerPartition, f: SequenceFamily) -> Graph:
    """Rebuild the unique graph with the given layers and link sequences."""
    validate_sequences(p, f)
    adj = [0] * (p.n + 1)

    def add_edge(u: int, v: int) -> None:
        adj[u] |= 1 << v
        adj[v] |= 1 << u

    for N in range(p.h + 1):
        block = p.block(N)
        for i in range(len(block)):
            for j in range(i + 1, len(block)):
                add_edge(block[i], block[j])
    for N in range(p.h):
        start = p.block_start(N)
        nxt = p.block_start(N + 1)
        for s, b in enumerate(f.seqs[N], start=1):
            u = start + s - 1
            for v in range(nxt, nxt + b):
                add_edge(u, v)
    return Graph._from_bitsets(p.n, adj)


def forward_interval(
    p: LayerPartition, f: SequenceFamily, N: int, s: int
) -> tuple[int, ...]:
    """Forward neighbors of the s-th vertex of layer N: an interval from m_{N+1}."""
    validate_sequences(p, f)
    if not 0 <= N < p.h:
        raise DomainError(f"layer index {N} is outside 0..{p.h - 1}")
    if not 1 <= s <= p.parts[N]:
        raise DomainError(f"position {s} is outside 1..{p.parts[N]} in layer {N}")
    b = f.seqs[N][s - 1]
    if b == 0:
        raise EmptyLinkError(
            f"vertex {s} of layer {N} has no forward edges, so no forward interval"
        )
    start = p.block_start(N + 1)
    return tuple(range(start, start + b))


def enumerate_sequences(length: int, last: int) -> Iterator[tuple[int, ...]]:
    """Weakly increasing nonnegative sequences of the given length ending at last.

    Emitted in lexicographic order; there are C(last+length-1, length-1) of
    them.
    """
    if length < 1:
        raise DomainError(f"sequence length must be positive, got {length}")
    if last < 1:
        raise DomainError(f"final entry must be positive, got {last}")
    for prefix in combinations_with_replacement(range(last + 1), length - 1):
        yield prefix + (last,)


def count_closed_graphs(p: LayerPartition) -> int:
    """Number of connected closed labeled graphs with the given layer sizes."""
    total = 1
    for N in range(p.h):
        total *= comb(p.parts[N + 1] + p.parts[N] - 1, p.parts[N] - 1)
    return total


def enumerate_closed_graphs(p: LayerPartition) -> Iterator[Graph]:
    """All graphs counted by :func:`count_closed_graphs`, one per sequence family.

    Families stream in lexicographic order of the tuple (S_0, ..., S_{h-1}).
    """
    streams = [
        list(enumerate_sequences(p.parts[N], p.parts[N + 1])) for N in range(p.h)
    ]
    for seqs in product(*streams):
        yield graph_from_sequences(p, SequenceFamily(seqs))


def layer_partitions(n: int) -> Iterator[LayerPartition]:
    """All layer compositions (1, a_1, ..., a_h) of n, lexicographic in (a_1, ...)."""
    if n < 1:
        raise DomainError(f"vertex count must be positive, got {n}")

    def compositions(m: int) -> Iterator[tuple[int, ...]]:
        if m == 0:
            yield ()
            return
        for first in range(1, m + 1):
            for rest in compositions(m - first):
                yield (first,) + rest

    for tail in compositions(n - 1):
        yield LayerPartition((1,) + tail)


def census_total(n: int) -> int:
    """Connected graphs on {1..n} whose identity labeling is closed."""
    return sum(count_closed_graphs(p) for p in layer_partitions(n))
