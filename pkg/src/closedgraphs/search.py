"""Finding closed labelings of arbitrary graphs.

Two routes, kept deliberately independent so one can audit the other:

* :func:`all_closed_labelings_bruteforce` filters every permutation against
  the definitional check (the oracle all counting results are tested against);
* :func:`find_closed_labeling` runs a pruned backtracking search that hands
  out labels n, n-1, ..., 1, admitting a vertex only when its already-labeled
  neighbors form a clique equal to the most recently labeled vertices of its
  own component (the incremental form of the interval criterion).

Closedness is a per-component property under order-collapse of the labels, so
components are searched independently and disconnected graphs are legal here.
"""

from __future__ import annotations

from itertools import permutations
from typing import Optional, Sequence

from .errors import OracleLimitError
from .graph import Graph, bits_to_tuple, connected_components, relabel

ORACLE_BOUND_DEFAULT = 9


def labeling_is_closed(g: Graph, lab: Sequence[int]) -> bool:
    """Whether relabeling g by lab yields a closed identity labeling.

    Equivalent to ``is_closed_by_definition(relabel(g, lab))`` but avoids
    building the relabeled graph: the two neighborhood halves of each vertex
    are split by comparing labels, and their cliqueness is label-independent.
    """
    adj = g._adj
    n = g.n
    for v in range(1, n + 1):
        lv = lab[v - 1]
        upper = 0
        lower = 0
        rest = adj[v]
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            rest ^= low
            if lab[u - 1] > lv:
                upper |= low
            else:
                lower |= low
        for side in (upper, lower):
            probe = side
            while probe:
                low = probe & -probe
                j = low.bit_length() - 1
                probe ^= low
                if side & ~adj[j] & ~low:
                    return False
    return True


def all_closed_labelings_bruteforce(
    g: Graph, bound: int = ORACLE_BOUND_DEFAULT
) -> list[tuple[int, ...]]:
    """Every labeling whose application leaves the graph closed, in lex order."""
    if g.n > bound:
        raise OracleLimitError(
            f"brute force over {g.n}! permutations exceeds the bound {bound}"
        )
    return [p for p in permutations(range(1, g.n + 1)) if labeling_is_closed(g, p)]


# ---------------------------------------------------------------------------
# Backtracking search


def _component_subgraph(g: Graph, comp: tuple[int, ...]) -> Graph:
    """Induced subgraph on comp, vertices renumbered 1..|comp| in sorted order."""
    index = {v: i for i, v in enumerate(comp, start=1)}
    adj = [0] * (len(comp) + 1)
    for v in comp:
        rest = g._adj[v]
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            rest ^= low
            adj[index[v]] |= 1 << index[u]
    return Graph._from_bitsets(len(comp), adj)


def _descending_search(g: Graph) -> Optional[tuple[int, ...]]:
    """First closed labeling of a connected graph found by the pruned search.

    Labels are assigned n, n-1, ..., 1; candidate vertices are tried in
    ascending order. A vertex is admissible when its already-labeled
    neighborhood is exactly the suffix of most recently labeled vertices and
    forms a clique; on a connected graph only the first assignment may have an
    empty labeled neighborhood.
    """
    n = g.n
    adj = g._adj
    stack: list[int] = []
    assigned = 0

    def extend() -> bool:
        nonlocal assigned
        if len(stack) == n:
            return True
        for v in range(1, n + 1):
            bit = 1 << v
            if assigned & bit:
                continue
            nb = adj[v] & assigned
            k = nb.bit_count()
            if k == 0:
                if stack:
                    continue
            else:
                suffix = 0
                for u in stack[-k:]:
                    suffix |= 1 << u
                if nb != suffix:
                    continue
                ok = True
                probe = nb
                while probe:
                    low = probe & -probe
                    j = low.bit_length() - 1
                    probe ^= low
                    if nb & ~adj[j] & ~low:
                        ok = False
                        break
                if not ok:
                    continue
            stack.append(v)
            assigned |= bit
            if extend():
                return True
            stack.pop()
            assigned &= ~bit
        return False

    if not extend():
        return None
    lab = [0] * n
    for pos, v in enumerate(stack):
        lab[v - 1] = n - pos
    return tuple(lab)


def _full_neighborhood_classes(g: Graph) -> list[tuple[int, ...]]:
    """Vertices grouped by equal closed neighborhood {v} | N(v), by minimum."""
    groups: dict[int, list[int]] = {}
    for v in g.vertices():
        groups.setdefault(g._adj[v] | (1 << v), []).append(v)
    return [tuple(members) for members in sorted(groups.values())]


def _lexmin_connected(g: Graph, base: tuple[int, ...]) -> tuple[int, ...]:
    """Lexicographically least closed labeling of a connected graph.

    Every closed labeling factors through a fixed one as base composed with a
    closed relabeling of the relabeled graph, and those relabelings either fix
    each equal-neighborhood class setwise or send it to its mirror image.
    Within a family the least composite is obtained greedily, consuming each
    class's available labels in ascending vertex order.
    """
    n = g.n
    g2 = relabel(g, base)
    classes = _full_neighborhood_classes(g2)
    class_of = {}
    for idx, members in enumerate(classes):
        for v in members:
            class_of[v] = idx

    best: Optional[tuple[int, ...]] = None
    for mirrored in (False, True):
        pools = [
            sorted((n + 1 - x for x in members) if mirrored else members)
            for members in classes
        ]
        taken = [0] * len(classes)
        lab = []
        for v in range(1, n + 1):
            idx = class_of[base[v - 1]]
            lab.append(pools[idx][taken[idx]])
            taken[idx] += 1
        candidate = tuple(lab)
        if best is None or candidate < best:
            best = candidate
    assert best is not None
    return best


def _lexmin_multi_component(g: Graph) -> Optional[tuple[int, ...]]:
    """Lexicographically least closed labeling, components interleaved freely.

    Depth-first over vertices 1..n trying labels in ascending order; a partial
    assignment is abandoned as soon as a fully labeled triple violates the
    definition, so the first completion is the least closed labeling.
    """
    n = g.n
    adj = g._adj
    lab = [0] * (n + 1)  # lab[v] = label of v, 0 while unassigned

    def compatible(v: int, value: int) -> bool:
        rest = adj[v]
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            rest ^= low
            lu = lab[u]
            if lu == 0:
                continue
            # v as the corner of the triple: u, w labeled neighbors of v
            other = adj[v] & ~low
            while other:
                low2 = other & -other
                w = low2.bit_length() - 1
                other ^= low2
                if w < u:
                    continue  # each pair once
                lw = lab[w]
                if lw == 0:
                    continue
                same_side = (lu > value) == (lw > value)
                if same_side and not adj[u] >> w & 1:
                    return False
            # u as the corner: v and w labeled neighbors of u
            others = adj[u] & ~(1 << v)
            while others:
                low2 = others & -others
                w = low2.bit_length() - 1
                others ^= low2
                lw = lab[w]
                if lw == 0:
                    continue
                same_side = (value > lu) == (lw > lu)
                if same_side and not adj[v] >> w & 1:
                    return False
        return True

    used = 0

    def assign(v: int) -> bool:
        nonlocal used
        if v > n:
            return True
        for value in range(1, n + 1):
            bit = 1 << value
            if used & bit:
                continue
            if not compatible(v, value):
                continue
            lab[v] = value
            used |= bit
            if assign(v + 1):
                return True
            lab[v] = 0
            used &= ~bit
        return False

    if not assign(1):
        return None
    return tuple(lab[1:])


def find_closed_labeling(g: Graph) -> Optional[tuple[int, ...]]:
    """Lexicographically least closed labeling, or None when the graph has none."""
    comps = connected_components(g)
    if len(comps) == 1:
        base = _descending_search(g)
        if base is None:
            return None
        return _lexmin_connected(g, base)
    for comp in comps:
        if _descending_search(_component_subgraph(g, comp)) is None:
            return None
    return _lexmin_multi_component(g)


def is_closed_graph(g: Graph) -> bool:
    """Whether some labeling of g is closed."""
    return all(
        _descending_search(_component_subgraph(g, comp)) is not None
        for comp in connected_components(g)
    )
