"""Simple undirected graphs, ordered forbidden patterns, and orientations.

Vertex orderings are plain permutations of ``0..n-1``.  The two three-vertex
patterns below characterize comparability and cocomparability orderings; the
two four-vertex patterns are the extra obstructions an apex ordering of a
simple-triangle graph must avoid.  Rules and predicates here are all pure
functions over immutable values.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

from ._bits import iter_bits
from .errors import EdgeSetMismatch, NotComparabilityOrdering, SizeMismatch
from .orders import PartialOrder

__all__ = [
    "Graph",
    "Orientation",
    "OrderedPattern",
    "PATTERN_CP",
    "PATTERN_CPC",
    "PATTERN_P1",
    "PATTERN_P2",
    "complement",
    "find_pattern",
    "is_comparability_ordering",
    "is_cocomparability_ordering",
    "fulfills_c4_rule",
    "fulfills_2k2_rule",
    "orient_complement_by_ordering",
    "orientation_from_ordering",
    "is_transitive_orientation",
    "is_alternating_orientation",
    "union_is_acyclic",
    "chordless_cycles",
    "induced_four_cycles",
    "induced_2k2s",
    "cycle_graph",
    "path_graph",
    "complete_graph",
    "empty_graph",
]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``edges`` holds normalized pairs ``(u, v)`` with u < v; ``adj`` caches a
    neighbour bitmask per vertex.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        adj = [0] * self.n
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u}, {v}) is not normalized or out of range")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "adj", tuple(adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        normalized = frozenset((min(u, v), max(u, v)) for u, v in edges)
        return cls(n, normalized)

    def adjacent(self, u: int, v: int) -> bool:
        return self.adj[u] >> v & 1 == 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def __len__(self) -> int:
        return self.n


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    return Graph(n, frozenset())


def complement(g: Graph) -> Graph:
    """Graph on the same vertices whose edges are exactly the non-edges of g."""
    edges = frozenset(
        (u, v) for u, v in combinations(range(g.n), 2) if not g.adjacent(u, v)
    )
    return Graph(g.n, edges)


@dataclass(frozen=True)
class OrderedPattern:
    """Edge/non-edge constraints on a tuple of ordering positions.

    Positions are 0-based ranks inside the matched subordering; pairs not
    listed in either set are unconstrained.
    """

    size: int
    required_edges: frozenset[tuple[int, int]]
    required_non_edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        both = self.required_edges & self.required_non_edges
        if both:
            raise ValueError(f"positions {sorted(both)} required present and absent")
        for i, j in self.required_edges | self.required_non_edges:
            if not 0 <= i < j < self.size:
                raise ValueError(f"position pair ({i}, {j}) invalid for size {self.size}")


def _pattern(size, edges, non_edges):
    return OrderedPattern(size, frozenset(edges), frozenset(non_edges))


# Middle vertex adjacent to both ends of a non-edge: breaks transitive
# orientability along the ordering.
PATTERN_CP = _pattern(3, [(0, 1), (1, 2)], [(0, 2)])
# An edge spanning a vertex adjacent to neither end: breaks cocomparability.
PATTERN_CPC = _pattern(3, [(0, 2)], [(0, 1), (1, 2)])
# Interleaved edge pair (0-2 and 1-3) with the inner and outer pairs absent.
PATTERN_P1 = _pattern(4, [(0, 2), (1, 3)], [(1, 2), (0, 3)])
# Nested edge pair (0-3 over 1-2) with the interleaved pairs absent.
PATTERN_P2 = _pattern(4, [(0, 3), (1, 2)], [(0, 2), (1, 3)])

APEX_PATTERNS = (("cpc", PATTERN_CPC), ("p1", PATTERN_P1), ("p2", PATTERN_P2))


def _check_ordering(g: Graph, ordering: Sequence[int]) -> None:
    if len(ordering) != g.n:
        raise SizeMismatch(f"ordering has {len(ordering)} vertices, graph has {g.n}")
    if sorted(ordering) != list(range(g.n)):
        raise ValueError(f"{tuple(ordering)!r} is not a permutation of 0..{g.n - 1}")


def find_pattern(
    g: Graph, ordering: Sequence[int], pattern: OrderedPattern
) -> Optional[tuple[int, ...]]:
    """First ordering-increasing vertex tuple matching ``pattern``, or None.

    Tuples are scanned in lexicographic order of their ordering positions,
    so the returned witness is deterministic.
    """
    _check_ordering(g, ordering)
    adj = g.adj
    edges = tuple(pattern.required_edges)
    non_edges = tuple(pattern.required_non_edges)
    for positions in combinations(range(g.n), pattern.size):
        verts = tuple(ordering[p] for p in positions)
        if all(adj[verts[i]] >> verts[j] & 1 for i, j in edges) and not any(
            adj[verts[i]] >> verts[j] & 1 for i, j in non_edges
        ):
            return verts
    return None


def is_comparability_ordering(g: Graph, ordering: Sequence[int]) -> bool:
    """No two adjacent pairs u < v < w with uv, vw edges but uw a non-edge."""
    return find_pattern(g, ordering, PATTERN_CP) is None


def is_cocomparability_ordering(g: Graph, ordering: Sequence[int]) -> bool:
    """Every edge uw spanning a middle vertex v has uv or vw present."""
    return find_pattern(g, ordering, PATTERN_CPC) is None


@functools.cache
def induced_four_cycles(g: Graph) -> tuple[tuple[int, int, int, int], ...]:
    """Induced 4-cycles as tuples (u, v, w, x) with edges uv, vw, wx, xu."""
    out = []
    for quad in combinations(range(g.n), 4):
        inside = 0
        for q in quad:
            inside |= 1 << q
        degs = [(g.adj[q] & inside).bit_count() for q in quad]
        if degs != [2, 2, 2, 2]:
            continue
        u = quad[0]
        rest = [q for q in quad[1:]]
        opposite = [q for q in rest if not g.adjacent(u, q)]
        if len(opposite) != 1:
            continue
        w = opposite[0]
        v, x = [q for q in rest if q != w]
        out.append((u, v, w, x))
    return tuple(out)


@functools.cache
def induced_2k2s(g: Graph) -> tuple[tuple[tuple[int, int], tuple[int, int]], ...]:
    """Induced pairs of disjoint edges with no other adjacency among the four."""
    out = []
    for quad in combinations(range(g.n), 4):
        inside = 0
        for q in quad:
            inside |= 1 << q
        pairs = [
            (a, b) for a, b in combinations(quad, 2) if g.adjacent(a, b)
        ]
        if len(pairs) != 2:
            continue
        (a, b), (c, d) = pairs
        if len({a, b, c, d}) == 4:
            out.append(((a, b), (c, d)))
    return tuple(out)


def _all_equal(values: tuple[bool, ...]) -> bool:
    return all(values) or not any(values)


def fulfills_c4_rule(g: Graph, ordering: Sequence[int]) -> bool:
    """All-equal comparison condition around every induced 4-cycle.

    For a cycle (u, v, w, x) the four comparisons u<v, w<v, w<x, u<x must
    agree; both cyclic labelings are evaluated (they always agree, since one
    negates all four comparisons of the other).
    """
    _check_ordering(g, ordering)
    pos = [0] * g.n
    for i, vtx in enumerate(ordering):
        pos[vtx] = i
    for u, v, w, x in induced_four_cycles(g):
        for a, b, c, d in ((u, v, w, x), (v, w, x, u)):
            if not _all_equal(
                (pos[a] < pos[b], pos[c] < pos[b], pos[c] < pos[d], pos[a] < pos[d])
            ):
                return False
    return True


def fulfills_2k2_rule(g: Graph, ordering: Sequence[int]) -> bool:
    """All-equal comparison condition across every induced disjoint edge pair.

    With edges uw and vx the four comparisons u<v, w<v, w<x, u<x must agree;
    the condition does not depend on which labeling of the two edges is used.
    """
    _check_ordering(g, ordering)
    pos = [0] * g.n
    for i, vtx in enumerate(ordering):
        pos[vtx] = i
    for (u, w), (v, x) in induced_2k2s(g):
        if not _all_equal(
            (pos[u] < pos[v], pos[w] < pos[v], pos[w] < pos[x], pos[u] < pos[x])
        ):
            return False
    return True


def orient_complement_by_ordering(g: Graph, ordering: Sequence[int]) -> PartialOrder:
    """Orient every non-edge of g along the ordering and validate transitivity.

    Returns the partial order with u below v iff uv is a non-edge and u comes
    first; raises :class:`NotComparabilityOrdering` when the oriented
    non-edges are not transitive.
    """
    _check_ordering(g, ordering)
    pairs = []
    for i in range(g.n):
        for j in range(i + 1, g.n):
            u, v = ordering[i], ordering[j]
            if not g.adjacent(u, v):
                pairs.append((u, v))
    try:
        return PartialOrder(g.n, frozenset(pairs))
    except ValueError as exc:
        raise NotComparabilityOrdering(
            "ordering does not transitively orient the complement"
        ) from exc


@dataclass(frozen=True)
class Orientation:
    """A direction per edge, stored as arcs (tail, head)."""

    n: int
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self):
        for u, v in self.arcs:
            if not (0 <= u < self.n and 0 <= v < self.n) or u == v:
                raise ValueError(f"arc ({u}, {v}) invalid for n={self.n}")
            if (v, u) in self.arcs:
                raise ValueError(f"edge {{{u}, {v}}} oriented both ways")

    def underlying_edges(self) -> frozenset[tuple[int, int]]:
        return frozenset((min(u, v), max(u, v)) for u, v in self.arcs)

    def has(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs


def orientation_from_ordering(g: Graph, ordering: Sequence[int]) -> Orientation:
    """Direct every edge of g from the earlier to the later endpoint."""
    _check_ordering(g, ordering)
    pos = [0] * g.n
    for i, vtx in enumerate(ordering):
        pos[vtx] = i
    arcs = frozenset(
        (u, v) if pos[u] < pos[v] else (v, u) for u, v in g.edges
    )
    return Orientation(g.n, arcs)


def _check_orients(g: Graph, o: Orientation) -> None:
    if o.n != g.n:
        raise EdgeSetMismatch(f"orientation is on {o.n} vertices, graph on {g.n}")
    if o.underlying_edges() != g.edges:
        raise EdgeSetMismatch("orientation does not cover exactly the graph's edges")


def is_transitive_orientation(g: Graph, o: Orientation) -> bool:
    """True iff every directed path u -> v -> w is closed by the arc u -> w."""
    _check_orients(g, o)
    heads: dict[int, list[int]] = {}
    for u, v in o.arcs:
        heads.setdefault(u, []).append(v)
    for u, v in o.arcs:
        for w in heads.get(v, ()):
            if (u, w) not in o.arcs:
                return False
    return True


@functools.cache
def chordless_cycles(g: Graph, min_length: int = 4) -> tuple[tuple[int, ...], ...]:
    """All chordless cycles of g with at least ``min_length`` vertices.

    Depth-first extension of induced paths anchored at each cycle's smallest
    vertex; exponential in the worst case, intended for small instances.
    """
    found: list[tuple[int, ...]] = []
    adj = g.adj

    def extend(start: int, path: list[int], blocked: int) -> None:
        last = path[-1]
        for w in iter_bits(adj[last] & ~blocked):
            chord_free = not any(adj[w] >> p & 1 for p in path[1:-1])
            if adj[w] >> start & 1:
                # closing the cycle; a chord from w into the path interior,
                # like the edge back to start from anywhere deeper, kills it
                if chord_free and path[1] < w and len(path) + 1 >= min_length:
                    found.append(tuple(path) + (w,))
                continue
            if not chord_free:
                continue
            path.append(w)
            extend(start, path, blocked | (1 << w))
            path.pop()

    for s in range(g.n):
        low_mask = (1 << (s + 1)) - 1
        for v in iter_bits(adj[s] & ~low_mask):
            extend(s, [s, v], low_mask | (1 << v))
    return tuple(found)


def is_alternating_orientation(g: Graph, o: Orientation) -> bool:
    """Directions alternate around every chordless cycle of length >= 4.

    Equivalently, no two consecutive cycle edges form a directed path, which
    is what transitivity can possibly mean on a chordless cycle.
    """
    _check_orients(g, o)
    arcs = o.arcs
    for cycle in chordless_cycles(g, 4):
        m = len(cycle)
        for i in range(m):
            prev_in = (cycle[i - 1], cycle[i]) in arcs
            next_in = (cycle[(i + 1) % m], cycle[i]) in arcs
            if prev_in != next_in:
                return False
    return True


def union_is_acyclic(g: Graph, o_g: Orientation, o_gc: Orientation) -> bool:
    """No directed cycle in the union of the two orientations.

    ``o_g`` must orient exactly the edges of g and ``o_gc`` exactly the edges
    of its complement, so the union orients the complete graph.
    """
    _check_orients(g, o_g)
    _check_orients(complement(g), o_gc)
    indeg = [0] * g.n
    out: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for u, v in o_g.arcs | o_gc.arcs:
        out[u].append(v)
        indeg[v] += 1
    queue = [v for v in range(g.n) if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == g.n
