"""Independent brute-force oracles backing the acceptance suite.

Nothing here shares a code path with the recognizer: realizability is
decided straight from the definition by trying every apex ordering and
solving the base-interval constraints each one induces, orientation-level
characterizations are checked by enumerating orientations, and triangle
intersection is re-decided with exact integer geometry.
"""
from __future__ import annotations

import random
from itertools import combinations, permutations
from typing import Iterator, Optional, Sequence

from .errors import LimitExceeded, NotSimpleTriangle
from .graphs import (
    Graph,
    Orientation,
    complement,
    is_alternating_orientation,
    is_transitive_orientation,
    orientation_from_ordering,
)
from .orders import PartialOrder
from .triangles import TriangleRepresentation, verify_representation

__all__ = [
    "geometric_search_realization",
    "geometric_search_order_realization",
    "grid_search_realization",
    "enumerate_orientations",
    "has_alternating_transitive_pair",
    "all_transitive_complements_extend",
    "exact_triangle_intersection",
    "triangle_interiors_intersect",
    "random_triangle_pair",
]

DEFAULT_LIMIT = 6


def _solve_base_intervals(
    sigma: Sequence[int], separate: Sequence[int]
) -> Optional[list[tuple[int, int]]]:
    """Minimal integer base intervals for a fixed apex ordering, if any exist.

    ``separate[i] >> j & 1`` (for positions i < j) says the pair must be
    disjoint, i.e. r(i) < l(j); otherwise l(j) <= r(i) is required.  These
    are pure difference constraints, solved as longest paths from an implicit
    source pinned at coordinate 1.  Any feasible system has a solution inside
    1..2n because a longest constraint chain visits each endpoint variable at
    most once.
    """
    n = len(sigma)
    # variables: 0..n-1 left endpoints, n..2n-1 right endpoints (by position)
    edges = [(i, n + i, 1) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if separate[i] >> j & 1:
                edges.append((n + i, j, 1))
            else:
                edges.append((j, n + i, 0))
    dist = [1] * (2 * n)
    for _ in range(2 * n + 1):
        changed = False
        for x, y, w in edges:
            if dist[x] + w > dist[y]:
                dist[y] = dist[x] + w
                changed = True
        if not changed:
            return [(dist[i], dist[n + i]) for i in range(n)]
    return None


def geometric_search_realization(
    g: Graph, limit: int = DEFAULT_LIMIT
) -> Optional[TriangleRepresentation]:
    """Definition-level search for a triangle representation of g.

    Tries every apex ordering and solves the induced base constraints; the
    first hit is verified against the adjacency predicate before being
    returned.  Shares no code with :func:`simpletri.recognition.recognize`.
    """
    if g.n > limit:
        raise LimitExceeded(f"n={g.n} exceeds oracle limit {limit}")
    n = g.n
    adj = g.adj
    for sigma in permutations(range(n)):
        separate = [0] * n
        for i in range(n):
            for j in range(i + 1, n):
                if not adj[sigma[i]] >> sigma[j] & 1:
                    separate[i] |= 1 << j
        base_by_pos = _solve_base_intervals(sigma, separate)
        if base_by_pos is None:
            continue
        t = _assemble(sigma, base_by_pos)
        assert verify_representation(g, t)
        return t
    return None


def geometric_search_order_realization(
    p: PartialOrder, limit: int = DEFAULT_LIMIT
) -> Optional[TriangleRepresentation]:
    """Triangle representation realizing exactly the precedences of ``p``.

    A triangle lies completely left of another only if its apex does, so an
    apex ordering can realize ``p`` only when it extends it; every extension
    is tried with disjointness required exactly on the related pairs.
    """
    if p.n > limit:
        raise LimitExceeded(f"n={p.n} exceeds oracle limit {limit}")
    n = p.n
    for sigma in permutations(range(n)):
        separate = [0] * n
        feasible = True
        for i in range(n):
            for j in range(i + 1, n):
                if p.less(sigma[j], sigma[i]):
                    feasible = False
                    break
                if p.less(sigma[i], sigma[j]):
                    separate[i] |= 1 << j
            if not feasible:
                break
        if not feasible:
            continue
        base_by_pos = _solve_base_intervals(sigma, separate)
        if base_by_pos is None:
            continue
        t = _assemble(sigma, base_by_pos)
        assert t.induced_order() == p
        return t
    return None


def _assemble(
    sigma: Sequence[int], base_by_pos: Sequence[tuple[int, int]]
) -> TriangleRepresentation:
    n = len(sigma)
    apex = [0] * n
    base = [(0, 0)] * n
    for i, v in enumerate(sigma):
        apex[v] = i + 1
        base[v] = base_by_pos[i]
    return TriangleRepresentation(tuple(apex), tuple(base))


def grid_search_realization(
    g: Graph, limit: int = 4
) -> Optional[TriangleRepresentation]:
    """Assumption-free exhaustive search over the endpoint grid 1..2n.

    Enumerates apex orderings times all base assignments with endpoints on
    the grid, pruning a partial assignment as soon as two placed triangles
    contradict the required adjacency.  Far slower than the constraint
    solver; used to cross-validate it on tiny instances.
    """
    if g.n > limit:
        raise LimitExceeded(f"n={g.n} exceeds grid search limit {limit}")
    n = g.n
    if n == 0:
        return TriangleRepresentation((), ())
    pool = [
        (lo, hi) for lo in range(1, 2 * n + 1) for hi in range(lo + 1, 2 * n + 1)
    ]
    adj = g.adj
    for sigma in permutations(range(n)):
        bases: list[tuple[int, int]] = []

        def dfs() -> bool:
            idx = len(bases)
            if idx == n:
                return True
            v = sigma[idx]
            for cand in pool:
                ok = True
                for jdx in range(idx):
                    u = sigma[jdx]
                    disjoint = bases[jdx][1] < cand[0]
                    if disjoint == (adj[u] >> v & 1 == 1):
                        ok = False
                        break
                if ok:
                    bases.append(cand)
                    if dfs():
                        return True
                    bases.pop()
            return False

        if dfs():
            t = _assemble(sigma, bases)
            assert verify_representation(g, t)
            return t
    return None


def enumerate_orientations(
    g: Graph, mode: str, limit: int = 16
) -> Iterator[Orientation]:
    """Yield exactly the transitive or alternating orientations of g.

    Filters all 2^|E| direction assignments, in increasing order of the flip
    mask over the sorted edge list.
    """
    if mode not in ("transitive", "alternating"):
        raise ValueError(f"unknown mode {mode!r}")
    edge_list = sorted(g.edges)
    if len(edge_list) > limit:
        raise LimitExceeded(f"|E|={len(edge_list)} exceeds orientation limit {limit}")
    check = is_transitive_orientation if mode == "transitive" else is_alternating_orientation
    for flips in range(1 << len(edge_list)):
        arcs = frozenset(
            (v, u) if flips >> i & 1 else (u, v)
            for i, (u, v) in enumerate(edge_list)
        )
        o = Orientation(g.n, arcs)
        if check(g, o):
            yield o


def has_alternating_transitive_pair(g: Graph, limit: int = DEFAULT_LIMIT) -> bool:
    """Some alternating orientation of g plus transitive orientation of the
    complement whose union is acyclic.

    An acyclic union admits a topological vertex ordering, and that ordering
    induces both orientations back; conversely any single ordering induces an
    acyclic union.  So it suffices to scan vertex orderings.
    """
    if g.n > limit:
        raise LimitExceeded(f"n={g.n} exceeds oracle limit {limit}")
    gc = complement(g)
    for sigma in permutations(range(g.n)):
        o_gc = orientation_from_ordering(gc, sigma)
        if not is_transitive_orientation(gc, o_gc):
            continue
        o_g = orientation_from_ordering(g, sigma)
        if is_alternating_orientation(g, o_g):
            return True
    return False


def all_transitive_complements_extend(g: Graph, limit: int = DEFAULT_LIMIT) -> bool:
    """Every transitive orientation of the complement extends to an acyclic
    union with some alternating orientation of g.

    Requires g to be accepted by the recognizer.  Every transitive
    orientation of the complement is induced by each of its topological
    orderings, so one scan of all vertex orderings visits them all; a
    particular orientation succeeds when at least one of its orderings
    induces an alternating orientation of g.
    """
    from .recognition import recognize

    if g.n > limit:
        raise LimitExceeded(f"n={g.n} exceeds oracle limit {limit}")
    if recognize(g) is None:
        raise NotSimpleTriangle("graph is not a simple-triangle graph")
    gc = complement(g)
    outcome: dict[frozenset[tuple[int, int]], bool] = {}
    for sigma in permutations(range(g.n)):
        o_gc = orientation_from_ordering(gc, sigma)
        if not is_transitive_orientation(gc, o_gc):
            continue
        key = o_gc.arcs
        if outcome.get(key):
            continue
        o_g = orientation_from_ordering(g, sigma)
        outcome[key] = is_alternating_orientation(g, o_g)
    return all(outcome.values())


# --- exact integer geometry -------------------------------------------------

Point = tuple[int, int]


def _cross(a: Point, b: Point, c: Point) -> int:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _on_segment(a: Point, b: Point, p: Point) -> bool:
    if _cross(a, b, p) != 0:
        return False
    return (
        min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


def _segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Closed segment intersection, collinear overlaps included."""
    d1 = _cross(c, d, a)
    d2 = _cross(c, d, b)
    d3 = _cross(a, b, c)
    d4 = _cross(a, b, d)
    if (d1 > 0 and d2 < 0 or d1 < 0 and d2 > 0) and (
        d3 > 0 and d4 < 0 or d3 < 0 and d4 > 0
    ):
        return True
    return (
        _on_segment(c, d, a)
        or _on_segment(c, d, b)
        or _on_segment(a, b, c)
        or _on_segment(a, b, d)
    )


def _segments_cross_properly(a: Point, b: Point, c: Point, d: Point) -> bool:
    d1 = _cross(c, d, a)
    d2 = _cross(c, d, b)
    d3 = _cross(a, b, c)
    d4 = _cross(a, b, d)
    return (d1 > 0 and d2 < 0 or d1 < 0 and d2 > 0) and (
        d3 > 0 and d4 < 0 or d3 < 0 and d4 > 0
    )


def _point_in_triangle(p: Point, tri: tuple[Point, Point, Point], strict: bool) -> bool:
    d1 = _cross(tri[0], tri[1], p)
    d2 = _cross(tri[1], tri[2], p)
    d3 = _cross(tri[2], tri[0], p)
    if strict:
        return (d1 > 0 and d2 > 0 and d3 > 0) or (d1 < 0 and d2 < 0 and d3 < 0)
    has_neg = d1 < 0 or d2 < 0 or d3 < 0
    has_pos = d1 > 0 or d2 > 0 or d3 > 0
    return not (has_neg and has_pos)


def _corners(t: TriangleRepresentation, v: int) -> tuple[Point, Point, Point]:
    lo, hi = t.base[v]
    return ((t.apex[v], 1), (lo, 0), (hi, 0))


def _sides(tri: tuple[Point, Point, Point]):
    return ((tri[0], tri[1]), (tri[1], tri[2]), (tri[2], tri[0]))


def exact_triangle_intersection(t: TriangleRepresentation, u: int, v: int) -> bool:
    """Closed filled triangles share at least one point; integer-exact."""
    tu, tv = _corners(t, u), _corners(t, v)
    for p in tu:
        if _point_in_triangle(p, tv, strict=False):
            return True
    for p in tv:
        if _point_in_triangle(p, tu, strict=False):
            return True
    for a, b in _sides(tu):
        for c, d in _sides(tv):
            if _segments_intersect(a, b, c, d):
                return True
    return False


def triangle_interiors_intersect(t: TriangleRepresentation, u: int, v: int) -> bool:
    """Open interiors overlap: proper boundary crossing, a strictly interior
    corner, or base intervals overlapping on positive length."""
    tu, tv = _corners(t, u), _corners(t, v)
    for a, b in _sides(tu):
        for c, d in _sides(tv):
            if _segments_cross_properly(a, b, c, d):
                return True
    for p in tu:
        if _point_in_triangle(p, tv, strict=True):
            return True
    for p in tv:
        if _point_in_triangle(p, tu, strict=True):
            return True
    (ul, ur), (vl, vr) = t.base[u], t.base[v]
    return min(ur, vr) > max(ul, vl)


def random_triangle_pair(
    rng: random.Random, span: int = 40
) -> TriangleRepresentation:
    """Two random triangles with distinct apexes and endpoints in 1..span."""
    a1 = rng.randint(1, span)
    a2 = rng.randint(1, span - 1)
    if a2 >= a1:
        a2 += 1
    bases = []
    for _ in range(2):
        lo = rng.randint(1, span - 1)
        hi = rng.randint(lo + 1, span)
        bases.append((lo, hi))
    return TriangleRepresentation((a1, a2), tuple(bases))
