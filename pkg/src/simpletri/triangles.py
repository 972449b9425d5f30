"""Triangle representations: an apex on a top line, a base interval below.

A triangle lies completely to the left of another exactly when both its apex
and its base do, so disjointness is a pure coordinate comparison; everything
geometric about the class is captured by these integer tuples.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import SizeMismatch
from .orders import IntervalRepresentation, PartialOrder, _check_permutation

__all__ = [
    "TriangleRepresentation",
    "triangles_disjoint",
    "verify_representation",
    "order_to_triangles",
]


@dataclass(frozen=True)
class TriangleRepresentation:
    """Per-vertex apex coordinate (top line) and base interval (bottom line)."""

    apex: tuple[int, ...]
    base: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if len(self.apex) != len(self.base):
            raise ValueError("apex and base counts differ")
        if len(set(self.apex)) != len(self.apex):
            raise ValueError("apex coordinates must be pairwise distinct")
        for v, (lo, hi) in enumerate(self.base):
            if lo >= hi:
                raise ValueError(f"base of {v} is degenerate: [{lo}, {hi}]")

    @property
    def n(self) -> int:
        return len(self.apex)

    def induced_order(self) -> PartialOrder:
        """Order with u below v iff u's triangle lies completely left of v's."""
        n = self.n
        pairs = frozenset(
            (u, v)
            for u in range(n)
            for v in range(n)
            if u != v and self.apex[u] < self.apex[v] and self.base[u][1] < self.base[v][0]
        )
        return PartialOrder(n, pairs)


def triangles_disjoint(t: TriangleRepresentation, u: int, v: int) -> bool:
    """True iff one triangle lies completely to the left of the other."""
    au, av = t.apex[u], t.apex[v]
    if au < av:
        return t.base[u][1] < t.base[v][0]
    return t.base[v][1] < t.base[u][0]


def verify_representation(g, t: TriangleRepresentation) -> bool:
    """Adjacency in g must coincide with triangle intersection everywhere."""
    if g.n != t.n:
        raise SizeMismatch(f"graph has {g.n} vertices, representation {t.n}")
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.adjacent(u, v) == triangles_disjoint(t, u, v):
                return False
    return True


def order_to_triangles(
    order: Sequence[int], rep: IntervalRepresentation
) -> TriangleRepresentation:
    """Place apices at 1-based extension positions over the given bases."""
    if len(order) != rep.n:
        raise SizeMismatch(f"ordering has {len(order)} elements, intervals {rep.n}")
    _check_permutation(order, rep.n)
    apex = [0] * rep.n
    for i, v in enumerate(order):
        apex[v] = i + 1
    return TriangleRepresentation(tuple(apex), rep.intervals)
