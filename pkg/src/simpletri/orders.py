"""Finite strict partial orders, linear extensions, and interval representations.

The central construction takes a partial order P together with a linear
extension L and peels elements off in rounds, assigning integer interval
endpoints as it goes.  When it succeeds, the produced intervals induce an
interval order P_I with ``linear_order(L) ∩ P_I == P``.  When the peeling
stalls, the ground set still contains an alternating anticycle, which is
extracted and returned as a certificate that no such interval order exists
for this extension.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence, Union

from ._bits import iter_bits, lowest_bit
from .errors import CycleError, NotAnExtension, SizeMismatch

__all__ = [
    "PartialOrder",
    "IntervalRepresentation",
    "Anticycle",
    "make_partial_order",
    "linear_order",
    "is_linear_extension",
    "enumerate_linear_extensions",
    "find_alternating_anticycle",
    "is_valid_anticycle",
    "build_interval_representation",
    "intersect_orders",
    "is_interval_order",
    "recognize_linear_interval_order",
]


@dataclass(frozen=True)
class PartialOrder:
    """Strict partial order on elements ``0..n-1``.

    ``pairs`` holds every related pair ``(u, v)`` with u preceding v and must
    already be transitively closed; use :func:`make_partial_order` to build
    one from arbitrary generating relations.
    """

    n: int
    pairs: frozenset[tuple[int, int]]
    succ: tuple[int, ...] = field(init=False, repr=False, compare=False)
    pred: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.n
        succ = [0] * n
        pred = [0] * n
        for u, v in self.pairs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"pair ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"irreflexivity violated at element {u}")
            succ[u] |= 1 << v
            pred[v] |= 1 << u
        for u in range(n):
            for v in iter_bits(succ[u]):
                if succ[v] & ~succ[u]:
                    raise ValueError(
                        f"relation is not transitively closed at ({u}, {v})"
                    )
        object.__setattr__(self, "succ", tuple(succ))
        object.__setattr__(self, "pred", tuple(pred))

    def less(self, u: int, v: int) -> bool:
        """True iff u strictly precedes v."""
        return self.succ[u] >> v & 1 == 1

    def comparable(self, u: int, v: int) -> bool:
        return self.less(u, v) or self.less(v, u)

    def __len__(self) -> int:
        return self.n


@dataclass(frozen=True)
class IntervalRepresentation:
    """Closed integer interval ``[l(v), r(v)]`` per element, with l(v) < r(v)."""

    intervals: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for v, (lo, hi) in enumerate(self.intervals):
            if lo >= hi:
                raise ValueError(f"interval of {v} is degenerate: [{lo}, {hi}]")

    @property
    def n(self) -> int:
        return len(self.intervals)

    def induced_order(self) -> PartialOrder:
        """Interval order with u before v iff u's interval ends before v's starts."""
        iv = self.intervals
        pairs = frozenset(
            (u, v)
            for u in range(len(iv))
            for v in range(len(iv))
            if u != v and iv[u][1] < iv[v][0]
        )
        return PartialOrder(len(iv), pairs)


@dataclass(frozen=True)
class Anticycle:
    """Alternating anticycle certificate against a pair (P, L).

    Holds 2k distinct elements with ``a[i]`` below ``b[i]`` in P, while
    ``a[i+1]`` precedes ``b[i]`` only in L (indices mod k).  k == 2 is
    exactly a violation of the 2+2 rule.
    """

    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        if len(self.a) != len(self.b) or len(self.a) < 2:
            raise ValueError("anticycle needs k >= 2 paired element lists")
        if len(set(self.a) | set(self.b)) != 2 * len(self.a):
            raise ValueError("anticycle elements must be distinct")

    @property
    def k(self) -> int:
        return len(self.a)

    def elements(self) -> tuple[int, ...]:
        out = []
        for x, y in zip(self.a, self.b):
            out.append(x)
            out.append(y)
        return tuple(out)


def make_partial_order(n: int, relations: Iterable[tuple[int, int]]) -> PartialOrder:
    """Transitive closure of ``relations`` as a :class:`PartialOrder`.

    >>> sorted(make_partial_order(3, [(0, 1), (1, 2)]).pairs)
    [(0, 1), (0, 2), (1, 2)]

    Raises :class:`CycleError` when the closure would relate an element to
    itself, i.e. the input is not acyclic.
    """
    succ = [0] * n
    for u, v in relations:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"pair ({u}, {v}) out of range for n={n}")
        if u == v:
            raise CycleError(f"element {u} would precede itself")
        succ[u] |= 1 << v
    for k in range(n):
        bit = 1 << k
        for u in range(n):
            if succ[u] & bit:
                succ[u] |= succ[k]
    for v in range(n):
        if succ[v] >> v & 1:
            raise CycleError(f"closure relates element {v} to itself")
    pairs = frozenset((u, v) for u in range(n) for v in iter_bits(succ[u]))
    return PartialOrder(n, pairs)


def linear_order(order: Sequence[int]) -> PartialOrder:
    """The permutation ``order`` viewed as a linear order on its elements."""
    seq = tuple(order)
    _check_permutation(seq, len(seq))
    pairs = frozenset(
        (seq[i], seq[j]) for i in range(len(seq)) for j in range(i + 1, len(seq))
    )
    return PartialOrder(len(seq), pairs)


def _check_permutation(order: Sequence[int], n: int) -> None:
    if sorted(order) != list(range(n)):
        raise ValueError(f"{order!r} is not a permutation of 0..{n - 1}")


def _positions(order: Sequence[int]) -> list[int]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    return pos


def is_linear_extension(p: PartialOrder, order: Sequence[int]) -> bool:
    """True iff every relation of ``p`` is respected by ``order``."""
    if len(order) != p.n:
        raise SizeMismatch(f"ordering has {len(order)} elements, order has {p.n}")
    _check_permutation(order, p.n)
    pos = _positions(order)
    return all(pos[u] < pos[v] for u, v in p.pairs)


def enumerate_linear_extensions(p: PartialOrder) -> Iterator[tuple[int, ...]]:
    """Yield every linear extension exactly once, lexicographically smallest first."""
    n, pred = p.n, p.pred
    out: list[int] = []

    def extend(used: int) -> Iterator[tuple[int, ...]]:
        if len(out) == n:
            yield tuple(out)
            return
        for v in range(n):
            if used >> v & 1:
                continue
            if pred[v] & ~used:
                continue
            out.append(v)
            yield from extend(used | (1 << v))
            out.pop()

    return extend(0)


def _dashed_masks(p: PartialOrder, order: Sequence[int]) -> list[int]:
    """dashed[u] = elements after u in the extension that u does not precede in P."""
    n = p.n
    after = [0] * n
    seen = 0
    for v in reversed(order):
        after[v] = seen
        seen |= 1 << v
    return [after[u] & ~p.succ[u] for u in range(n)]


def _transpose_masks(masks: list[int], n: int) -> list[int]:
    out = [0] * n
    for u in range(n):
        for v in iter_bits(masks[u]):
            out[v] |= 1 << u
    return out


def _four_anticycle(p: PartialOrder, dashed: list[int]) -> Optional[Anticycle]:
    """Least (a0, b0, a1, b1) with solid a0->b0, a1->b1 and dashed a1->b0, a0->b1."""
    n, succ = p.n, p.succ
    dashed_pred = _transpose_masks(dashed, n)
    for a0 in range(n):
        d0 = dashed[a0]
        if not succ[a0] or not d0:
            continue
        for b0 in iter_bits(succ[a0]):
            used = (1 << a0) | (1 << b0)
            for a1 in iter_bits(dashed_pred[b0] & ~used):
                cand_b1 = succ[a1] & d0 & ~(used | (1 << a1))
                if cand_b1:
                    b1 = lowest_bit(cand_b1)
                    return Anticycle((a0, a1), (b0, b1))
    return None


def _k_anticycle(p: PartialOrder, dashed: list[int], k: int) -> Optional[Anticycle]:
    """First anticycle with exactly k solid pairs, scanning lexicographically."""
    n, succ = p.n, p.succ
    dashed_pred = _transpose_masks(dashed, n)
    a = [0] * k
    b = [0] * k

    def choose_a(i: int, used: int) -> Optional[Anticycle]:
        cand = (1 << n) - 1 if i == 0 else dashed_pred[b[i - 1]]
        for ai in iter_bits(cand & ~used):
            a[i] = ai
            found = choose_b(i, used | (1 << ai))
            if found:
                return found
        return None

    def choose_b(i: int, used: int) -> Optional[Anticycle]:
        cand = succ[a[i]]
        if i == k - 1:
            cand &= dashed[a[0]]
        for bi in iter_bits(cand & ~used):
            b[i] = bi
            if i == k - 1:
                return Anticycle(tuple(a), tuple(b))
            found = choose_a(i + 1, used | (1 << bi))
            if found:
                return found
        return None

    return choose_a(0, 0)


def find_alternating_anticycle(
    p: PartialOrder, order: Sequence[int], k_max: Optional[int] = None
) -> Optional[Anticycle]:
    """Smallest-k alternating anticycle of the extension ``order``, if any.

    Searches k = 2, 3, ... up to ``k_max`` (default n // 2).  A None result
    with k_max >= 2 in particular means the extension fulfills the 2+2 rule.
    Raises :class:`NotAnExtension` when ``order`` does not extend ``p``.
    """
    if not is_linear_extension(p, order):
        raise NotAnExtension(f"{tuple(order)!r} does not extend the order")
    if k_max is None:
        k_max = p.n // 2
    dashed = _dashed_masks(p, order)
    if k_max >= 2:
        found = _four_anticycle(p, dashed)
        if found:
            return found
    for k in range(3, k_max + 1):
        found = _k_anticycle(p, dashed, k)
        if found:
            return found
    return None


def is_valid_anticycle(p: PartialOrder, order: Sequence[int], ac: Anticycle) -> bool:
    """Check an anticycle certificate against the pair (p, order)."""
    pos = _positions(order)
    k = ac.k
    for i in range(k):
        nxt = (i + 1) % k
        if not p.less(ac.a[i], ac.b[i]):
            return False
        if not pos[ac.a[nxt]] < pos[ac.b[i]]:
            return False
        if p.less(ac.a[nxt], ac.b[i]):
            return False
    return True


def build_interval_representation(
    p: PartialOrder, order: Sequence[int]
) -> Union[IntervalRepresentation, Anticycle]:
    """Peel minimal elements off (p, order), assigning interval endpoints.

    Rounds are counted by a tick ``i`` that advances once before left
    endpoints are assigned and once before right endpoints are assigned, so
    every endpoint lands in ``1..2n``.  An element receives its left endpoint
    when it becomes minimal among the remaining elements, and is retired with
    a right endpoint once no remaining non-minimal element follows it in the
    extension without being above it in the order.

    Returns the interval representation on success.  If a round retires
    nothing, the remaining elements contain an alternating anticycle, which
    is extracted and returned instead.
    """
    if not is_linear_extension(p, order):
        raise NotAnExtension(f"{tuple(order)!r} does not extend the order")
    n = p.n
    if n == 0:
        return IntervalRepresentation(())
    dashed = _dashed_masks(p, order)
    left = [0] * n
    right = [0] * n
    remaining = (1 << n) - 1
    in_s = 0
    tick = 0
    while remaining:
        tick += 1
        for v in iter_bits(remaining & ~in_s):
            if p.pred[v] & remaining == 0:
                in_s |= 1 << v
                left[v] = tick
        tick += 1
        outside = remaining & ~in_s
        retired = 0
        for v in iter_bits(in_s):
            if dashed[v] & outside == 0:
                retired |= 1 << v
                right[v] = tick
        if not retired:
            return _stall_anticycle(p, dashed, remaining, in_s)
        remaining &= ~retired
        in_s &= ~retired
    return IntervalRepresentation(tuple(zip(left, right)))


def _stall_anticycle(
    p: PartialOrder, dashed: list[int], remaining: int, in_s: int
) -> Anticycle:
    """Extract an anticycle from a stalled peeling state.

    At a stall every minimal element still present has a dashed arrow into
    the non-minimal remainder, and every non-minimal element has a minimal
    predecessor, so a walk alternating between the two sides must close into
    a cycle; the closed stretch reads off as an anticycle.
    """
    outside = remaining & ~in_s
    a_list = [lowest_bit(in_s)]
    a_index = {a_list[0]: 0}
    c_list: list[int] = []
    c_index: dict[int, int] = {}
    while True:
        c = lowest_bit(dashed[a_list[-1]] & outside)
        if c in c_index:
            s, t = c_index[c], len(c_list)
            a_t = a_list[t]
            break
        c_index[c] = len(c_list)
        c_list.append(c)
        a = lowest_bit(p.pred[c] & in_s)
        if a in a_index:
            s, t = a_index[a], len(a_list)
            a_t = a
            break
        a_index[a] = len(a_list)
        a_list.append(a)
    k = t - s
    anti_a = tuple(a_t if i == 0 else a_list[t - i] for i in range(k))
    anti_b = tuple(c_list[t - 1 - i] for i in range(k))
    return Anticycle(anti_a, anti_b)


def intersect_orders(p1: PartialOrder, p2: PartialOrder) -> PartialOrder:
    """Order with exactly the relations common to ``p1`` and ``p2``."""
    if p1.n != p2.n:
        raise SizeMismatch(f"ground sets differ: {p1.n} vs {p2.n}")
    return PartialOrder(p1.n, p1.pairs & p2.pairs)


def is_interval_order(p: PartialOrder) -> bool:
    """True iff ``p`` has no two comparable pairs that are mutually unordered.

    Two relations a < b and c < d with neither a < d nor c < b force an
    induced 2+2 on {a, b, c, d}, the one obstruction to interval orders.
    """
    rel = sorted(p.pairs)
    for a, b in rel:
        for c, d in rel:
            if not p.less(a, d) and not p.less(c, b):
                return False
    return True


def recognize_linear_interval_order(
    p: PartialOrder,
) -> Optional[tuple[tuple[int, ...], IntervalRepresentation]]:
    """First extension (lexicographic) admitting an interval representation.

    Returns ``(extension, representation)`` or None when every linear
    extension of ``p`` contains a 4-anticycle.
    """
    for ext in enumerate_linear_extensions(p):
        dashed = _dashed_masks(p, ext)
        if _four_anticycle(p, dashed) is None:
            rep = build_interval_representation(p, ext)
            assert isinstance(rep, IntervalRepresentation)
            return ext, rep
    return None
