"""Exhaustive and randomized corpora of small graphs and orders.

Everything here is test plumbing at desk scale: deterministic generation
order, no attempt at isomorphism rejection unless stated.
"""
from __future__ import annotations

import random
from itertools import combinations, permutations
from typing import Iterator

from .graphs import Graph
from .orders import PartialOrder, make_partial_order

__all__ = [
    "all_graphs",
    "naturally_ordered_relations",
    "all_partial_orders",
    "relabel_order",
    "random_partial_order",
    "random_linear_extension",
]


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on n vertices, in edge-mask order."""
    pair_list = list(combinations(range(n), 2))
    for mask in range(1 << len(pair_list)):
        edges = frozenset(
            pair_list[i] for i in range(len(pair_list)) if mask >> i & 1
        )
        yield Graph(n, edges)


def naturally_ordered_relations(n: int) -> Iterator[PartialOrder]:
    """Every partial order on 0..n-1 having the identity as linear extension.

    Enumerates subsets of the upper-triangular pairs and keeps the
    transitively closed ones.
    """
    pair_list = list(combinations(range(n), 2))
    m = len(pair_list)
    for mask in range(1 << m):
        succ = [0] * n
        for i in range(m):
            if mask >> i & 1:
                u, v = pair_list[i]
                succ[u] |= 1 << v
        ok = True
        for u in range(n):
            rest = succ[u]
            while rest and ok:
                low = rest & -rest
                v = low.bit_length() - 1
                rest ^= low
                if succ[v] & ~succ[u]:
                    ok = False
            if not ok:
                break
        if ok:
            pairs = frozenset(
                (u, v) for u in range(n) for v in range(n) if succ[u] >> v & 1
            )
            yield PartialOrder(n, pairs)


def relabel_order(p: PartialOrder, perm: tuple[int, ...]) -> PartialOrder:
    """Image of p under the element relabeling v -> perm[v]."""
    return PartialOrder(p.n, frozenset((perm[u], perm[v]) for u, v in p.pairs))


def all_partial_orders(n: int) -> list[PartialOrder]:
    """Every labeled partial order on n elements.

    Relabels the naturally ordered ones in every possible way and drops
    duplicates; each labeled order arises from at least one of its linear
    extensions this way.
    """
    seen: dict[frozenset[tuple[int, int]], PartialOrder] = {}
    for base in naturally_ordered_relations(n):
        for perm in permutations(range(n)):
            q = relabel_order(base, perm)
            seen.setdefault(q.pairs, q)
    return list(seen.values())


def random_partial_order(rng: random.Random, n: int) -> PartialOrder:
    """Random order: random pairs over a random linear arrangement, closed."""
    arrangement = list(range(n))
    rng.shuffle(arrangement)
    density = rng.uniform(0.1, 0.9)
    relations = [
        (arrangement[i], arrangement[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < density
    ]
    return make_partial_order(n, relations)


def random_linear_extension(rng: random.Random, p: PartialOrder) -> tuple[int, ...]:
    """Uniformly greedy extension: pick a random minimal element each step."""
    out = []
    used = 0
    for _ in range(p.n):
        available = [
            v
            for v in range(p.n)
            if not used >> v & 1 and p.pred[v] & ~used == 0
        ]
        v = rng.choice(available)
        out.append(v)
        used |= 1 << v
    return tuple(out)
