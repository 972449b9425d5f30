"""Hypothesis strategies shared by the property tests."""
import hypothesis.strategies as st

from simpletri.graphs import Graph
from simpletri.orders import PartialOrder, make_partial_order


@st.composite
def graphs(draw, max_n=6):
    n = draw(st.integers(min_value=0, max_value=max_n))
    m = n * (n - 1) // 2
    mask = draw(st.integers(min_value=0, max_value=(1 << m) - 1))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = frozenset(pairs[i] for i in range(m) if mask >> i & 1)
    return Graph(n, edges)


@st.composite
def partial_orders(draw, max_n=7, min_n=0):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    arrangement = draw(st.permutations(range(n)))
    m = n * (n - 1) // 2
    mask = draw(st.integers(min_value=0, max_value=(1 << m) - 1))
    slots = [(i, j) for i in range(n) for j in range(i + 1, n)]
    relations = [
        (arrangement[i], arrangement[j])
        for idx, (i, j) in enumerate(slots)
        if mask >> idx & 1
    ]
    return make_partial_order(n, relations)


@st.composite
def orders_with_extension(draw, max_n=7, min_n=0):
    """A partial order plus one of its linear extensions."""
    p = draw(partial_orders(max_n=max_n, min_n=min_n))
    priority = draw(st.permutations(range(p.n))) if p.n else ()
    out = []
    used = 0
    for _ in range(p.n):
        best = None
        for v in range(p.n):
            if used >> v & 1 or p.pred[v] & ~used:
                continue
            if best is None or priority[v] < priority[best]:
                best = v
        out.append(best)
        used |= 1 << best
    return p, tuple(out)


@st.composite
def orderings(draw, n):
    return tuple(draw(st.permutations(range(n))))
