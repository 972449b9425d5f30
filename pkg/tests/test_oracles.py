import random
from itertools import permutations

import pytest
from hypothesis import given, settings

from simpletri.errors import LimitExceeded, NotSimpleTriangle
from simpletri.exhaustive import all_graphs, all_partial_orders
from simpletri.graphs import (
    Graph,
    complement,
    complete_graph,
    cycle_graph,
    empty_graph,
    union_is_acyclic,
)
from simpletri.oracles import (
    all_transitive_complements_extend,
    enumerate_orientations,
    exact_triangle_intersection,
    geometric_search_order_realization,
    geometric_search_realization,
    grid_search_realization,
    has_alternating_transitive_pair,
    random_triangle_pair,
    triangle_interiors_intersect,
)
from simpletri.orders import make_partial_order, recognize_linear_interval_order
from simpletri.recognition import recognize
from simpletri.triangles import TriangleRepresentation, triangles_disjoint, verify_representation

from strategies import partial_orders

C4 = cycle_graph(4)
C5 = cycle_graph(5)


class TestGeometricSearch:
    def test_single_vertex(self):
        t = geometric_search_realization(Graph(1, frozenset()))
        assert t == TriangleRepresentation((1,), ((1, 2),))

    def test_c4_found(self):
        t = geometric_search_realization(C4)
        assert t is not None and verify_representation(C4, t)

    def test_c5_none(self):
        assert geometric_search_realization(C5) is None

    def test_limit(self):
        with pytest.raises(LimitExceeded):
            geometric_search_realization(empty_graph(7))

    def test_agrees_with_grid_enumeration(self):
        # the assumption-free grid search validates the constraint solver
        for n in range(5):
            for g in all_graphs(n):
                fast = geometric_search_realization(g)
                slow = grid_search_realization(g)
                assert (fast is None) == (slow is None)
                if slow is not None:
                    assert verify_representation(g, slow)

    def test_agrees_with_recognizer_on_sampled_six_vertex_graphs(self):
        rng = random.Random(6)
        pairs = [(i, j) for i in range(6) for j in range(i + 1, 6)]
        prism_edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (2, 5), (3, 4), (3, 5), (4, 5)]
        samples = [Graph.from_edges(6, prism_edges), cycle_graph(6), complete_graph(6)]
        for _ in range(120):
            samples.append(
                Graph.from_edges(6, [e for e in pairs if rng.random() < rng.choice((0.3, 0.5, 0.7))])
            )
        for g in samples:
            assert (recognize(g) is None) == (geometric_search_realization(g) is None)


class TestOrderRealization:
    def test_chain(self):
        p = make_partial_order(3, [(0, 1), (1, 2)])
        t = geometric_search_order_realization(p)
        assert t is not None and t.induced_order() == p

    def test_two_plus_two(self):
        p = make_partial_order(4, [(0, 2), (1, 3)])
        t = geometric_search_order_realization(p)
        assert t is not None and t.induced_order() == p

    def test_crown_rejected(self):
        crown = make_partial_order(
            6, [(0, 4), (0, 5), (1, 3), (1, 5), (2, 3), (2, 4)]
        )
        assert geometric_search_order_realization(crown) is None

    @given(partial_orders(max_n=5))
    @settings(max_examples=120)
    def test_agrees_with_extension_search(self, p):
        direct = recognize_linear_interval_order(p)
        oracle = geometric_search_order_realization(p)
        assert (direct is None) == (oracle is None)


class TestEnumerateOrientations:
    def test_k3_transitive_count(self):
        assert len(list(enumerate_orientations(complete_graph(3), "transitive"))) == 6

    def test_c4_alternating_count(self):
        assert len(list(enumerate_orientations(C4, "alternating"))) == 2

    def test_c4_transitive_count(self):
        assert len(list(enumerate_orientations(C4, "transitive"))) == 2

    def test_bad_mode(self):
        with pytest.raises(ValueError):
            list(enumerate_orientations(C4, "sideways"))

    def test_limit(self):
        with pytest.raises(LimitExceeded):
            list(enumerate_orientations(complete_graph(6), "transitive", limit=10))


def brute_pair_exists(g):
    gc = complement(g)
    for o_g in enumerate_orientations(g, "alternating"):
        for o_gc in enumerate_orientations(gc, "transitive"):
            if union_is_acyclic(g, o_g, o_gc):
                return True
    return False


def brute_all_extend(g):
    gc = complement(g)
    for o_gc in enumerate_orientations(gc, "transitive"):
        if not any(
            union_is_acyclic(g, o_g, o_gc)
            for o_g in enumerate_orientations(g, "alternating")
        ):
            return False
    return True


class TestOrientationPairChecks:
    def test_examples(self):
        assert has_alternating_transitive_pair(C4)
        assert not has_alternating_transitive_pair(C5)
        assert has_alternating_transitive_pair(Graph(1, frozenset()))
        assert all_transitive_complements_extend(C4)
        assert all_transitive_complements_extend(
            Graph.from_edges(4, [(0, 2), (1, 3)])
        )
        assert all_transitive_complements_extend(empty_graph(3))

    def test_requires_accepted_graph(self):
        with pytest.raises(NotSimpleTriangle):
            all_transitive_complements_extend(C5)

    def test_matches_double_enumeration_small(self):
        # the ordering scan must agree with literally pairing orientations
        for n in range(5):
            for g in all_graphs(n):
                assert has_alternating_transitive_pair(g) == brute_pair_exists(g)
                if recognize(g) is not None:
                    assert all_transitive_complements_extend(g) == brute_all_extend(g)


class TestExactGeometry:
    def test_disjoint(self):
        t = TriangleRepresentation((1, 2), ((1, 2), (3, 4)))
        assert not exact_triangle_intersection(t, 0, 1)

    def test_crossing(self):
        t = TriangleRepresentation((2, 1), ((1, 2), (3, 4)))
        assert exact_triangle_intersection(t, 0, 1)

    def test_degenerate_touch(self):
        t = TriangleRepresentation((1, 2), ((1, 2), (2, 3)))
        assert exact_triangle_intersection(t, 0, 1)
        assert not triangle_interiors_intersect(t, 0, 1)

    def test_nested(self):
        t = TriangleRepresentation((5, 4), ((1, 9), (3, 6)))
        assert exact_triangle_intersection(t, 0, 1)
        assert triangle_interiors_intersect(t, 0, 1)

    def test_shared_base_overlap(self):
        t = TriangleRepresentation((1, 9), ((1, 4), (2, 6)))
        assert exact_triangle_intersection(t, 0, 1)
        assert triangle_interiors_intersect(t, 0, 1)

    def test_agrees_with_combinatorial_predicate(self):
        rng = random.Random(20260808)
        for _ in range(2000):
            t = random_triangle_pair(rng)
            assert (not triangles_disjoint(t, 0, 1)) == exact_triangle_intersection(
                t, 0, 1
            )

    def test_exhaustive_tiny_grid(self):
        # every triangle pair with endpoints in 1..4 and distinct apexes
        span = 4
        bases = [
            (lo, hi) for lo in range(1, span) for hi in range(lo + 1, span + 1)
        ]
        for a1 in range(1, span + 1):
            for a2 in range(1, span + 1):
                if a1 == a2:
                    continue
                for b1 in bases:
                    for b2 in bases:
                        t = TriangleRepresentation((a1, a2), (b1, b2))
                        assert (
                            not triangles_disjoint(t, 0, 1)
                        ) == exact_triangle_intersection(t, 0, 1)
