"""Inequality checkers and the heavy-component selector."""

import random
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from monocomp.graphs import (
    ColoredCompleteGraph,
    MultipartiteHost,
    Subgraph,
    components_of,
    iter_pairs,
)
from monocomp.inequalities import (
    InequalityReport,
    WeightVectors,
    check_multipartite_cs,
    check_weight_cs,
    guaranteed_component,
    heavy_component,
    number_str,
)

K4 = MultipartiteHost.complete(4)
K5 = MultipartiteHost.complete(5)
K22 = MultipartiteHost((2, 2))


class TestWeightCS:
    def test_worked_example(self):
        rep = check_weight_cs(WeightVectors((1, 2), (3, 1)))
        assert (rep.lhs, rep.rhs, rep.holds, rep.slack) == (49, 24, True, 25)

    def test_single_term_equality(self):
        rep = check_weight_cs(WeightVectors((5,), (7,)))
        assert (rep.lhs, rep.rhs, rep.slack) == (0, 0, 0)

    def test_equal_vectors_equality(self):
        rep = check_weight_cs(WeightVectors((2, 3), (2, 3)))
        assert rep.lhs == rep.rhs == 144
        assert rep.slack == 0

    def test_rejects_negative_and_mismatch(self):
        with pytest.raises(ValueError):
            WeightVectors((1, -2), (3, 1))
        with pytest.raises(ValueError):
            WeightVectors((1, 2), (3,))
        with pytest.raises(ValueError):
            WeightVectors((), ())

    @given(
        st.integers(1, 10).flatmap(
            lambda r: st.tuples(
                st.lists(st.integers(0, 100), min_size=r, max_size=r),
                st.lists(st.integers(0, 100), min_size=r, max_size=r),
            )
        )
    )
    def test_always_holds(self, ab):
        a, b = ab
        assert check_weight_cs(WeightVectors(tuple(a), tuple(b))).holds

    @given(st.lists(st.integers(0, 50), min_size=1, max_size=8))
    def test_equal_vectors_always_tight(self, a):
        rep = check_weight_cs(WeightVectors(tuple(a), tuple(a)))
        assert rep.slack == 0

    def test_json_shape(self):
        rep = InequalityReport.compare(10, 4)
        assert rep.as_json_dict() == {
            "lhs": "10",
            "rhs": "4",
            "holds": True,
            "slack": "6",
        }

    def test_number_str_rational(self):
        from fractions import Fraction

        assert number_str(Fraction(19800, 13)) == "19800/13"
        assert number_str(Fraction(4, 2)) == "2"
        assert number_str(-7) == "-7"


class TestMultipartiteCS:
    def test_k22_equality(self):
        rep = check_multipartite_cs(K22, {1, 3}, {2, 4})
        assert (rep.lhs, rep.rhs) == (4, 4)

    def test_set_inside_one_part(self):
        rep = check_multipartite_cs(K22, {1, 2}, {1, 2})
        assert rep.rhs == 0
        assert rep.holds

    def test_k3_overlapping_sets(self):
        k3 = MultipartiteHost.complete(3)
        rep = check_multipartite_cs(k3, {1, 2}, {1, 3})
        assert (rep.lhs, rep.rhs) == (9, 4)

    def test_random_never_violated(self):
        rng = random.Random(7)
        for _ in range(500):
            host = MultipartiteHost(
                tuple(rng.randint(1, 12) for _ in range(rng.randint(2, 6)))
            )
            vs = range(1, host.n + 1)
            s = {v for v in vs if rng.random() < 0.5}
            t = {v for v in vs if rng.random() < 0.5}
            assert check_multipartite_cs(host, s, t).holds


class TestHeavyComponent:
    def test_triangle_beats_edge(self):
        h = Subgraph(K5, frozenset({(1, 2), (1, 3), (2, 3), (4, 5)}))
        comp = heavy_component(K5, h)
        assert comp.vertices == frozenset({1, 2, 3})
        assert comp.edge_count * K5.edge_count >= h.edge_count**2

    def test_whole_graph_equality(self):
        edges = frozenset((u, v) for (u, v) in iter_pairs(4) if K22.adjacent(u, v))
        h = Subgraph(K22, edges)
        comp = heavy_component(K22, h)
        assert comp.edge_count == K22.edge_count
        assert comp.edge_count * K22.edge_count == h.edge_count**2

    def test_tie_breaks_to_smallest_vertex(self):
        h = Subgraph(K4, frozenset({(1, 2), (3, 4)}))
        comp = heavy_component(K4, h)
        assert comp.vertices == frozenset({1, 2})

    def test_rejects_single_part_host(self):
        host = MultipartiteHost((4,))
        with pytest.raises(ValueError):
            heavy_component(host, Subgraph(host, frozenset()))

    def test_random_instances(self):
        rng = random.Random(11)
        for _ in range(300):
            host = MultipartiteHost(
                tuple(rng.randint(1, 10) for _ in range(rng.randint(2, 5)))
            )
            p = rng.random()
            edges = frozenset(
                (u, v)
                for (u, v) in iter_pairs(host.n)
                if host.adjacent(u, v) and rng.random() < p
            )
            h = Subgraph(host, edges)
            comp = heavy_component(host, h)
            assert comp.edge_count * host.edge_count >= h.edge_count**2

    def test_adding_edge_grows_containing_component(self):
        rng = random.Random(3)
        for _ in range(100):
            host = MultipartiteHost(
                tuple(rng.randint(1, 8) for _ in range(rng.randint(2, 4)))
            )
            cross = [
                (u, v) for (u, v) in iter_pairs(host.n) if host.adjacent(u, v)
            ]
            edges = frozenset(e for e in cross if rng.random() < 0.3)
            missing = [e for e in cross if e not in edges]
            if not missing:
                continue
            extra = rng.choice(missing)
            before = components_of(Subgraph(host, edges))
            after = components_of(Subgraph(host, edges | {extra}))
            touched_before = max(
                (c.edge_count for c in before if c.vertices & set(extra)), default=0
            )
            grown = next(c for c in after if extra[0] in c.vertices)
            assert grown.edge_count > touched_before


class TestGuaranteedComponent:
    def test_rainbow_k3(self):
        col = ColoredCompleteGraph.from_pairs(3, 3, {(1, 2): 1, (1, 3): 2, (2, 3): 3})
        color, comp = guaranteed_component(col)
        assert comp.edge_count == 1
        assert comp.edge_count * 9 >= comb(3, 2)

    def test_k6_triangles_vs_cross(self):
        assignment = {}
        for u, v in iter_pairs(6):
            same_side = (u <= 3) == (v <= 3)
            assignment[(u, v)] = 1 if same_side else 2
        col = ColoredCompleteGraph.from_pairs(6, 2, assignment)
        color, comp = guaranteed_component(col)
        assert color == 2
        assert comp.edge_count == 9
        assert comp.edge_count * 4 >= comb(6, 2)

    def test_monochromatic_equality(self):
        col = ColoredCompleteGraph(5, 1, tuple([1] * 10))
        color, comp = guaranteed_component(col)
        assert (color, comp.edge_count) == (1, 10)

    def test_rejects_partial(self):
        col = ColoredCompleteGraph.from_pairs(3, 2, {(1, 2): 1})
        with pytest.raises(ValueError):
            guaranteed_component(col)

    def test_random_colorings(self):
        rng = random.Random(23)
        for _ in range(200):
            n = rng.randint(2, 15)
            k = rng.randint(1, 4)
            colors = tuple(rng.randint(1, k) for _ in range(comb(n, 2)))
            col = ColoredCompleteGraph(n, k, colors)
            _, comp = guaranteed_component(col)
            assert comp.edge_count * k * k >= comb(n, 2)
