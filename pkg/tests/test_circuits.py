"""Parity fixing and Eulerian circuit extraction."""

import random
from math import comb

import pytest

from monocomp.circuits import (
    Circuit,
    best_mono_circuit,
    eulerian_circuit,
    parity_fix,
)
from monocomp.constructions import k3_initial_nice, k3_optimize
from monocomp.graphs import (
    ColoredCompleteGraph,
    MultipartiteHost,
    Subgraph,
    color_class,
    components_of,
    iter_pairs,
)
from monocomp.search import random_coloring

K4 = MultipartiteHost.complete(4)
K5 = MultipartiteHost.complete(5)


def full_subgraph(host):
    return Subgraph(
        host, frozenset((u, v) for (u, v) in iter_pairs(host.n) if host.adjacent(u, v))
    )


class TestParityFix:
    def test_k4_star_removal(self):
        fix = parity_fix(full_subgraph(K4))
        assert fix.removed == frozenset({(1, 2), (1, 3), (1, 4)})
        assert fix.trimmed.edges == frozenset({(2, 3), (2, 4), (3, 4)})

    def test_even_cycle_untouched(self):
        g = Subgraph(
            MultipartiteHost.complete(6),
            frozenset({(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)}),
        )
        fix = parity_fix(g)
        assert fix.removed == frozenset()
        assert fix.trimmed.edges == g.edges

    def test_single_edge_removed(self):
        g = Subgraph(MultipartiteHost.complete(3), frozenset({(1, 2)}))
        fix = parity_fix(g)
        assert fix.removed == frozenset({(1, 2)})
        assert fix.trimmed.edge_count == 0

    def test_random_subgraphs(self):
        rng = random.Random(17)
        for _ in range(200):
            n = rng.randint(2, 20)
            host = MultipartiteHost.complete(n)
            edges = frozenset(
                (u, v) for (u, v) in iter_pairs(n) if rng.random() < 0.4
            )
            g = Subgraph(host, edges)
            fix = parity_fix(g)
            # disjoint union back to the input
            assert fix.removed | fix.trimmed.edges == edges
            assert not (fix.removed & fix.trimmed.edges)
            assert all(d % 2 == 0 for d in fix.trimmed.degrees().values())
            assert len(fix.removed) <= n - 1
            # acyclic: every component of the removed set has |E| < |V|
            removed_graph = Subgraph(host, fix.removed)
            for comp in components_of(removed_graph):
                assert comp.edge_count <= len(comp.vertices) - 1 or not comp.edge_count


class TestEulerianCircuit:
    def test_triangle(self):
        g = Subgraph(MultipartiteHost.complete(3), frozenset({(1, 2), (1, 3), (2, 3)}))
        comp = components_of(g)[0]
        circuit = eulerian_circuit(comp)
        assert circuit.length == 3
        assert circuit.vertices[0] == circuit.vertices[-1] == 1

    def test_k5(self):
        comp = components_of(full_subgraph(K5))[0]
        circuit = eulerian_circuit(comp)
        assert circuit.length == 10
        assert circuit.edge_multiset() == sorted(full_subgraph(K5).edges)

    def test_isolated_vertex(self):
        g = Subgraph(MultipartiteHost.complete(2), frozenset())
        comp = components_of(g)[1]
        circuit = eulerian_circuit(comp)
        assert (circuit.vertices, circuit.length) == ((2,), 0)

    def test_rejects_odd_degree(self):
        g = Subgraph(MultipartiteHost.complete(3), frozenset({(1, 2)}))
        comp = components_of(g)[0]
        with pytest.raises(ValueError):
            eulerian_circuit(comp)

    def test_circuit_shape_validation(self):
        with pytest.raises(ValueError):
            Circuit((1, 2), 1)
        with pytest.raises(ValueError):
            Circuit((1, 2, 1), 1)

    def test_random_even_graphs(self):
        rng = random.Random(29)
        for _ in range(100):
            n = rng.randint(3, 15)
            host = MultipartiteHost.complete(n)
            edges = frozenset(
                (u, v) for (u, v) in iter_pairs(n) if rng.random() < 0.5
            )
            trimmed = parity_fix(Subgraph(host, edges)).trimmed
            for comp in components_of(trimmed):
                if not comp.edge_count:
                    continue
                circuit = eulerian_circuit(comp)
                assert circuit.length == comp.edge_count
                assert circuit.edge_multiset() == sorted(comp.edges())
                assert circuit.vertices[0] == min(comp.vertices)


class TestBestMonoCircuit:
    def test_single_color_k5(self):
        col = ColoredCompleteGraph(5, 1, tuple([1] * 10))
        color, circuit = best_mono_circuit(col)
        assert (color, circuit.length) == (1, 10)

    def test_rainbow_k3(self):
        col = ColoredCompleteGraph.from_pairs(3, 3, {(1, 2): 1, (1, 3): 2, (2, 3): 3})
        color, circuit = best_mono_circuit(col)
        assert (color, circuit.length) == (1, 0)

    def test_balanced_construction_long_circuit(self):
        n = 48
        col = k3_optimize(k3_initial_nice(n))
        color, circuit = best_mono_circuit(col)
        assert circuit.length >= 188 - (n - 1)

    def test_rejects_partial(self):
        col = ColoredCompleteGraph.from_pairs(3, 2, {(1, 2): 1})
        with pytest.raises(ValueError):
            best_mono_circuit(col)

    def test_random_colorings_cover_classes(self):
        rng = random.Random(41)
        for seed in range(20):
            n, k = rng.randint(4, 16), rng.randint(2, 3)
            col = random_coloring(n, k, seed)
            color, circuit = best_mono_circuit(col)
            # the circuit must be a real trail inside one color class
            cls = color_class(col, color)
            assert set(circuit.edge_multiset()) <= cls.edges
            assert len(set(circuit.edge_multiset())) == circuit.length
