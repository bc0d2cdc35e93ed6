# Copyright 2025 PackCritS Project Developers. See the top-level COPYRIGHT file
# for details.
#
# SPDX-License-Identifier: MIT

from absl.testing import absltest
from absl.testing import parameterized
from hypothesis import given, settings

import networkx as nx
import numpy as np

from PackCritS._test.utils import (
    _floyd_warshall,
    _make_connected_graph,
    _make_random_graph,
    graphs,
)
from PackCritS.errors import DeleteLastVertex, MissingEdge, MissingVertex
from PackCritS.families import generate
from PackCritS.graph import (
    INFINITY,
    UNREACHABLE,
    Graph,
    add_edge,
    all_pairs_distance,
    components,
    delete_edge,
    delete_vertex,
    diameter,
    disjoint_union,
    girth,
    induced_subgraph,
    is_connected,
    is_cut_edge,
    is_tree,
    isolated_vertices,
    w_partition,
)
from PackCritS.io import to_networkx


class GraphTest(parameterized.TestCase):
    def test_edges_are_normalized(self):
        g = Graph(3, [(1, 0), (0, 1), (2, 1)])
        self.assertEqual(g.m, 2)
        self.assertEqual(g.sorted_edges(), [(0, 1), (1, 2)])
        self.assertTrue(g.has_edge(1, 0))
        self.assertFalse(g.has_edge(0, 2))
        self.assertFalse(g.has_edge(0, 7))

    @parameterized.parameters([(0, []), (2, [(0, 0)]), (2, [(0, 2)])])
    def test_invalid_graphs(self, n, edges):
        with self.assertRaises(ValueError):
            Graph(n, edges)

    def test_equality_ignores_origin(self):
        g = Graph(2, [(0, 1)])
        h = Graph(2, [(0, 1)], origin=[5, 7])
        self.assertEqual(g, h)
        self.assertEqual(hash(g), hash(h))
        self.assertNotEqual(g, Graph(3, [(0, 1)]))

    def test_neighbors_and_degrees(self):
        star = generate("star:3")
        self.assertEqual(star.neighbors(0), [1, 2, 3])
        self.assertEqual(star.degrees(), [3, 1, 1, 1])
        with self.assertRaises(MissingVertex):
            star.neighbors(4)


class DistanceTest(parameterized.TestCase):
    @parameterized.parameters(
        (
            (n, p, seed)
            for n in [1, 2, 5, 9]
            for p in [0.1, 0.4, 0.8]
            for seed in [0, 1]
        )
    )
    def test_matches_floyd_warshall(self, n, p, seed):
        g = _make_random_graph(n, p, seed)
        dm = all_pairs_distance(g)
        self.assertTrue(np.array_equal(dm.array, _floyd_warshall(g)))

    @settings(max_examples=50, deadline=None)
    @given(graphs(max_n=9))
    def test_symmetric_and_zero_diagonal(self, g):
        d = all_pairs_distance(g).array
        self.assertTrue(np.array_equal(d, d.T))
        self.assertTrue(np.all(np.diag(d) == 0))

    def test_unreachable_sentinel(self):
        g = Graph(3, [(0, 1)])
        dm = all_pairs_distance(g)
        self.assertIs(dm[0, 2], UNREACHABLE)
        self.assertEqual(dm[0, 1], 1)
        self.assertIs(dm.diameter(), UNREACHABLE)
        self.assertFalse(dm.within(5)[0, 2])
        with self.assertRaises(TypeError):
            dm[0, 2] < 3

    def test_within_excludes_diagonal(self):
        dm = all_pairs_distance(generate("path:4"))
        w = dm.within(2)
        self.assertFalse(w[0, 0])
        self.assertTrue(w[0, 2])
        self.assertFalse(w[0, 3])
        self.assertEqual(dm.ball_masks(1)[1], 0b101)

    @parameterized.parameters(
        [
            ("path:1", 0),
            ("path:5", 4),
            ("cycle:7", 3),
            ("complete:4", 1),
            ("star_bridge:3", 5),
        ]
    )
    def test_diameter(self, spec, expected):
        self.assertEqual(diameter(generate(spec)), expected)

    @parameterized.parameters(
        [
            ("cycle:7", 7),
            ("complete:4", 3),
            ("Z1", 3),
            ("path:6", INFINITY),
            ("X:6", INFINITY),
            ("cycle:4", 4),
        ]
    )
    def test_girth(self, spec, expected):
        self.assertEqual(girth(generate(spec)), expected)

    @parameterized.parameters(
        ((n, p, s) for n in [4, 7] for p in [0.3, 0.6] for s in [2, 3])
    )
    def test_girth_matches_networkx(self, n, p, seed):
        g = _make_connected_graph(n, p, seed)
        cycles = nx.minimum_cycle_basis(to_networkx(g))
        expected = min((len(c) for c in cycles), default=INFINITY)
        self.assertEqual(girth(g), expected)


class ComponentsTest(parameterized.TestCase):
    def test_components_sorted(self):
        g = Graph(6, [(4, 5), (0, 3), (1, 2)])
        self.assertEqual(components(g), [[0, 3], [1, 2], [4, 5]])
        self.assertFalse(is_connected(g))
        self.assertTrue(is_connected(Graph(1)))

    def test_cut_edges(self):
        g = generate("Z1")
        self.assertTrue(is_cut_edge(g, (2, 3)))
        self.assertFalse(is_cut_edge(g, (0, 1)))
        with self.assertRaises(MissingEdge):
            is_cut_edge(g, (0, 3))

    def test_isolated_and_tree(self):
        self.assertEqual(isolated_vertices(Graph(3, [(0, 1)])), [2])
        self.assertTrue(is_tree(generate("X:6")))
        self.assertFalse(is_tree(generate("cycle:5")))
        self.assertFalse(is_tree(Graph(3, [(0, 1)])))


class MutationTest(parameterized.TestCase):
    @settings(max_examples=50, deadline=None)
    @given(graphs(min_n=2, max_n=8))
    def test_delete_then_add_edge(self, g):
        for e in g.sorted_edges():
            h = delete_edge(g, e)
            self.assertEqual(h.m, g.m - 1)
            self.assertFalse(h.has_edge(*e))
            self.assertEqual(add_edge(h, e), g)

    def test_delete_missing_edge(self):
        with self.assertRaises(MissingEdge):
            delete_edge(generate("path:3"), (0, 2))
        with self.assertRaises(ValueError):
            add_edge(generate("path:3"), (0, 1))

    def test_delete_vertex_reindexes(self):
        g = generate("path:5")
        h = delete_vertex(g, 2)
        self.assertEqual(h, Graph(4, [(0, 1), (2, 3)]))
        self.assertEqual(h.origin, (0, 1, 3, 4))
        k = delete_vertex(h, 0)
        self.assertEqual(k.origin, (1, 3, 4))

    def test_delete_vertex_errors(self):
        with self.assertRaises(DeleteLastVertex):
            delete_vertex(Graph(1), 0)
        with self.assertRaises(MissingVertex):
            delete_vertex(generate("path:3"), 3)

    def test_induced_and_union(self):
        g = generate("cycle:5")
        self.assertEqual(
            induced_subgraph(g, [4, 0, 1]), Graph(3, [(0, 1), (0, 2)])
        )
        u = disjoint_union(generate("path:2"), generate("cycle:3"))
        self.assertEqual(u.n, 5)
        self.assertEqual(components(u), [[0, 1], [2, 3, 4]])


class PartitionTest(parameterized.TestCase):
    def test_even_cycle(self):
        part = w_partition(generate("cycle:6"), (0, 1))
        self.assertEqual(part.w_uv, frozenset({0, 4, 5}))
        self.assertEqual(part.w_vu, frozenset({1, 2, 3}))
        self.assertEqual(part.ties, frozenset())

    def test_odd_cycle_has_tie(self):
        part = w_partition(generate("cycle:5"), (0, 1))
        self.assertEqual(part.ties, frozenset({3}))

    def test_unreachable_side(self):
        g = delete_edge(generate("path:4"), (1, 2))
        part = w_partition(g, (1, 2), require_edge=False)
        self.assertEqual(part.w_uv, frozenset({0, 1}))
        self.assertEqual(part.w_vu, frozenset({2, 3}))
        with self.assertRaises(MissingEdge):
            w_partition(g, (1, 2))

    @parameterized.parameters(
        ((n, p, seed) for n in [5, 7] for p in [0.3, 0.5] for seed in [0, 4])
    )
    def test_partition_survives_deletion(self, n, p, seed):
        g = _make_connected_graph(n, p, seed)
        for e in g.sorted_edges():
            before = w_partition(g, e)
            after = w_partition(delete_edge(g, e), e, require_edge=False)
            self.assertEqual(before.w_uv, after.w_uv)
            self.assertEqual(before.w_vu, after.w_vu)


if __name__ == "__main__":
    absltest.main()
