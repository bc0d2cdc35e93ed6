# Copyright 2025 PackCritS Project Developers. See the top-level COPYRIGHT file
# for details.
#
# SPDX-License-Identifier: MIT

from absl.testing import absltest
from absl.testing import parameterized

import networkx as nx

from PackCritS import config
from PackCritS.canon import canonical_form
from PackCritS.errors import SizeLimit
from PackCritS.families import generate
from PackCritS.graph import Graph, is_connected, is_tree
from PackCritS.io import from_networkx
from PackCritS.sequence import PACKING, parse_sequence
from PackCritS.verify.enumerate import (
    candidate_graphs,
    connected_graphs_up_to,
    enumerate_connected_graphs,
    find_k_critical,
    find_k_vertex_critical,
    trees,
)


class EnumerateTest(parameterized.TestCase):
    @parameterized.parameters(
        [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112), (7, 853)]
    )
    def test_counts(self, n, count):
        graphs = list(enumerate_connected_graphs(n))
        self.assertLen(graphs, count)
        self.assertTrue(all(g.n == n and is_connected(g) for g in graphs))

    @parameterized.parameters(((n,) for n in range(1, 7)))
    def test_matches_atlas(self, n):
        expected = {
            canonical_form(from_networkx(nxg))
            for nxg in nx.graph_atlas_g()
            if nxg.number_of_nodes() == n and nx.is_connected(nxg)
        }
        found = {canonical_form(g) for g in enumerate_connected_graphs(n)}
        self.assertEqual(found, expected)

    def test_up_to(self):
        graphs = connected_graphs_up_to(5)
        self.assertLen(graphs, 1 + 1 + 2 + 6 + 21)
        self.assertEqual([g.n for g in graphs], sorted(g.n for g in graphs))

    def test_limits(self):
        with self.assertRaises(ValueError):
            enumerate_connected_graphs(0)
        with self.assertRaises(SizeLimit):
            enumerate_connected_graphs(config.state.enumeration_limit + 1)

    @parameterized.parameters(
        [(1, 1), (2, 1), (4, 2), (5, 3), (6, 6), (7, 11), (8, 23)]
    )
    def test_trees(self, n, count):
        found = trees(n)
        self.assertLen(found, count)
        self.assertTrue(all(g.n == n and is_tree(g) for g in found))

    def test_corpus_is_filtered(self):
        corpus = [generate("cycle:5"), Graph(3, [(0, 1)]), generate("path:9")]
        self.assertEqual(candidate_graphs(6, corpus), [generate("cycle:5")])


class FindCriticalTest(parameterized.TestCase):
    def test_odd_cycles(self):
        found = find_k_critical(7, parse_sequence("1,const"), 3)
        self.assertEqual(
            {canonical_form(g) for g in found},
            {canonical_form(generate(f"cycle:{n}")) for n in (3, 5, 7)},
        )

    @parameterized.parameters([("1,const",), ("1,inc",), ("2,2,const",)])
    def test_two_critical_is_k2(self, text):
        found = find_k_critical(5, parse_sequence(text), 2)
        self.assertEqual(found, [generate("complete:2")])

    def test_vertex_critical_packing(self):
        found = find_k_vertex_critical(5, PACKING, 3)
        self.assertEqual(
            {canonical_form(g) for g in found},
            {
                canonical_form(generate(s))
                for s in ("cycle:3", "cycle:4", "path:4")
            },
        )

    def test_workers_agree(self):
        seq = parse_sequence("1,2,const")
        serial = find_k_critical(6, seq, 3)
        parallel = find_k_critical(6, seq, 3, workers=2)
        self.assertEqual(serial, parallel)

    def test_budget_exhaustion_is_reported(self):
        skipped = list()
        found = find_k_critical(
            14,
            parse_sequence("2,3,11,const"),
            8,
            corpus=[generate("path:14")],
            skipped=skipped,
            node_budget=5,
        )
        self.assertEmpty(found)
        self.assertEqual(skipped, [generate("path:14")])


if __name__ == "__main__":
    absltest.main()
