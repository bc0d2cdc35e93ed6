# Copyright 2025 PackCritS Project Developers. See the top-level COPYRIGHT file
# for details.
#
# SPDX-License-Identifier: MIT

from absl.testing import absltest
from absl.testing import parameterized
from hypothesis import given, settings
from hypothesis import strategies as st

from PackCritS import config
from PackCritS._test.utils import (
    _check_coloring,
    _generic_sequences,
    _make_connected_graph,
    _small_sequences,
    graphs,
)
from PackCritS.errors import PartialColoring, SizeLimit, Timeout
from PackCritS.families import generate
from PackCritS.graph import Graph, disjoint_union
from PackCritS.sequence import PACKING, parse_sequence
from PackCritS.solver import (
    Coloring,
    brute_force_chi,
    chi_s,
    diameter_rule_chi,
    greedy_upper_bound,
    is_k_colorable,
    packing_lower_bound,
    validate_coloring,
)


class ColoringTest(parameterized.TestCase):
    def test_accessors(self):
        c = Coloring([1, 3, 1, 0])
        self.assertEqual(c.k, 3)
        self.assertEqual(c.colors_used(), 2)
        self.assertFalse(c.is_total())
        self.assertEqual(c.classes(), {1: [0, 2], 3: [1]})
        self.assertEqual(
            Coloring.from_mapping({0: 2, 2: 1}, 3).assignment, (2, 0, 1)
        )

    def test_partial_coloring_is_rejected(self):
        with self.assertRaises(PartialColoring):
            validate_coloring(
                generate("path:3"), PACKING, Coloring([1, 2, 0])
            )
        with self.assertRaises(PartialColoring):
            validate_coloring(generate("path:3"), PACKING, Coloring([1, 2]))

    @parameterized.parameters(
        [
            ("1,const", [1, 2, 1, 2, 1], True),
            ("1,inc", [1, 2, 1, 3, 1], True),
            ("1,inc", [1, 2, 1, 2, 1], False),
            ("2,const", [1, 2, 3, 1, 2], True),
            ("2,const", [1, 2, 1, 3, 2], False),
        ]
    )
    def test_validate_on_path(self, text, assignment, expected):
        g = generate("path:5")
        self.assertEqual(
            validate_coloring(g, parse_sequence(text), Coloring(assignment)),
            expected,
        )

    def test_distinct_components_never_conflict(self):
        g = Graph(2)
        self.assertTrue(
            validate_coloring(g, parse_sequence("9,const"), Coloring([1, 1]))
        )


class ChiTest(parameterized.TestCase):
    @parameterized.parameters(
        [
            ("complete:5", "1,const", 5),
            ("path:1", "1,inc", 1),
            ("path:2", "1,inc", 2),
            ("path:3", "1,inc", 2),
            ("path:9", "1,inc", 3),
            ("cycle:5", "1,const", 3),
            ("cycle:4", "1,inc", 3),
            ("cycle:5", "1,inc", 4),
            ("cycle:8", "1,inc", 3),
            ("cycle:7", "2,const", 4),
            ("cycle:5", "2,const", 5),
            ("cycle:9", "2,const", 3),
            ("star:3", "1,inc", 2),
            ("star:3", "2,const", 4),
            ("path:14", "2,3,11,const", 8),
            ("path:14", "2,3,11,inc", 8),
            ("star_bridge:3", "1,3,const", 4),
            ("clique_path:2", "2,5,const", 6),
        ]
    )
    def test_known_values(self, spec, text, expected):
        g = generate(spec)
        seq = parse_sequence(text)
        result = chi_s(g, seq)
        self.assertEqual(result.value, expected)
        self.assertFalse(result.timed_out)
        _check_coloring(self.assertEqual, g, seq, result.witness, expected)

    def test_components_are_independent(self):
        g = disjoint_union(generate("cycle:5"), generate("complete:4"))
        seq = parse_sequence("1,const")
        result = chi_s(g, seq)
        self.assertEqual(result.value, 4)
        _check_coloring(self.assertEqual, g, seq, result.witness, 4)

    @parameterized.parameters(((seq,) for seq in _generic_sequences))
    def test_bounds_bracket_chi(self, seq):
        for n, p, seed in [(6, 0.3, 0), (8, 0.2, 1), (9, 0.4, 2)]:
            g = _make_connected_graph(n, p, seed)
            chi = chi_s(g, seq).value
            self.assertLessEqual(packing_lower_bound(g, seq), chi)
            self.assertGreaterEqual(greedy_upper_bound(g, seq), chi)

    @settings(max_examples=40, deadline=None)
    @given(graphs(max_n=6), st.sampled_from(_small_sequences))
    def test_matches_brute_force(self, g, seq):
        result = chi_s(g, seq)
        self.assertEqual(result.value, brute_force_chi(g, seq))
        self.assertTrue(validate_coloring(g, seq, result.witness))

    @settings(max_examples=40, deadline=None)
    @given(graphs(max_n=7), st.sampled_from(_generic_sequences))
    def test_diameter_rule(self, g, seq):
        value = diameter_rule_chi(g, seq)
        if value is not None:
            self.assertEqual(value, chi_s(g, seq).value)

    def test_decision(self):
        c5 = generate("cycle:5")
        seq = parse_sequence("1,const")
        self.assertIsNone(is_k_colorable(c5, seq, 2))
        c = is_k_colorable(c5, seq, 3)
        _check_coloring(self.assertEqual, c5, seq, c, 3)
        with self.assertRaises(ValueError):
            is_k_colorable(c5, seq, 0)


class BudgetTest(absltest.TestCase):
    def test_timeout_carries_bounds(self):
        g = generate("path:14")
        seq = parse_sequence("2,3,11,const")
        with self.assertRaises(Timeout) as cm:
            chi_s(g, seq, node_budget=5)
        e = cm.exception
        self.assertGreaterEqual(e.lower, 3)
        self.assertLessEqual(e.lower, 8)
        self.assertGreaterEqual(e.upper, 8)
        self.assertTrue(e.partial.timed_out)

    def test_timeout_without_raising(self):
        g = generate("path:14")
        seq = parse_sequence("2,3,11,const")
        result = chi_s(g, seq, node_budget=5, raise_on_timeout=False)
        self.assertTrue(result.timed_out)
        self.assertGreaterEqual(result.value, 8)
        self.assertTrue(validate_coloring(g, seq, result.witness))

    def test_decision_timeout(self):
        with self.assertRaises(Timeout):
            is_k_colorable(
                generate("path:14"), parse_sequence("2,3,11,const"), 7, 5
            )

    def test_brute_force_limit(self):
        n = config.state.brute_force_limit + 1
        with self.assertRaises(SizeLimit):
            brute_force_chi(generate(f"path:{n}"), PACKING)


if __name__ == "__main__":
    absltest.main()
