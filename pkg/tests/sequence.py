# Copyright 2025 PackCritS Project Developers. See the top-level COPYRIGHT file
# for details.
#
# SPDX-License-Identifier: MIT

from absl.testing import absltest
from absl.testing import parameterized

from PackCritS.errors import InfeasiblePattern, MalformedSequence
from PackCritS.sequence import (
    PACKING,
    PackingSequence,
    Tail,
    distance_sequence,
    format_pattern,
    matches,
    parse_pattern,
    parse_sequence,
    representatives,
)

_patterns = (
    "1,1",
    "1,2,2",
    "1,>=2",
    "1,>=2,3",
    ">=2",
    "2,2,2",
    "2,2,>=3",
    "2,>=3",
    ">=3",
    "1,3,3",
    "1,3,>=4",
    "1,>=4",
    ">=2,>=3,5",
)


class PackingSequenceTest(parameterized.TestCase):
    @parameterized.parameters(
        [
            ("1,3,3,const", 9, 3),
            ("1,inc", 5, 5),
            ("2,3,11,inc", 4, 12),
            ("2,3,11", 3, 11),
            ("2,5,const", 1, 2),
        ]
    )
    def test_terms(self, text, i, expected):
        self.assertEqual(parse_sequence(text).s_at(i), expected)

    def test_equality_is_by_terms(self):
        self.assertEqual(parse_sequence("1,3,3,const"), parse_sequence("1,3"))
        self.assertEqual(parse_sequence("1,2,3,inc"), PACKING)
        self.assertEqual(
            hash(parse_sequence("1,2,3,inc")), hash(parse_sequence("1,inc"))
        )
        self.assertEqual(distance_sequence(2), parse_sequence("2,2,const"))
        self.assertNotEqual(
            parse_sequence("1,const"), parse_sequence("1,inc")
        )

    def test_text(self):
        seq = parse_sequence(" 1, 3,3 ,CONST")
        self.assertEqual(str(seq), "1,3,3,const")
        self.assertEqual(seq.tail, Tail.CONSTANT)
        self.assertEqual(str(PACKING), "1,inc")
        self.assertEqual(PACKING.terms(4), (1, 2, 3, 4))

    @parameterized.parameters([("",), ("0,1",), ("3,2",), ("a,const",)])
    def test_malformed(self, text):
        with self.assertRaises(MalformedSequence):
            parse_sequence(text)

    def test_positions_start_at_one(self):
        with self.assertRaises(ValueError):
            PackingSequence((1,)).s_at(0)


class PatternTest(parameterized.TestCase):
    @parameterized.parameters(((p,) for p in _patterns))
    def test_text(self, text):
        self.assertEqual(format_pattern(parse_pattern(text)), text)

    @parameterized.parameters([(">=x",), ("",), ("0",), ("1,>=0",)])
    def test_malformed(self, text):
        with self.assertRaises(MalformedSequence):
            parse_pattern(text)

    @parameterized.parameters(
        [
            (">=2", "2,const", True),
            (">=2", "1,inc", False),
            ("2,2,>=3", "2,2,3,inc", True),
            ("2,2,>=3", "2,2,2,3,const", False),
            ("1,1", "1,1,2,inc", True),
            ("1,1", "1,inc", False),
            ("1,>=2,3", "1,3,3,const", True),
        ]
    )
    def test_matches(self, pattern, text, expected):
        self.assertEqual(
            matches(parse_pattern(pattern), parse_sequence(text)), expected
        )

    @parameterized.parameters(
        [
            ("2,>=3", "2,3,const", 6, True),
            ("2,>=3", "2,3,inc", 9, True),
            ("1,1", "1,1,2,inc", 5, True),
            ("1,3", "1,2,inc", 4, False),
        ]
    )
    def test_matches_with_depth(self, pattern, text, depth, expected):
        self.assertEqual(
            matches(parse_pattern(pattern), parse_sequence(text), depth=depth),
            expected,
        )

    def test_depth_shorter_than_pattern(self):
        with self.assertRaises(ValueError):
            matches(parse_pattern("1,2,2"), PACKING, depth=2)

    @parameterized.parameters([("3,2",), (">=4,3",)])
    def test_infeasible(self, text):
        with self.assertRaises(InfeasiblePattern):
            representatives(parse_pattern(text), 4)


class RepresentativesTest(parameterized.TestCase):
    @parameterized.parameters(
        [
            (
                "1,3,>=4",
                4,
                ["1,3,4,const", "1,3,7,const", "1,3,4,5,const", "1,3,4,inc"],
            ),
            ("1,1", 3, ["1,1,const", "1,1,2,const", "1,1,inc"]),
            (">=2", 2, ["2,const", "5,const", "2,3,const", "2,inc"]),
            (">=2,>=3,5", 3, ["2,3,5,const", "5,5,5,const", "2,3,5,inc"]),
        ]
    )
    def test_members(self, text, k, expected):
        reps = representatives(parse_pattern(text), k)
        self.assertEqual([str(s) for s in reps], expected)

    @parameterized.parameters(((p, k) for p in _patterns for k in [1, 3, 5]))
    def test_members_match(self, text, k):
        pattern = parse_pattern(text)
        reps = representatives(pattern, k)
        self.assertNotEmpty(reps)
        self.assertLen(set(reps), len(reps))
        for seq in reps:
            self.assertTrue(matches(pattern, seq))

    def test_needs_positive_k(self):
        with self.assertRaises(ValueError):
            representatives(parse_pattern("1,1"), 0)


if __name__ == "__main__":
    absltest.main()
