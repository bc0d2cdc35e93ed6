# Copyright 2025 PackCritS Project Developers. See the top-level COPYRIGHT file
# for details.
#
# SPDX-License-Identifier: MIT

import io
import json

from absl.testing import absltest
from absl.testing import parameterized

from PackCritS.errors import UnknownTheorem
from PackCritS.families import generate
from PackCritS.graph import delete_edge, is_cut_edge
from PackCritS.io import parse_graph6
from PackCritS.sequence import PACKING, parse_sequence
from PackCritS.solver import chi_s
from PackCritS.verify import (
    TheoremCheck,
    Verdict,
    VerifyOptions,
    check_ids,
    explore_cut_edges,
    explore_paths,
    verify_all,
    verify_theorem,
)
from PackCritS.verify.checks import (
    GENERIC_SEQUENCES,
    _CHI_CACHE_SIZE,
    CheckFn,
    _chi_result,
    _cycle_check,
    claim_of,
    distance_chi_cycle,
)
from PackCritS.verify.report import (
    format_table,
    summarize,
    to_json_line,
    write_records,
)

_quick = VerifyOptions(
    n_max=5,
    cycle_max=12,
    distance_max=12,
    tree_max=7,
    brute_force_max=5,
    reps="minimal",
)

_ids = (
    "prop.2critical",
    "prop.s222",
    "manycases.i",
    "manycases.ii",
    "manycases.iii",
    "manycases.iv",
    "manycases.v",
    "manycases.vi",
    "manycases.vii",
    "manycases.vertex.i",
    "manycases.vertex.ii",
    "manycases.vertex.iii",
    "manycases.vertex.iv",
    "manycases.vertex.v",
    "manycases.vertex.vi",
    "smallcases.i",
    "smallcases.ii",
    "smallcases.iii",
    "cycles.small.i",
    "cycles.small.ii",
    "cycles1big.i",
    "cycles1big.ii",
    "cycles1small.i",
    "cycles1small.ii",
    "cycles1small.iii",
    "distance.formula",
    "distance.critical",
    "lemma.wsets",
    "lemma.connected",
    "lemma.vertexcritical",
    "prop.diamcritical",
    "cor.girth",
    "prop.trees",
    "edgebound.i",
    "edgebound.ii",
    "edgebound.iii",
    "prop.cutedge",
    "cor.rho",
    "construction.doubling",
    "oracle.bruteforce",
    "sharpness.gadgets",
    "sharpness.p14",
    "sharpness.ratio",
)


class RegistryTest(parameterized.TestCase):
    def test_every_check_is_registered(self):
        self.assertCountEqual(check_ids(), _ids)
        for id in _ids:
            self.assertNotEmpty(claim_of(id))

    def test_unknown_id(self):
        with self.assertRaises(UnknownTheorem):
            verify_theorem("manycases.viii")
        with self.assertRaises(UnknownTheorem):
            claim_of("")

    @parameterized.parameters([(0, "all"), (3, "some")])
    def test_bad_options(self, n_max, reps):
        with self.assertRaises(ValueError):
            VerifyOptions(n_max=n_max, reps=reps)


class VerdictTest(absltest.TestCase):
    def _run(self, failures, skipped):
        check = CheckFn(
            "x",
            "a claim",
            lambda o: ({"n_max": o.n_max}, [PACKING], 1, 2, failures, skipped),
        )
        return check(_quick)

    def test_pass(self):
        check = self._run([], [])
        self.assertIs(check.verdict, Verdict.PASS)
        self.assertTrue(check.passed)
        self.assertIsNone(check.counterexample)
        self.assertEqual(check.representatives, ["1,inc"])

    def test_fail_wins_over_skipped(self):
        check = self._run([{"graph": "Bw"}], [{"graph": "C~"}])
        self.assertIs(check.verdict, Verdict.FAIL)
        self.assertEqual(check.counterexample, [{"graph": "Bw"}])

    def test_skipped(self):
        check = self._run([], [{"graph": "C~"}])
        self.assertIs(check.verdict, Verdict.SKIPPED)
        self.assertFalse(check.passed)


class ChecksPassTest(parameterized.TestCase):
    @parameterized.parameters(((id,) for id in _ids))
    def test_check_passes(self, id):
        check = verify_theorem(id, _quick)
        self.assertEqual(check.id, id)
        self.assertIs(check.verdict, Verdict.PASS, msg=check.counterexample)

    @parameterized.parameters(
        [
            ("manycases.i",),
            ("manycases.vertex.iv",),
            ("smallcases.i",),
            ("edgebound.ii",),
        ]
    )
    def test_all_representatives(self, id):
        check = verify_theorem(id, VerifyOptions(n_max=6))
        self.assertIs(check.verdict, Verdict.PASS, msg=check.counterexample)
        self.assertNotEmpty(check.representatives)

    def test_odd_cycle_classification(self):
        check = verify_theorem("manycases.i", VerifyOptions(n_max=7))
        for observed in check.observed.values():
            self.assertEqual(observed, ["cycle:3", "cycle:5", "cycle:7"])

    def test_small_cases_at_six(self):
        options = VerifyOptions(n_max=6, reps="minimal")
        check = verify_theorem("smallcases.i", options)
        self.assertIs(check.verdict, Verdict.PASS, msg=check.counterexample)
        (observed,) = check.observed.values()
        self.assertCountEqual(
            observed, ["complete:4", "G1", "G2", "cycle:5", "cycle:6"]
        )

    @parameterized.parameters(
        (
            (id,)
            for id in _ids
            if id.startswith(("cycles", "distance.critical"))
        )
    )
    def test_repeated_runs_agree(self, id):
        first = verify_theorem(id, _quick)
        second = verify_theorem(id, _quick)
        self.assertNotEmpty(first.representatives)
        self.assertEqual(first.representatives, second.representatives)
        self.assertEqual(first.observed, second.observed)
        self.assertIs(second.verdict, Verdict.PASS)

    def test_no_sequences_is_skipped(self):
        check = CheckFn(
            "x", "a claim", _cycle_check(lambda o: [], lambda n, s: True, "d")
        )
        self.assertIs(check(_quick).verdict, Verdict.SKIPPED)

    def test_chi_cache_is_bounded(self):
        verify_theorem("edgebound.i", _quick)
        info = _chi_result.cache_info()
        self.assertEqual(info.maxsize, _CHI_CACHE_SIZE)
        self.assertGreater(info.currsize, 0)
        self.assertLessEqual(info.currsize, _CHI_CACHE_SIZE)

    def test_budget_exhaustion_skips(self):
        options = VerifyOptions(n_max=5, reps="minimal", node_budget=1)
        check = verify_theorem("sharpness.p14", options)
        self.assertIs(check.verdict, Verdict.SKIPPED)
        self.assertNotEmpty(check.counterexample)

    def test_corpus(self):
        corpus = [generate(f"cycle:{n}") for n in (3, 4, 5, 6, 7)]
        options = VerifyOptions(n_max=7, corpus=corpus)
        check = verify_theorem("manycases.i", options)
        self.assertIs(check.verdict, Verdict.PASS, msg=check.counterexample)

    def test_workers(self):
        options = VerifyOptions(n_max=5, workers=2, reps="minimal")
        check = verify_theorem("lemma.wsets", options)
        self.assertIs(check.verdict, Verdict.PASS)
        self.assertGreater(check.observed["cases"], 0)


class FormulaTest(parameterized.TestCase):
    @parameterized.parameters(
        [(7, 2, 4), (5, 2, 5), (9, 2, 3), (4, 1, 2), (5, 1, 3), (11, 3, 6)]
    )
    def test_distance_chi_cycle(self, n, k, expected):
        self.assertEqual(distance_chi_cycle(n, k), expected)
        seq = parse_sequence(f"{k},const")
        self.assertEqual(chi_s(generate(f"cycle:{n}"), seq).value, expected)

    def test_distance_chi_cycle_domain(self):
        with self.assertRaises(ValueError):
            distance_chi_cycle(2, 2)


class ExploreTest(parameterized.TestCase):
    def test_paths(self):
        self.assertEqual(
            explore_paths(PACKING, 6),
            [(1, 1), (2, 2), (3, 2), (4, 3), (5, 3), (6, 3)],
        )

    @parameterized.parameters(((text,) for text in GENERIC_SEQUENCES))
    def test_cut_edges(self, text):
        seq = parse_sequence(text)
        for entry in explore_cut_edges(5, seq):
            g = parse_graph6(entry["graph"])
            e = tuple(entry["edge"])
            self.assertTrue(is_cut_edge(g, e))
            self.assertGreaterEqual(entry["chi_minus"], 2)
            self.assertLess(2 * entry["chi_minus"], entry["chi"] + 1)
            self.assertEqual(
                chi_s(delete_edge(g, e), seq).value, entry["chi_minus"]
            )


class ReportTest(absltest.TestCase):
    def setUp(self):
        super().setUp()
        self.checks = [
            TheoremCheck("a", {"n_max": 5}, ["1,inc"], 1, 1, Verdict.PASS),
            TheoremCheck(
                "bb",
                {"n_max": 5},
                [],
                {3: [1]},
                {"cases": 4, "violations": 1},
                Verdict.FAIL,
                [{"graph": "Bw"}],
            ),
        ]

    def test_json_line(self):
        line = to_json_line(self.checks[1])
        self.assertNotIn("\n", line)
        record = json.loads(line)
        self.assertEqual(
            list(record),
            [
                "id",
                "verdict",
                "parameters",
                "representatives",
                "expected",
                "observed",
                "counterexample",
            ],
        )
        self.assertEqual(record["expected"], {"3": [1]})
        self.assertEqual(record["verdict"], "FAIL")

    def test_records(self):
        stream = io.StringIO()
        write_records(self.checks, stream)
        self.assertEqual(
            stream.getvalue(),
            "".join(to_json_line(c) + "\n" for c in self.checks),
        )
        self.assertLen(stream.getvalue().splitlines(), 2)

    def test_table(self):
        lines = format_table(self.checks).splitlines()
        self.assertEqual(lines[0], "id  verdict  summary")
        self.assertEqual(lines[1], "a   PASS     1 representatives")
        self.assertEqual(
            lines[2],
            'bb  FAIL     4 cases, 1 violations; first: {"graph": "Bw"}',
        )

    def test_summarize(self):
        self.assertEqual(
            summarize(self.checks), {"PASS": 1, "FAIL": 1, "SKIPPED": 0}
        )
        checks = verify_all(_quick, ids=["cycles.small.i", "prop.2critical"])
        self.assertEqual(
            [c.id for c in checks], ["cycles.small.i", "prop.2critical"]
        )


if __name__ == "__main__":
    absltest.main()
