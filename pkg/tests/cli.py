# Copyright 2025 PackCritS Project Developers. See the top-level COPYRIGHT file
# for details.
#
# SPDX-License-Identifier: MIT

import io
import json

from absl.testing import absltest
from absl.testing import parameterized

from PackCritS.cli import (
    EXIT_FAIL,
    EXIT_OK,
    EXIT_TIMEOUT,
    EXIT_USAGE,
    load_graph,
    main,
)
from PackCritS.families import generate
from PackCritS.graph import Graph
from PackCritS.verify.checks import check_ids


class CliTest(parameterized.TestCase):
    def _run(self, *argv):
        out = io.StringIO()
        status = main(list(argv), out=out)
        return status, out.getvalue()

    def test_chi_table(self):
        status, text = self._run(
            "chi", "--family", "path:14", "--seq", "2,3,11,const"
        )
        self.assertEqual(status, EXIT_OK)
        self.assertIn("chi_S = 8\n", text)
        self.assertIn("witness: ", text)

    def test_chi_records(self):
        status, text = self._run(
            "chi", "--g6", "Bw", "--seq", "1,const", "--format", "records"
        )
        self.assertEqual(status, EXIT_OK)
        record = json.loads(text)
        self.assertEqual(record["value"], 3)
        self.assertEqual(record["graph"], "Bw")
        self.assertLen(record["witness"], 3)

    def test_inline_edges(self):
        status, text = self._run(
            "chi", "--edges", "0 1;1 2;2 3;3 0", "--seq", "1,inc"
        )
        self.assertEqual(status, EXIT_OK)
        self.assertIn("chi_S = 3\n", text)

    @parameterized.parameters([("0 1\n1 2\n", 2), (">>graph6<<C~\n", 4)])
    def test_file_source(self, content, expected):
        path = self.create_tempfile(content=content).full_path
        status, text = self._run("chi", "--file", path, "--seq", "1,const")
        self.assertEqual(status, EXIT_OK)
        self.assertIn(f"chi_S = {expected}\n", text)

    def test_stdin_graph6(self):
        g = load_graph(("g6", "-"), io.StringIO("Bw\n"))
        self.assertEqual(g, generate("complete:3"))
        self.assertEqual(load_graph(("edges", "0 1")), Graph(2, [(0, 1)]))

    def test_critical(self):
        status, text = self._run(
            "critical", "--family", "cycle:5", "--seq", "1,2,2,const"
        )
        self.assertEqual(status, EXIT_OK)
        self.assertIn("chi_S = 4\n", text)
        self.assertIn("critical: True\n", text)
        self.assertIn("vertex-critical: True\n", text)

    def test_critical_records(self):
        status, text = self._run(
            "critical",
            "--family",
            "cycle:6",
            "--seq",
            "1,const",
            "--format",
            "records",
        )
        self.assertEqual(status, EXIT_OK)
        record = json.loads(text)
        self.assertFalse(record["is_critical"])
        self.assertLen(record["per_edge"], 6)

    def test_double(self):
        status, text = self._run(
            "double",
            "--family",
            "star_bridge:3",
            "--seq",
            "1,3,const",
            "--format",
            "records",
        )
        self.assertEqual(status, EXIT_OK)
        record = json.loads(text)
        self.assertEqual(record["edge"], [1, 5])
        self.assertEqual(record["colors"], 4)

    def test_double_given_coloring(self):
        status, text = self._run(
            "double",
            "--edges",
            "0 1;1 2;2 3;3 4;4 0",
            "--edge",
            "0,1",
            "--coloring",
            "1,1,2,1,2",
            "--seq",
            "1,const",
        )
        self.assertEqual(status, EXIT_OK)
        self.assertIn("G coloring:     3 1 2 1 2 (3 colors)\n", text)

    @parameterized.parameters(
        [
            ("--g6", "Bw"),
            ("--family", "path:4", "--edge", "0,2"),
            ("--family", "path:4", "--edge", "1,2", "--coloring", "1,1,1,1"),
        ]
    )
    def test_double_errors(self, *source):
        status, _ = self._run("double", *source, "--seq", "1,const")
        self.assertEqual(status, EXIT_USAGE)

    def test_verify_list(self):
        status, text = self._run("verify", "--list")
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(text.split(), check_ids())

    def test_verify_records(self):
        status, text = self._run(
            "verify",
            "--id",
            "cycles.small.i",
            "--id",
            "prop.2critical",
            "--nmax",
            "4",
            "--cycle-max",
            "10",
            "--format",
            "records",
        )
        self.assertEqual(status, EXIT_OK)
        records = [json.loads(line) for line in text.splitlines()]
        self.assertEqual(
            [r["id"] for r in records], ["cycles.small.i", "prop.2critical"]
        )
        self.assertTrue(all(r["verdict"] == "PASS" for r in records))

    def test_verify_table(self):
        status, text = self._run(
            "verify", "--id", "lemma.wsets", "--nmax", "4"
        )
        self.assertEqual(status, EXIT_OK)
        self.assertTrue(text.startswith("id"))
        self.assertIn("lemma.wsets", text)

    def test_verify_budget(self):
        status, _ = self._run(
            "verify", "--id", "sharpness.p14", "--node-budget", "1"
        )
        self.assertEqual(status, EXIT_TIMEOUT)

    def test_families(self):
        status, text = self._run("families", "gen", "complete:4")
        self.assertEqual((status, text), (EXIT_OK, "C~\n"))
        status, text = self._run("families", "gen", "path:3", "--as", "edges")
        self.assertEqual((status, text), (EXIT_OK, "0 1\n1 2\n"))
        status, text = self._run("families", "list")
        self.assertEqual(status, EXIT_OK)
        self.assertIn("non_cut", text.split())

    def test_explore_paths(self):
        status, text = self._run(
            "explore", "paths", "--seq", "1,inc", "--nmax", "4"
        )
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(
            text.splitlines(),
            ["n=1  chi=1", "n=2  chi=2", "n=3  chi=2", "n=4  chi=3"],
        )

    def test_explore_critical(self):
        status, text = self._run(
            "explore",
            "critical",
            "--seq",
            "1,const",
            "--k",
            "3",
            "--nmax",
            "5",
            "--format",
            "records",
        )
        self.assertEqual(status, EXIT_OK)
        orders = sorted(json.loads(line)["n"] for line in text.splitlines())
        self.assertEqual(orders, [3, 5])

    def test_timeout(self):
        status, text = self._run(
            "chi",
            "--family",
            "path:14",
            "--seq",
            "2,3,11,const",
            "--node-budget",
            "5",
        )
        self.assertEqual(status, EXIT_TIMEOUT)
        self.assertIn("bounds: 3 <= chi_S <= ", text)

    @parameterized.parameters(
        [
            (),
            ("chi", "--family", "path:3"),
            ("chi", "--family", "path:3", "--seq", "1", "--node-budget", "0"),
            ("chi", "--family", "path:3", "--g6", "Bw", "--seq", "1"),
            ("chi", "--family", "petersen", "--seq", "1"),
            ("chi", "--g6", "A", "--seq", "1"),
            ("chi", "--family", "path:3", "--seq", "3,2"),
            ("verify", "--id", "no.such.check"),
            ("families", "gen", "cycle:2"),
        ]
    )
    def test_usage_errors(self, *argv):
        status, _ = self._run(*argv)
        self.assertEqual(status, EXIT_USAGE)

    def test_config_flags_are_ignored(self):
        status, text = self._run(
            "--packcrits_node_budget=1000",
            "chi",
            "--family",
            "cycle:5",
            "--seq",
            "1,const",
        )
        self.assertEqual(status, EXIT_OK)
        self.assertIn("chi_S = 3\n", text)

    def test_exit_codes(self):
        self.assertEqual(
            (EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_TIMEOUT), (0, 1, 2, 3)
        )


if __name__ == "__main__":
    absltest.main()
