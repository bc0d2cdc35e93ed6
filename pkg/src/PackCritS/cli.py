# Copyright 2025 PackCritS Project Developers. See the top-level COPYRIGHT file
# for details.
#
# SPDX-License-Identifier: MIT

"""
Command line interface

Usage examples::

    packcrits chi --family path:14 --seq 2,3,11,const
    packcrits critical --family cycle:5 --seq 1,2,2,const
    packcrits double --family star_bridge:3 --seq 1,3,const
    packcrits verify --all --nmax 6 --format records
    packcrits families gen X:6
    packcrits explore paths --seq 2,3,11,const --nmax 16

Exit status is 0 on success, 1 when a check fails or a construction breaks,
2 on usage or parse errors, and 3 when a search budget runs out.

Budgets default to the `packcrits_node_budget` and `packcrits_time_budget`
options, which may also be set through `--packcrits_*` flags or the
`PACKCRITS_*` environment variables.
"""

import argparse
import json
import sys
from typing import Any, Dict, List, Optional, Sequence, TextIO

from absl import logging

from PackCritS._src.config import config
from PackCritS._src.util import auto_str, format_edge, parse_edge_text
from PackCritS.critical import double_coloring, is_critical
from PackCritS.errors import ClaimViolation, ParameterOutOfRange, Timeout
from PackCritS.families import FAMILY_NAMES, distinguished_edge, generate
from PackCritS.graph import Graph, delete_edge
from PackCritS.io import (
    GRAPH6_HEADER,
    emit_edge_list,
    emit_graph6,
    parse_edge_list,
    parse_graph6,
    read_graph6_file,
)
from PackCritS.sequence import PackingSequence, parse_sequence
from PackCritS.solver import Coloring, chi_s
from PackCritS.verify.checks import (
    Verdict,
    VerifyOptions,
    check_ids,
    explore_cut_edges,
    explore_paths,
    verify_all,
)
from PackCritS.verify.enumerate import find_k_critical
from PackCritS.verify.report import (
    format_table,
    summarize,
    write_records,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_TIMEOUT = 3


@auto_str
class RunConfig:
    """
    A parsed command line.

    Args:
        command:
            The subcommand, e.g. `"chi"` or `"explore paths"`.
        source:
            `(kind, value)` of the graph source, kind one of `"family"`,
            `"g6"`, `"edges"`, `"file"`; None for commands without a graph.
        sequence:
            The packing sequence text.
        k:
            A chromatic number of interest.
        n_max:
            Largest order of swept graphs.
        node_budget:
            Search node budget per solver call.
        time_budget:
            Wall-clock seconds per solver call.
        fmt:
            `"table"` or `"records"`.
        extra:
            Remaining subcommand specific arguments.
    """

    def __init__(
        self,
        command: str,
        source: Optional[tuple] = None,
        sequence: Optional[str] = None,
        k: Optional[int] = None,
        n_max: Optional[int] = None,
        node_budget: Optional[int] = None,
        time_budget: Optional[float] = None,
        fmt: str = "table",
        verbose: bool = False,
        extra: Optional[Dict[str, Any]] = None,
    ):
        self.command = command
        self.source = source
        self.sequence = sequence
        self.k = k
        self.n_max = n_max
        self.node_budget = node_budget
        self.time_budget = time_budget
        self.fmt = fmt
        self.verbose = verbose
        self.extra = dict() if extra is None else extra

    @property
    def budgets(self) -> tuple:
        return self.node_budget, self.time_budget

    def seq(self) -> PackingSequence:
        return parse_sequence(self.sequence)  # type: ignore


def _positive_int(text: str) -> int:
    val = int(text)
    if val <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, not {val}")
    return val


def _positive_float(text: str) -> float:
    val = float(text)
    if val <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, not {val}")
    return val


def _add_graph_source(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--family", help="family spec, e.g. cycle:5")
    group.add_argument("--g6", help="graph6 text, or - to read stdin")
    group.add_argument(
        "--edges", help="inline edge list, pairs separated by ';'"
    )
    group.add_argument("--file", help="graph6 or edge list file")


def _add_common(parser: argparse.ArgumentParser, seq: bool = True) -> None:
    if seq:
        parser.add_argument(
            "--seq", required=True, help="packing sequence, e.g. 1,3,const"
        )
    parser.add_argument("--node-budget", type=_positive_int, default=None)
    parser.add_argument("--time-budget", type=_positive_float, default=None)
    parser.add_argument(
        "--format", choices=("table", "records"), default="table"
    )
    parser.add_argument("-v", "--verbose", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="packcrits",
        description="Exact S-packing colorings and criticality checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chi", help="compute chi_S")
    _add_graph_source(p)
    _add_common(p)

    p = sub.add_parser("critical", help="decide criticality")
    _add_graph_source(p)
    _add_common(p)

    p = sub.add_parser("double", help="recolor G - e into G")
    _add_graph_source(p)
    _add_common(p)
    p.add_argument("--edge", help="the edge u,v (default: the family's)")
    p.add_argument(
        "--coloring",
        help="coloring of G - e, comma separated (default: optimal)",
    )

    p = sub.add_parser("verify", help="run registered checks")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--id", action="append", help="check id")
    which.add_argument("--all", action="store_true")
    which.add_argument("--list", action="store_true", help="list check ids")
    p.add_argument("--nmax", type=_positive_int, default=6)
    p.add_argument("--cycle-max", type=_positive_int, default=24)
    p.add_argument("--reps", choices=("minimal", "all"), default="all")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--corpus", help="graph6 corpus to sweep")
    _add_common(p, seq=False)

    p = sub.add_parser("families", help="named graphs")
    fam = p.add_subparsers(dest="action", required=True)
    q = fam.add_parser("gen", help="print a family member")
    q.add_argument("spec", help="family spec, e.g. X:6")
    q.add_argument("--as", dest="out", choices=("g6", "edges"), default="g6")
    fam.add_parser("list", help="list family names")

    p = sub.add_parser("explore", help="open questions")
    exp = p.add_subparsers(dest="action", required=True)
    q = exp.add_parser("cutedge", help="cut-edges below (chi + 1) / 2")
    _add_common(q)
    q.add_argument("--nmax", type=_positive_int, default=6)
    q = exp.add_parser("paths", help="chi_S of paths")
    _add_common(q)
    q.add_argument("--nmax", type=_positive_int, default=16)
    q = exp.add_parser("critical", help="k-critical graphs")
    _add_common(q)
    q.add_argument("--nmax", type=_positive_int, default=6)
    q.add_argument("--k", type=_positive_int, required=True)
    return parser


def to_run_config(args: argparse.Namespace) -> RunConfig:
    command = args.command
    if command in ("families", "explore"):
        command = f"{command} {args.action}"
    source = None
    for kind in ("family", "g6", "edges", "file"):
        if getattr(args, kind, None) is not None:
            source = (kind, getattr(args, kind))
    extra = {
        key: val
        for key, val in vars(args).items()
        if key
        in (
            "edge",
            "coloring",
            "id",
            "all",
            "list",
            "cycle_max",
            "reps",
            "workers",
            "corpus",
            "spec",
            "out",
        )
    }
    return RunConfig(
        command,
        source=source,
        sequence=getattr(args, "seq", None),
        k=getattr(args, "k", None),
        n_max=getattr(args, "nmax", None),
        node_budget=getattr(args, "node_budget", None),
        time_budget=getattr(args, "time_budget", None),
        fmt=getattr(args, "format", "table"),
        verbose=getattr(args, "verbose", False),
        extra=extra,
    )


def _looks_like_edge_list(text: str) -> bool:
    # graph6 never contains digits
    for line in text.splitlines():
        line = line.strip()
        if line.startswith(GRAPH6_HEADER):
            line = line[len(GRAPH6_HEADER) :]
        if line and not line.startswith("#"):
            return any(ch.isdigit() for ch in line)
    return False


def load_graph(source: tuple, stdin: TextIO = sys.stdin) -> Graph:
    """
    Read the graph named by a `(kind, value)` source.

    Raises:
        ValueError:
            Or a subclass, if the graph cannot be parsed.
    """
    kind, value = source
    if kind == "family":
        return generate(value)
    if kind == "g6":
        text = stdin.read() if value == "-" else value
        lines = text.strip().splitlines()
        return parse_graph6(lines[0] if lines else "")
    if kind == "edges":
        return parse_edge_list(value.replace(";", "\n"))
    with open(value, "r") as f:
        text = f.read()
    if _looks_like_edge_list(text):
        return parse_edge_list(text)
    return next(iter(read_graph6_file(value)))


def _emit(out: TextIO, record: Dict[str, Any]) -> None:
    out.write(json.dumps(record, separators=(",", ":")) + "\n")


def cmd_chi(rc: RunConfig, out: TextIO) -> int:
    g = load_graph(rc.source)  # type: ignore
    seq = rc.seq()
    result = chi_s(g, seq, *rc.budgets, verbose=rc.verbose)
    if rc.fmt == "records":
        _emit(
            out,
            {
                "command": "chi",
                "graph": emit_graph6(g),
                "sequence": str(seq),
                "value": result.value,
                "witness": list(result.witness),
                "nodes": result.nodes_explored,
            },
        )
    else:
        out.write(f"chi_S = {result.value}\n")
        out.write(f"witness: {' '.join(map(str, result.witness))}\n")
        out.write(f"nodes explored: {result.nodes_explored}\n")
    return EXIT_OK


def cmd_critical(rc: RunConfig, out: TextIO) -> int:
    g = load_graph(rc.source)  # type: ignore
    seq = rc.seq()
    report = is_critical(g, seq, *rc.budgets, verbose=rc.verbose)
    if rc.fmt == "records":
        _emit(
            out,
            {
                "command": "critical",
                "graph": emit_graph6(g),
                "sequence": str(seq),
                "chi": report.chi,
                "per_edge": {
                    format_edge(e): c for e, c in report.per_edge.items()
                },
                "per_vertex": {
                    str(v): c for v, c in report.per_vertex.items()
                },
                "is_critical": report.is_critical,
                "is_vertex_critical": report.is_vertex_critical,
            },
        )
        return EXIT_OK
    out.write(f"chi_S = {report.chi}\n")
    for e, c in report.per_edge.items():
        out.write(f"  G - {format_edge(e):<8} {c}\n")
    for v, c in report.per_vertex.items():
        out.write(f"  G - v{v:<7} {c}\n")
    out.write(f"critical: {report.is_critical}\n")
    out.write(f"vertex-critical: {report.is_vertex_critical}\n")
    return EXIT_OK


def cmd_double(rc: RunConfig, out: TextIO) -> int:
    g = load_graph(rc.source)  # type: ignore
    seq = rc.seq()
    if rc.extra.get("edge") is not None:
        e = parse_edge_text(rc.extra["edge"])
    elif rc.source[0] == "family":  # type: ignore
        e = distinguished_edge(rc.source[1])  # type: ignore
    else:
        raise ParameterOutOfRange("--edge is required for this graph source")
    if rc.extra.get("coloring") is not None:
        c = Coloring(int(t) for t in rc.extra["coloring"].split(","))
    else:
        h = delete_edge(g, e)
        c = chi_s(h, seq, *rc.budgets).witness
    try:
        result = double_coloring(g, e, seq, c, verbose=rc.verbose)
    except ClaimViolation as err:
        logging.error(str(err))
        out.write(f"claim violated: {err}\n")
        return EXIT_FAIL
    if rc.fmt == "records":
        _emit(
            out,
            {
                "command": "double",
                "graph": emit_graph6(g),
                "edge": list(e),
                "sequence": str(seq),
                "input": list(c),
                "output": list(result),
                "colors": result.k,
            },
        )
    else:
        out.write(f"G - e coloring: {' '.join(map(str, c))} ({c.k} colors)\n")
        out.write(
            f"G coloring:     {' '.join(map(str, result))} "
            f"({result.k} colors)\n"
        )
    return EXIT_OK


def cmd_verify(rc: RunConfig, out: TextIO) -> int:
    if rc.extra.get("list"):
        for id in check_ids():
            out.write(f"{id}\n")
        return EXIT_OK
    corpus = None
    if rc.extra.get("corpus") is not None:
        corpus = list(read_graph6_file(rc.extra["corpus"]))
    options = VerifyOptions(
        n_max=rc.n_max,  # type: ignore
        cycle_max=rc.extra["cycle_max"],
        reps=rc.extra["reps"],
        workers=rc.extra["workers"],
        node_budget=rc.node_budget,
        time_budget=rc.time_budget,
        corpus=corpus,
        verbose=rc.verbose,
    )
    ids = None if rc.extra.get("all") else rc.extra["id"]
    checks = verify_all(options, ids)
    if rc.fmt == "records":
        write_records(checks, out)
    else:
        out.write(format_table(checks) + "\n")
    counts = summarize(checks)
    if counts[Verdict.FAIL.value]:
        return EXIT_FAIL
    if counts[Verdict.SKIPPED.value]:
        return EXIT_TIMEOUT
    return EXIT_OK


def cmd_families(rc: RunConfig, out: TextIO) -> int:
    if rc.command == "families list":
        for name in FAMILY_NAMES:
            out.write(f"{name}\n")
        return EXIT_OK
    g = generate(rc.extra["spec"])
    if rc.extra["out"] == "edges":
        out.write(emit_edge_list(g))
    else:
        out.write(emit_graph6(g) + "\n")
    return EXIT_OK


def cmd_explore(rc: RunConfig, out: TextIO) -> int:
    seq = rc.seq()
    options = VerifyOptions(
        n_max=rc.n_max,  # type: ignore
        node_budget=rc.node_budget,
        time_budget=rc.time_budget,
        verbose=rc.verbose,
    )
    rows: List[Dict[str, Any]]
    if rc.command == "explore cutedge":
        rows = explore_cut_edges(rc.n_max, seq, options)  # type: ignore
    elif rc.command == "explore paths":
        rows = [
            {"n": n, "chi": chi}
            for n, chi in explore_paths(seq, rc.n_max, options)  # type: ignore
        ]
    else:
        found = find_k_critical(
            rc.n_max,  # type: ignore
            seq,
            rc.k,  # type: ignore
            node_budget=rc.node_budget,
            time_budget=rc.time_budget,
            verbose=rc.verbose,
        )
        rows = [{"graph": emit_graph6(g), "n": g.n, "m": g.m} for g in found]
    for row in rows:
        if rc.fmt == "records":
            _emit(out, row)
        else:
            out.write("  ".join(f"{k}={v}" for k, v in row.items()) + "\n")
    return EXIT_OK


_COMMANDS = {
    "chi": cmd_chi,
    "critical": cmd_critical,
    "double": cmd_double,
    "verify": cmd_verify,
    "families": cmd_families,
    "explore": cmd_explore,
}


def main(
    argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None
) -> int:
    """
    Run the command line interface.

    Args:
        argv:
            Arguments without the program name, defaulting to `sys.argv`.
        out:
            Output stream, defaulting to stdout.

    Returns:
        The exit status.
    """
    config.parse_flags_with_absl()
    if argv is None:
        argv = sys.argv[1:]
    if out is None:
        out = sys.stdout
    argv = [a for a in argv if not a.startswith("--packcrits")]
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    rc = to_run_config(args)
    logging.set_verbosity(logging.INFO if rc.verbose else logging.WARNING)
    try:
        return _COMMANDS[args.command](rc, out)
    except Timeout as e:
        out.write(f"timeout: {e}\n")
        if e.lower is not None:
            out.write(f"bounds: {e.lower} <= chi_S <= {e.upper}\n")
        return EXIT_TIMEOUT
    except (ValueError, OSError) as e:
        sys.stderr.write(f"packcrits: error: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
