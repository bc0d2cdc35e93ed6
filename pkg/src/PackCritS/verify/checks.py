# Copyright 2025 PackCritS Project Developers. See the top-level COPYRIGHT file
# for details.
#
# SPDX-License-Identifier: MIT

"""
Registered verification checks

Every check re-derives one finite consequence of a criticality result on a
bounded range of graphs, cycle lengths and sequence class representatives,
and returns a `TheoremCheck` with verdict PASS, FAIL or SKIPPED. A check is
SKIPPED instead of PASS when some decision ran out of search budget and no
mismatch was found among the remaining ones.

Checks are addressed by id:

==========================  ==============================================
`prop.2critical`            the only 2-critical graph is `K_2`
`prop.s222`                 4-vertex-critical graphs for `S_{2,2,2}`
`manycases.i` ... `.vii`    3- and 4-critical graphs of seven classes
`manycases.vertex.i`...     3- and 4-vertex-critical graphs of six classes
`smallcases.i` ... `.iii`   4-critical graphs of three classes with `s_1=1`
`cycles.small.i`, `.ii`     cycles shorter than `2 s_1 + 2`
`cycles1big.i`, `.ii`       cycles shorter than `2 s_2 + 2` when `s_1 = 1`
`cycles1small.i` ... `.iii` cycle criticality for `s_1 = 1, s_2 <= 3`
`distance.formula`          closed form of `χ_k(C_n)`
`distance.critical`         critical cycles for distance colorings
`lemma.wsets`               the endpoint partition survives edge deletion
`lemma.connected`           disjoint unions are never (vertex-)critical
`lemma.vertexcritical`      critical graphs are vertex-critical
`prop.diamcritical`         diameter-`k`-critical graphs are critical
`cor.girth`                 diameter `k` and girth `k+2` suffice
`prop.trees`                trees: critical iff vertex-critical
`edgebound.i` ... `.iii`    `χ_S(G - e)` against `χ_S(G) / 2`
`prop.cutedge`              the refined bound on cut-edges
`cor.rho`                   the refined bound for packing colorings
`construction.doubling`     the recoloring of `G - e` into `G`
`oracle.bruteforce`         search against exhaustive enumeration
`sharpness.gadgets`         exact values of the extremal constructions
`sharpness.p14`             a path whose middle edge halves `χ_S`
`sharpness.ratio`           `χ_S(G - e) / χ_S(G)` on growing gadgets
==========================  ==============================================

Example:
    >>> from PackCritS.verify.checks import VerifyOptions, verify_theorem
    >>> check = verify_theorem("manycases.i", VerifyOptions(n_max=6))
    >>> check.verdict.value
    'PASS'
"""

from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import (
    Any,
    Callable,
    Dict,
    Iterable,
    List,
    Optional,
    Sequence,
    Tuple,
)

import numpy as np

from absl import logging
from joblib import Parallel, delayed

from PackCritS._src.config import config
from PackCritS._src.search import PackingSearch
from PackCritS._src.util import auto_str
from PackCritS.canon import canonical_form
from PackCritS.critical import (
    double_coloring,
    edge_bounds,
    is_k_critical,
    is_k_vertex_critical,
    refinement_reasons,
)
from PackCritS.errors import ClaimViolation, Timeout, UnknownTheorem
from PackCritS.families import (
    distinguished_edge,
    generate,
    in_C_s4,
    is_diameter_k_critical,
    periodic_coloring,
)
from PackCritS.graph import (
    Graph,
    all_pairs_distance,
    delete_edge,
    disjoint_union,
    girth,
    is_cut_edge,
    w_partition,
)
from PackCritS.io import emit_graph6
from PackCritS.sequence import (
    PACKING,
    PackingSequence,
    distance_sequence,
    parse_pattern,
    parse_sequence,
    representatives,
)
from PackCritS.solver import (
    ChiResult,
    Coloring,
    brute_force_chi,
    chi_s,
    diameter_rule_chi,
    validate_coloring,
)
from PackCritS.verify.enumerate import (
    candidate_graphs,
    find_k_critical,
    find_k_vertex_critical,
    trees,
)

GENERIC_SEQUENCES = (
    "1,1,const",
    "1,2,const",
    "1,2,3,inc",
    "2,2,const",
    "1,3,const",
    "2,5,const",
    "3,3,const",
)


class Verdict(Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIPPED = "SKIPPED"


@auto_str
class VerifyOptions:
    """
    Bounds and budgets shared by all checks.

    Args:
        n_max:
            Largest order of swept graphs.
        cycle_max:
            Longest cycle of the cycle criticality checks.
        distance_max:
            Longest cycle of the distance coloring checks.
        tree_max:
            Largest order of the tree check.
        brute_force_max:
            Largest order compared against exhaustive enumeration.
        reps:
            `"all"` to run every class representative, `"minimal"` to run
            only the minimal one.
        workers:
            Number of joblib worker processes for graph sweeps.
        node_budget:
            Search node budget of each solver call.
        time_budget:
            Wall-clock seconds of each solver call.
        corpus:
            Graphs to sweep instead of the internal enumeration.
        verbose:
            If true, log progress and verdicts.
    """

    def __init__(
        self,
        n_max: int = 6,
        cycle_max: int = 24,
        distance_max: int = 30,
        tree_max: int = 9,
        brute_force_max: int = 6,
        reps: str = "all",
        workers: int = 1,
        node_budget: Optional[int] = None,
        time_budget: Optional[float] = None,
        corpus: Optional[List[Graph]] = None,
        verbose: bool = False,
    ):
        if n_max < 1:
            raise ValueError(f"n_max must be positive, not {n_max}")
        if reps not in ("all", "minimal"):
            raise ValueError(
                f"reps must be 'all' or 'minimal', not {reps!r}"
            )
        self.n_max = n_max
        self.cycle_max = cycle_max
        self.distance_max = distance_max
        self.tree_max = tree_max
        self.brute_force_max = brute_force_max
        self.reps = reps
        self.workers = workers
        self.node_budget = node_budget
        self.time_budget = time_budget
        self.corpus = corpus
        self.verbose = verbose

    @property
    def budgets(self) -> Tuple[Optional[int], Optional[float]]:
        return self.node_budget, self.time_budget


@auto_str
class TheoremCheck:
    """
    The outcome of one registered check.

    Args:
        id:
            The check id.
        parameters:
            The bounds the check ran with.
        representatives:
            The packing sequences the check ran on.
        expected:
            What the result predicts on the tested range.
        observed:
            What was computed.
        verdict:
            PASS, FAIL or SKIPPED.
        counterexample:
            The mismatches of a FAIL (graph6 strings, edges, colorings), or
            the budget-exhausted cases of a SKIPPED.
    """

    def __init__(
        self,
        id: str,
        parameters: Dict[str, Any],
        representatives: List[str],
        expected: Any,
        observed: Any,
        verdict: Verdict,
        counterexample: Optional[List[Dict[str, Any]]] = None,
    ):
        self.id = id
        self.parameters = parameters
        self.representatives = representatives
        self.expected = expected
        self.observed = observed
        self.verdict = verdict
        self.counterexample = counterexample

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS

    def to_record(self) -> Dict[str, Any]:
        """The check as a plain dict with a fixed key order."""
        return {
            "id": self.id,
            "verdict": self.verdict.value,
            "parameters": self.parameters,
            "representatives": self.representatives,
            "expected": self.expected,
            "observed": self.observed,
            "counterexample": self.counterexample,
        }


class CheckFn:
    """
    A registered check.

    Args:
        id:
            The check id.
        claim:
            One line stating what is verified.
        fn:
            Computes the observed outcome. It returns the parameters, the
            representatives run, the expected and observed values, the
            failures and the skipped cases.
    """

    def __init__(self, id: str, claim: str, fn: Callable):
        self.id = id
        self.claim = claim
        self._fn = fn

    def __call__(self, options: VerifyOptions) -> TheoremCheck:
        params, reps, expected, observed, failures, skipped = self._fn(
            options
        )
        if failures:
            verdict = Verdict.FAIL
            counterexample: Optional[List[Dict[str, Any]]] = failures
        elif skipped:
            verdict = Verdict.SKIPPED
            counterexample = skipped
        else:
            verdict = Verdict.PASS
            counterexample = None
        check = TheoremCheck(
            self.id,
            params,
            [str(s) for s in reps],
            expected,
            observed,
            verdict,
            counterexample,
        )
        if verdict is Verdict.FAIL:
            logging.error(
                f"{self.id} FAILED: {len(failures)} counterexamples, first "
                f"{failures[0]}"
            )
        elif options.verbose:
            logging.info(f"{self.id}: {verdict.value}")
        return check


_CHECKS: Dict[str, CheckFn] = dict()


def _register(id: str, claim: str):
    def wrap(fn):
        _CHECKS[id] = CheckFn(id, claim, fn)
        return fn

    return wrap


def check_ids() -> List[str]:
    """The registered check ids in registration order."""
    return list(_CHECKS)


def claim_of(id: str) -> str:
    """The one-line claim of a registered check."""
    return _lookup(id).claim


def _lookup(id: str) -> CheckFn:
    if id not in _CHECKS:
        raise UnknownTheorem(
            f"no check registered as {id!r}; known checks are "
            f"{', '.join(_CHECKS)}"
        )
    return _CHECKS[id]


def verify_theorem(id: str, options: Optional[VerifyOptions] = None):
    """
    Run one registered check.

    Args:
        id:
            The check id, see `check_ids()`.
        options:
            Bounds and budgets, defaulting to `VerifyOptions()`.

    Returns:
        The `TheoremCheck`.

    Raises:
        UnknownTheorem:
            If no check is registered under `id`.
    """
    check = _lookup(id)
    return check(VerifyOptions() if options is None else options)


def verify_all(
    options: Optional[VerifyOptions] = None,
    ids: Optional[Iterable[str]] = None,
) -> List[TheoremCheck]:
    """Run every registered check (or those in `ids`) in order."""
    if options is None:
        options = VerifyOptions()
    return [
        verify_theorem(id, options)
        for id in (check_ids() if ids is None else ids)
    ]


# shared helpers

_CHI_CACHE_SIZE = 1 << 12


@lru_cache(maxsize=_CHI_CACHE_SIZE)
def _chi_result(
    g: Graph,
    seq: PackingSequence,
    node_budget: Optional[int],
    time_budget: Optional[float],
) -> ChiResult:
    return chi_s(g, seq, node_budget, time_budget)


def _chi(g: Graph, seq: PackingSequence, options: VerifyOptions) -> int:
    return _chi_result(g, seq, *options.budgets).value


def _reps(
    pattern: str, k: int, options: VerifyOptions
) -> List[PackingSequence]:
    reps = representatives(parse_pattern(pattern), k)
    return reps if options.reps == "all" else reps[:1]


def _generic(options: VerifyOptions) -> List[PackingSequence]:
    return [parse_sequence(text) for text in GENERIC_SEQUENCES]


def _g6(g: Graph) -> str:
    return emit_graph6(g)


def _fan_out(
    worker: Callable, graphs: Sequence[Graph], *args
) -> Tuple[List[Dict[str, Any]], List[Dict[str, Any]], int]:
    """
    Apply `worker(g, *args)` to every graph, in joblib worker processes when
    the options (the last argument) ask for more than one.
    """
    options = args[-1]
    if options.workers == 1:
        outcomes = [worker(g, *args) for g in graphs]
    else:
        outcomes = Parallel(n_jobs=options.workers)(
            delayed(worker)(g, *args) for g in graphs
        )
    failures: List[Dict[str, Any]] = list()
    skipped: List[Dict[str, Any]] = list()
    cases = 0
    for fail, skip, count in outcomes:
        failures.extend(fail)
        skipped.extend(skip)
        cases += count
    return failures, skipped, cases


def _graphs(options: VerifyOptions, n_min: int = 1) -> List[Graph]:
    return [
        g
        for g in candidate_graphs(options.n_max, options.corpus)
        if g.n >= n_min
    ]


def _sweep_outcome(
    params: Dict[str, Any],
    seqs: List[PackingSequence],
    expected: str,
    failures: List[Dict[str, Any]],
    skipped: List[Dict[str, Any]],
    cases: int,
):
    observed = {
        "cases": cases,
        "violations": len(failures),
        "skipped": len(skipped),
    }
    return params, seqs, expected, observed, failures, skipped


# classification checks


def _cycles(lo: int, n_max: int, keep=lambda n: True) -> List[str]:
    return [f"cycle:{n}" for n in range(lo, n_max + 1) if keep(n)]


def _materialize(specs: Iterable[str], n_max: int) -> Dict[bytes, str]:
    out = dict()
    for spec in specs:
        g = generate(spec)
        if g.n <= n_max:
            out[canonical_form(g)] = spec
    return out


def _classification(
    pattern: str,
    k: int,
    expected_specs: Callable[[int, PackingSequence], List[str]],
    vertex: bool = False,
):
    finder = find_k_vertex_critical if vertex else find_k_critical

    def run(options: VerifyOptions):
        reps = _reps(pattern, k, options)
        expected: Dict[str, List[str]] = dict()
        observed: Dict[str, List[str]] = dict()
        failures: List[Dict[str, Any]] = list()
        skipped: List[Dict[str, Any]] = list()
        for seq in reps:
            timed_out: List[Graph] = list()
            found = finder(
                options.n_max,
                seq,
                k,
                corpus=options.corpus,
                skipped=timed_out,
                node_budget=options.node_budget,
                time_budget=options.time_budget,
                workers=options.workers,
                verbose=options.verbose,
            )
            want = _materialize(
                expected_specs(options.n_max, seq), options.n_max
            )
            got = {canonical_form(g): g for g in found}
            unsure = {canonical_form(g) for g in timed_out}
            expected[str(seq)] = sorted(want.values())
            observed[str(seq)] = sorted(
                want[key] if key in want else _g6(g)
                for key, g in got.items()
            )
            for key in sorted(want.keys() - got.keys()):
                entry = {"sequence": str(seq), "missing": want[key]}
                if key in unsure:
                    skipped.append(entry)
                else:
                    failures.append(entry)
            for key in sorted(got.keys() - want.keys()):
                failures.append(
                    {"sequence": str(seq), "unexpected": _g6(got[key])}
                )
            skipped.extend(
                {"sequence": str(seq), "graph": _g6(g)}
                for g in timed_out
                if canonical_form(g) not in want
            )
        params = {"n_max": options.n_max, "k": k, "pattern": pattern}
        return params, reps, expected, observed, failures, skipped

    return run


_CLASSIFICATIONS = (
    (
        "manycases.i",
        "for S_{1,1} the 3-critical graphs are the odd cycles",
        "1,1",
        3,
        lambda n, s: _cycles(3, n, lambda m: m % 2 == 1),
        False,
    ),
    (
        "manycases.ii",
        "for s_1 = 1, s_2 >= 2 the 3-critical graphs are C_3 and P_4",
        "1,>=2",
        3,
        lambda n, s: ["cycle:3", "path:4"],
        False,
    ),
    (
        "manycases.iii",
        "for s_1 >= 2 the only 3-critical graph is P_3",
        ">=2",
        3,
        lambda n, s: ["path:3"],
        False,
    ),
    (
        "manycases.iv",
        "for S_{2,2,2} the 4-critical graphs are K_{1,3} and C_n, "
        "n >= 4, n != 0 mod 3",
        "2,2,2",
        4,
        lambda n, s: ["star:3"] + _cycles(4, n, lambda m: m % 3 != 0),
        False,
    ),
    (
        "manycases.v",
        "for s_1 = s_2 = 2, s_3 >= 3 the 4-critical graphs are K_{1,3}, "
        "C_4 and P_6",
        "2,2,>=3",
        4,
        lambda n, s: ["star:3", "cycle:4", "path:6"],
        False,
    ),
    (
        "manycases.vi",
        "for s_1 = 2, s_2 >= 3 the 4-critical graphs are K_{1,3}, C_4 and "
        "P_5",
        "2,>=3",
        4,
        lambda n, s: ["star:3", "cycle:4", "path:5"],
        False,
    ),
    (
        "manycases.vii",
        "for s_1 >= 3 the 4-critical graphs are K_{1,3} and P_4",
        ">=3",
        4,
        lambda n, s: ["star:3", "path:4"],
        False,
    ),
    (
        "manycases.vertex.i",
        "for S_{1,1} the 3-vertex-critical graphs are the odd cycles",
        "1,1",
        3,
        lambda n, s: _cycles(3, n, lambda m: m % 2 == 1),
        True,
    ),
    (
        "manycases.vertex.ii",
        "for s_1 = 1, s_2 >= 2 the 3-vertex-critical graphs are C_3, C_4 "
        "and P_4",
        "1,>=2",
        3,
        lambda n, s: ["cycle:3", "cycle:4", "path:4"],
        True,
    ),
    (
        "manycases.vertex.iii",
        "for s_1 >= 2 the 3-vertex-critical graphs are C_3 and P_3",
        ">=2",
        3,
        lambda n, s: ["cycle:3", "path:3"],
        True,
    ),
    (
        "manycases.vertex.iv",
        "for s_1 = s_2 = 2, s_3 >= 3 the 4-vertex-critical graphs are "
        "K_{1,3}, C_4, Z_1, K_4 - e, K_4, P_6 and C_6",
        "2,2,>=3",
        4,
        lambda n, s: [
            "star:3",
            "cycle:4",
            "Z1",
            "complete_minus_edge:4",
            "complete:4",
            "path:6",
            "cycle:6",
        ],
        True,
    ),
    (
        "manycases.vertex.v",
        "for s_1 = 2, s_2 >= 3 the 4-vertex-critical graphs are K_{1,3}, "
        "C_4, Z_1, K_4 - e, K_4 and P_5",
        "2,>=3",
        4,
        lambda n, s: [
            "star:3",
            "cycle:4",
            "Z1",
            "complete_minus_edge:4",
            "complete:4",
            "path:5",
        ],
        True,
    ),
    (
        "manycases.vertex.vi",
        "for s_1 >= 3 the 4-vertex-critical graphs are K_{1,3}, P_4, C_4, "
        "Z_1, K_4 - e and K_4",
        ">=3",
        4,
        lambda n, s: [
            "star:3",
            "path:4",
            "cycle:4",
            "Z1",
            "complete_minus_edge:4",
            "complete:4",
        ],
        True,
    ),
    (
        "prop.s222",
        "for S_{2,2,2} the 4-vertex-critical graphs are K_{1,3}, Z_1, "
        "K_4 - e, K_4 and C_n, n >= 4, n != 0 mod 3",
        "2,2,2",
        4,
        lambda n, s: ["star:3", "Z1", "complete_minus_edge:4", "complete:4"]
        + _cycles(4, n, lambda m: m % 3 != 0),
        True,
    ),
    (
        "smallcases.i",
        "for S_{1,3,3} the 4-critical graphs are K_4, G_1, G_2, the cycles "
        "of C_{s_4} and X_{2k}, k >= 3",
        "1,3,3",
        4,
        lambda n, s: ["complete:4", "G1", "G2"]
        + _cycles(5, n, lambda m: in_C_s4(m, s.s_at(4)))
        + [f"X:{2 * j}" for j in range(3, n // 2)],
        False,
    ),
    (
        "smallcases.ii",
        "for s_1 = 1, s_2 = 3, s_3 >= 4 the 4-critical graphs are K_4, C_5, "
        "C_6, P_8 and G_1 ... G_7",
        "1,3,>=4",
        4,
        lambda n, s: ["complete:4", "cycle:5", "cycle:6", "path:8"]
        + [f"G{i}" for i in range(1, 8)],
        False,
    ),
    (
        "smallcases.iii",
        "for s_1 = 1, s_2 >= 4 the 4-critical graphs are K_4, C_5, P_6 and "
        "G_8",
        "1,>=4",
        4,
        lambda n, s: ["complete:4", "cycle:5", "path:6", "G8"],
        False,
    ),
)

for _id, _claim, _pattern, _k, _specs, _vertex in _CLASSIFICATIONS:
    _register(_id, _claim)(_classification(_pattern, _k, _specs, _vertex))


@_register("prop.2critical", "the only 2-critical graph is K_2")
def _two_critical(options: VerifyOptions):
    seqs = _generic(options)
    expected, observed = dict(), dict()
    failures: List[Dict[str, Any]] = list()
    skipped: List[Dict[str, Any]] = list()
    k2 = canonical_form(generate("complete:2"))
    for seq in seqs:
        timed_out: List[Graph] = list()
        found = find_k_critical(
            options.n_max,
            seq,
            2,
            corpus=options.corpus,
            skipped=timed_out,
            node_budget=options.node_budget,
            time_budget=options.time_budget,
            workers=options.workers,
            verbose=options.verbose,
        )
        expected[str(seq)] = ["complete:2"] if options.n_max >= 2 else []
        observed[str(seq)] = sorted(
            "complete:2" if canonical_form(g) == k2 else _g6(g)
            for g in found
        )
        if observed[str(seq)] != expected[str(seq)]:
            failures.append(
                {"sequence": str(seq), "observed": observed[str(seq)]}
            )
        skipped.extend(
            {"sequence": str(seq), "graph": _g6(g)} for g in timed_out
        )
    params = {"n_max": options.n_max, "k": 2}
    return params, seqs, expected, observed, failures, skipped


# cycle checks


def _cycle_is_critical(
    n: int, seq: PackingSequence, options: VerifyOptions
) -> bool:
    # every C_n - e is P_n
    chi_cycle = _chi(generate(f"cycle:{n}"), seq, options)
    return _chi(generate(f"path:{n}"), seq, options) < chi_cycle


def _cycle_check(
    seqs_of: Callable[[VerifyOptions], List[PackingSequence]],
    claim: Callable[[int, PackingSequence], Optional[bool]],
    description: str,
    longest: Callable[[VerifyOptions], int] = lambda o: o.cycle_max,
):
    def run(options: VerifyOptions):
        seqs = seqs_of(options)
        expected: Dict[str, List[int]] = dict()
        observed: Dict[str, List[int]] = dict()
        failures: List[Dict[str, Any]] = list()
        skipped: List[Dict[str, Any]] = list()
        if not seqs:
            skipped.append({"reason": "no sequences to check"})
        for seq in seqs:
            want, got = list(), list()
            for n in range(3, longest(options) + 1):
                predicted = claim(n, seq)
                if predicted is None:
                    continue
                try:
                    critical = _cycle_is_critical(n, seq, options)
                except Timeout:
                    skipped.append({"sequence": str(seq), "n": n})
                    continue
                if predicted:
                    want.append(n)
                if critical:
                    got.append(n)
                if critical != predicted:
                    failures.append(
                        {
                            "sequence": str(seq),
                            "n": n,
                            "expected": predicted,
                            "observed": critical,
                            "graph": _g6(generate(f"cycle:{n}")),
                        }
                    )
            expected[str(seq)] = want
            observed[str(seq)] = got
        params = {"cycle_max": longest(options), "claim": description}
        return params, seqs, expected, observed, failures, skipped

    return run


def _over_patterns(patterns: Iterable[str], k: int = 4):
    patterns = tuple(patterns)

    def seqs_of(options: VerifyOptions) -> List[PackingSequence]:
        out: List[PackingSequence] = list()
        for pattern in patterns:
            out.extend(_reps(pattern, k, options))
        return out

    return seqs_of


def _distance_sequences(options: VerifyOptions) -> List[PackingSequence]:
    return [distance_sequence(k) for k in range(1, 5)]


_register(
    "cycles.small.i",
    "C_n with n <= s_1 + 1 is not critical",
)(
    _cycle_check(
        _over_patterns(str(s1) for s1 in range(1, 6)),
        lambda n, s: False if n <= s.s_at(1) + 1 else None,
        "n <= s_1 + 1: not critical",
    )
)
_register(
    "cycles.small.ii",
    "C_n with s_1 + 2 <= n <= 2 s_1 + 1 is critical",
)(
    _cycle_check(
        _over_patterns(str(s1) for s1 in range(1, 6)),
        lambda n, s: True
        if s.s_at(1) + 2 <= n <= 2 * s.s_at(1) + 1
        else None,
        "s_1 + 2 <= n <= 2 s_1 + 1: critical",
    )
)
_register(
    "cycles1big.i",
    "for s_1 = 1 and n <= s_2 + 2, C_n is critical iff n is odd",
)(
    _cycle_check(
        _over_patterns(f"1,{s2}" for s2 in range(1, 7)),
        lambda n, s: n % 2 == 1 if n <= s.s_at(2) + 2 else None,
        "n <= s_2 + 2: critical iff n odd",
    )
)
_register(
    "cycles1big.ii",
    "for s_1 = 1 and s_2 + 3 <= n <= 2 s_2 + 1, C_n is critical",
)(
    _cycle_check(
        _over_patterns(f"1,{s2}" for s2 in range(1, 7)),
        lambda n, s: True
        if s.s_at(2) + 3 <= n <= 2 * s.s_at(2) + 1
        else None,
        "s_2 + 3 <= n <= 2 s_2 + 1: critical",
    )
)
_register(
    "cycles1small.i",
    "for S_{1,1}, C_n is critical iff n is odd",
)(
    _cycle_check(
        _over_patterns(["1,1"]),
        lambda n, s: n % 2 == 1,
        "critical iff n odd",
    )
)
_register(
    "cycles1small.ii",
    "for S_{1,2,2}, C_n is critical iff n is 3 or 5",
)(
    _cycle_check(
        _over_patterns(["1,2,2"]),
        lambda n, s: n in (3, 5),
        "critical iff n in {3, 5}",
    )
)
_register(
    "cycles1small.iii",
    "for s_1 = 1, s_2 >= 2, s_3 = 3, C_n is critical iff n != 0 mod 4",
)(
    _cycle_check(
        _over_patterns(["1,>=2,3"]),
        lambda n, s: n % 4 != 0,
        "critical iff n != 0 mod 4",
    )
)
_register(
    "distance.critical",
    "for S = (k, k, ...), C_n with n >= k + 1 is critical iff "
    "n != 0 mod k + 1",
)(
    _cycle_check(
        _distance_sequences,
        lambda n, s: n % (s.s_at(1) + 1) != 0
        if n >= s.s_at(1) + 1
        else None,
        "critical iff n != 0 mod k + 1",
        longest=lambda o: o.distance_max,
    )
)


def distance_chi_cycle(n: int, k: int) -> int:
    """
    The closed form of `χ_k(C_n)` for `n >= k + 1`: writing
    `n = l (k + 1) + r` with `0 <= r <= k`, it is `k + 1 + ceil(r / l)`.

    Example:
        >>> distance_chi_cycle(7, 2)
        4
    """
    if n < k + 1:
        raise ValueError(f"closed form needs n >= k + 1, not n={n}, k={k}")
    ell, r = divmod(n, k + 1)
    return k + 1 + -(-r // ell)


@_register(
    "distance.formula",
    "chi_k(C_n) = k + 1 + ceil(r / l) where n = l (k + 1) + r",
)
def _distance_formula(options: VerifyOptions):
    seqs = _distance_sequences(options)
    expected, observed = dict(), dict()
    failures: List[Dict[str, Any]] = list()
    skipped: List[Dict[str, Any]] = list()
    for seq in seqs:
        k = seq.s_at(1)
        want, got = dict(), dict()
        for n in range(max(3, k + 1), options.distance_max + 1):
            want[n] = distance_chi_cycle(n, k)
            cycle = generate(f"cycle:{n}")
            if n % (k + 1) == 0:
                witness = periodic_coloring(n, range(1, k + 2))
                if not validate_coloring(cycle, seq, witness):
                    failures.append(
                        {
                            "sequence": str(seq),
                            "n": n,
                            "periodic_coloring": list(witness),
                        }
                    )
            try:
                got[n] = _chi(cycle, seq, options)
            except Timeout:
                skipped.append({"sequence": str(seq), "n": n})
                continue
            if got[n] != want[n]:
                failures.append(
                    {
                        "sequence": str(seq),
                        "n": n,
                        "expected": want[n],
                        "observed": got[n],
                    }
                )
        expected[str(seq)] = want
        observed[str(seq)] = got
    params = {"distance_max": options.distance_max}
    return params, seqs, expected, observed, failures, skipped


# graph sweeps


def _edge_entry(
    g: Graph, e, seq: Optional[PackingSequence] = None, **extra
) -> Dict[str, Any]:
    entry: Dict[str, Any] = {"graph": _g6(g), "edge": list(e)}
    if seq is not None:
        entry["sequence"] = str(seq)
    entry.update(extra)
    return entry


def _wsets_worker(g: Graph, options: VerifyOptions):
    failures = list()
    dm = all_pairs_distance(g)
    for e in g.sorted_edges():
        before = w_partition(g, e, dm=dm)
        after = w_partition(delete_edge(g, e), e, require_edge=False)
        if before.w_uv != after.w_uv or before.w_vu != after.w_vu:
            failures.append(
                _edge_entry(
                    g,
                    e,
                    w_uv=[sorted(before.w_uv), sorted(after.w_uv)],
                    w_vu=[sorted(before.w_vu), sorted(after.w_vu)],
                )
            )
    return failures, [], g.m


@_register(
    "lemma.wsets",
    "the sets of vertices closer to u than to v, and to v than to u, "
    "are the same in G and G - uv",
)
def _wsets(options: VerifyOptions):
    failures, skipped, cases = _fan_out(
        _wsets_worker, _graphs(options, 2), options
    )
    return _sweep_outcome(
        {"n_max": options.n_max},
        [],
        "no edge changes its endpoint partition",
        failures,
        skipped,
        cases,
    )


def _never_critical_worker(
    g: Graph, seqs: List[PackingSequence], options: VerifyOptions
):
    failures, skipped = list(), list()
    for seq in seqs:
        try:
            chi = _chi(g, seq, options)
            critical = is_k_critical(g, seq, chi, *options.budgets)
            vertex = is_k_vertex_critical(g, seq, chi, *options.budgets)
        except Timeout:
            skipped.append({"graph": _g6(g), "sequence": str(seq)})
            continue
        if critical or vertex:
            failures.append(
                {
                    "graph": _g6(g),
                    "sequence": str(seq),
                    "critical": critical,
                    "vertex_critical": vertex,
                }
            )
    return failures, skipped, len(seqs)


@_register(
    "lemma.connected",
    "disjoint unions are neither critical nor vertex-critical",
)
def _connected(options: VerifyOptions):
    seqs = _generic(options)
    parts = _graphs(options)
    unions = [
        disjoint_union(a, b)
        for i, a in enumerate(parts)
        for b in parts[i:]
        if a.n + b.n <= options.n_max
    ]
    failures, skipped, cases = _fan_out(
        _never_critical_worker, unions, seqs, options
    )
    return _sweep_outcome(
        {"n_max": options.n_max},
        seqs,
        "no disjoint union is critical or vertex-critical",
        failures,
        skipped,
        cases,
    )


def _vertex_critical_worker(
    g: Graph, seqs: List[PackingSequence], options: VerifyOptions
):
    failures, skipped = list(), list()
    cases = 0
    for seq in seqs:
        try:
            chi = _chi(g, seq, options)
            if not is_k_critical(g, seq, chi, *options.budgets):
                continue
            vertex = is_k_vertex_critical(g, seq, chi, *options.budgets)
        except Timeout:
            skipped.append({"graph": _g6(g), "sequence": str(seq)})
            continue
        cases += 1
        if not vertex:
            failures.append({"graph": _g6(g), "sequence": str(seq)})
    return failures, skipped, cases


@_register(
    "lemma.vertexcritical",
    "every critical graph is vertex-critical",
)
def _vertex_critical(options: VerifyOptions):
    seqs = _generic(options)
    failures, skipped, cases = _fan_out(
        _vertex_critical_worker, _graphs(options), seqs, options
    )
    return _sweep_outcome(
        {"n_max": options.n_max},
        seqs,
        "every critical graph found is vertex-critical",
        failures,
        skipped,
        cases,
    )


def _tree_worker(
    t: Graph, seqs: List[PackingSequence], options: VerifyOptions
):
    failures, skipped = list(), list()
    for seq in seqs:
        try:
            chi = _chi(t, seq, options)
            critical = is_k_critical(t, seq, chi, *options.budgets)
            vertex = is_k_vertex_critical(t, seq, chi, *options.budgets)
        except Timeout:
            skipped.append({"graph": _g6(t), "sequence": str(seq)})
            continue
        if critical != vertex:
            failures.append(
                {
                    "graph": _g6(t),
                    "sequence": str(seq),
                    "critical": critical,
                    "vertex_critical": vertex,
                }
            )
    return failures, skipped, len(seqs)


@_register("prop.trees", "a tree is critical iff it is vertex-critical")
def _trees(options: VerifyOptions):
    seqs = _generic(options)
    forest = [t for n in range(1, options.tree_max + 1) for t in trees(n)]
    failures, skipped, cases = _fan_out(_tree_worker, forest, seqs, options)
    return _sweep_outcome(
        {"tree_max": options.tree_max},
        seqs,
        "criticality and vertex-criticality agree on every tree",
        failures,
        skipped,
        cases,
    )


def _diameter_worker(g: Graph, girth_only: bool, options: VerifyOptions):
    failures, skipped = list(), list()
    k = all_pairs_distance(g).diameter()
    if girth_only:
        if girth(g) < k + 2:  # type: ignore
            return failures, skipped, 0
        if not is_diameter_k_critical(g, k):  # type: ignore
            failures.append({"graph": _g6(g), "diameter_critical": False})
            return failures, skipped, 1
    elif not is_diameter_k_critical(g, k):  # type: ignore
        return failures, skipped, 0
    seqs = _reps(str(k), 4, options)
    for seq in seqs:
        try:
            critical = is_k_critical(g, seq, g.n, *options.budgets)
        except Timeout:
            skipped.append({"graph": _g6(g), "sequence": str(seq)})
            continue
        if not critical:
            failures.append({"graph": _g6(g), "sequence": str(seq)})
    return failures, skipped, 1


@_register(
    "prop.diamcritical",
    "every diameter-k-critical graph is critical when s_1 = k",
)
def _diameter_critical(options: VerifyOptions):
    failures, skipped, cases = _fan_out(
        _diameter_worker, _graphs(options, 2), False, options
    )
    return _sweep_outcome(
        {"n_max": options.n_max, "sequences": "representatives of s_1 = k"},
        [],
        "every diameter-k-critical graph is critical",
        failures,
        skipped,
        cases,
    )


@_register(
    "cor.girth",
    "diameter k and girth at least k + 2 make a graph diameter-k-critical "
    "and critical when s_1 = k",
)
def _girth(options: VerifyOptions):
    failures, skipped, cases = _fan_out(
        _diameter_worker, _graphs(options, 2), True, options
    )
    return _sweep_outcome(
        {"n_max": options.n_max, "sequences": "representatives of s_1 = k"},
        [],
        "every such graph is diameter-k-critical and critical",
        failures,
        skipped,
        cases,
    )


def _edge_bound_worker(
    g: Graph,
    seqs: List[PackingSequence],
    reason: Optional[str],
    options: VerifyOptions,
):
    failures, skipped = list(), list()
    cases = 0
    for seq in seqs:
        try:
            bounds = edge_bounds(
                g, seq, chi_of=lambda h: _chi(h, seq, options)
            )
        except Timeout:
            skipped.append({"graph": _g6(g), "sequence": str(seq)})
            continue
        for b in bounds:
            if reason is not None and reason not in b.reasons:
                continue
            cases += 1
            if not b.holds:
                failures.append(
                    _edge_entry(
                        g,
                        b.edge,
                        seq,
                        chi=b.chi,
                        chi_minus=b.chi_minus,
                        reasons=list(b.reasons),
                    )
                )
    return failures, skipped, cases


def _edge_bound_check(
    reason: Optional[str],
    expected: str,
    seqs_of: Callable[[VerifyOptions], List[PackingSequence]] = _generic,
    n_min: int = 2,
):
    def run(options: VerifyOptions):
        seqs = seqs_of(options)
        failures, skipped, cases = _fan_out(
            _edge_bound_worker, _graphs(options, n_min), seqs, reason, options
        )
        return _sweep_outcome(
            {"n_max": options.n_max},
            seqs,
            expected,
            failures,
            skipped,
            cases,
        )

    return run


_register("edgebound.i", "chi_S(G - e) >= chi_S(G) / 2")(
    _edge_bound_check(
        None,
        "2 chi_S(G - e) >= chi_S(G) on every edge, plus one where a "
        "refinement applies",
    )
)
_register(
    "edgebound.ii",
    "chi_S(G - e) >= (chi_S(G) + 1) / 2 when s_1 = 1, s_2 <= 2 and some "
    "component has three vertices",
)(
    _edge_bound_check(
        "small", "2 chi_S(G - e) >= chi_S(G) + 1 where the hypothesis holds"
    )
)
_register(
    "edgebound.iii",
    "chi_S(G - e) >= (chi_S(G) + 1) / 2 when s_1 = s_2 = s_3 = 2 and "
    "chi_S(G - e) >= 3",
)(
    _edge_bound_check(
        "s222",
        "2 chi_S(G - e) >= chi_S(G) + 1 where the hypothesis holds",
        lambda o: _generic(o) + _reps("2,2,2", 4, o),
    )
)
_register(
    "prop.cutedge",
    "chi_S(G - e) >= (chi_S(G) + 1) / 2 for a cut-edge e when s_2 <= 2 "
    "and chi_S(G - e) >= 2",
)(
    _edge_bound_check(
        "cut", "2 chi_S(G - e) >= chi_S(G) + 1 on qualifying cut-edges"
    )
)
_register(
    "cor.rho",
    "chi_rho(G - e) >= (chi_rho(G) + 1) / 2 on connected graphs with at "
    "least three vertices",
)(
    _edge_bound_check(
        "small",
        "2 chi_rho(G - e) >= chi_rho(G) + 1 on every edge",
        lambda o: [PACKING],
        n_min=3,
    )
)


_SHUFFLES = 3
_SHUFFLE_SEED = 0


def _doubling_inputs(
    h: Graph,
    seq: PackingSequence,
    optimal: Coloring,
    rng: np.random.Generator,
) -> List[Coloring]:
    """
    Colorings of `h` to double: an optimal one, first-fit in search order,
    and first-fit over `_SHUFFLES` random vertex orders.
    """
    search = PackingSearch(h, seq)
    out = [optimal, Coloring(search.first_fit())]
    for _ in range(_SHUFFLES):
        order = [int(v) for v in rng.permutation(h.n)]
        out.append(Coloring(search.first_fit(order)))
    return out


def _doubling_worker(
    g: Graph, seqs: List[PackingSequence], options: VerifyOptions
):
    failures, skipped = list(), list()
    cases = 0
    rng = np.random.default_rng(_SHUFFLE_SEED)
    for seq in seqs:
        for e in g.sorted_edges():
            h = delete_edge(g, e)
            try:
                optimal = _chi_result(h, seq, *options.budgets)
            except Timeout:
                skipped.append(_edge_entry(g, e, seq))
                continue
            reasons = refinement_reasons(g, e, seq, optimal.value)
            for c in _doubling_inputs(h, seq, optimal.witness, rng):
                cases += 1
                try:
                    out = double_coloring(g, e, seq, c, reasons=reasons)
                except ClaimViolation as err:
                    failures.append(
                        _edge_entry(
                            g,
                            e,
                            seq,
                            coloring=list(c),
                            claim_violation=str(err),
                        )
                    )
                    continue
                limit = 2 * c.k - (1 if reasons else 0)
                if out.k > limit or not validate_coloring(g, seq, out):
                    failures.append(
                        _edge_entry(
                            g,
                            e,
                            seq,
                            coloring=list(c),
                            output=list(out),
                            limit=limit,
                        )
                    )
    return failures, skipped, cases


@_register(
    "construction.doubling",
    "recoloring one cover vertex per problematic color turns a k'-coloring "
    "of G - e into a valid coloring of G with at most 2k' colors",
)
def _doubling(options: VerifyOptions):
    seqs = _generic(options)
    failures, skipped, cases = _fan_out(
        _doubling_worker, _graphs(options, 2), seqs, options
    )
    return _sweep_outcome(
        {
            "n_max": options.n_max,
            "colorings": [
                "optimal",
                "first-fit",
                f"{_SHUFFLES} shuffled first-fit",
            ],
        },
        seqs,
        "valid output with at most 2k' colors, 2k' - 1 where a refined "
        "bound applies",
        failures,
        skipped,
        cases,
    )


def _oracle_worker(
    g: Graph, seqs: List[PackingSequence], options: VerifyOptions
):
    failures, skipped = list(), list()
    for seq in seqs:
        try:
            chi = _chi(g, seq, options)
        except Timeout:
            skipped.append({"graph": _g6(g), "sequence": str(seq)})
            continue
        brute = brute_force_chi(g, seq)
        rule = diameter_rule_chi(g, seq)
        if chi != brute or (rule is not None and rule != chi):
            failures.append(
                {
                    "graph": _g6(g),
                    "sequence": str(seq),
                    "chi": chi,
                    "brute_force": brute,
                    "diameter_rule": rule,
                }
            )
    return failures, skipped, len(seqs)


@_register(
    "oracle.bruteforce",
    "the exact search agrees with exhaustive enumeration",
)
def _oracle(options: VerifyOptions):
    seqs = _generic(options)
    n_max = min(
        options.n_max, options.brute_force_max, config.state.brute_force_limit
    )
    graphs = [g for g in _graphs(options) if g.n <= n_max]
    failures, skipped, cases = _fan_out(_oracle_worker, graphs, seqs, options)
    return _sweep_outcome(
        {"n_max": n_max},
        seqs,
        "chi_s equals brute_force_chi (and the diameter rule where it "
        "applies)",
        failures,
        skipped,
        cases,
    )


# extremal constructions

_GADGETS = (
    ("star_bridge:3", "1,3,const", None, 4, 2),
    ("star_bridge:4", "1,3,const", None, 4, 2),
    ("clique_path:2", "2,5,const", None, 6, 3),
    ("clique_path:3", "2,5,const", None, 8, 4),
    ("universal_double:complete:3", "3,3,const", None, 6, 3),
    ("universal_double:complete:4", "3,3,const", None, 8, 4),
    ("non_cut:complete:3", "3,3,const", None, 8, 5),
    ("center_bridge:3", "1,2,const", None, 3, 2),
    ("cycle:5", "1,1,const", (0, 1), 3, 2),
    ("cycle:7", "1,1,const", (0, 1), 3, 2),
    ("path:14", "2,3,11,const", None, 8, 4),
    ("path:14", "2,3,11,inc", None, 8, 4),
)


def _gadget_values(
    spec: str, seq: PackingSequence, edge, options: VerifyOptions
) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    g = generate(spec)
    e = distinguished_edge(spec) if edge is None else edge
    return e, (_chi(g, seq, options), _chi(delete_edge(g, e), seq, options))


def _gadget_check(rows):
    def run(options: VerifyOptions):
        seqs: List[PackingSequence] = list()
        expected, observed = dict(), dict()
        failures: List[Dict[str, Any]] = list()
        skipped: List[Dict[str, Any]] = list()
        for spec, text, edge, chi, chi_minus in rows:
            seq = parse_sequence(text)
            if seq not in seqs:
                seqs.append(seq)
            key = f"{spec} {text}"
            expected[key] = [chi, chi_minus]
            try:
                e, got = _gadget_values(spec, seq, edge, options)
            except Timeout:
                skipped.append({"family": spec, "sequence": text})
                continue
            observed[key] = list(got)
            if got != (chi, chi_minus):
                failures.append(
                    {
                        "family": spec,
                        "graph": _g6(generate(spec)),
                        "edge": list(e),
                        "sequence": text,
                        "expected": [chi, chi_minus],
                        "observed": list(got),
                    }
                )
        return {}, seqs, expected, observed, failures, skipped

    return run


_register(
    "sharpness.gadgets",
    "the extremal constructions attain their stated chi_S(G) and "
    "chi_S(G - e)",
)(_gadget_check([row for row in _GADGETS if row[0] != "path:14"]))
_register(
    "sharpness.p14",
    "chi_S(P_14) = 8 and chi_S(P_14 - e) = 4 for the middle edge when "
    "S = (2, 3, 11, ...)",
)(_gadget_check([row for row in _GADGETS if row[0] == "path:14"]))


@_register(
    "sharpness.ratio",
    "chi_S(G - e) / chi_S(G) decreases strictly towards 1/2 on the non-cut "
    "gadget and equals 1/2 on the universal double",
)
def _ratio(options: VerifyOptions):
    seq = parse_sequence("3,3,const")
    expected: Dict[str, str] = dict()
    observed: Dict[str, str] = dict()
    failures: List[Dict[str, Any]] = list()
    skipped: List[Dict[str, Any]] = list()
    previous: Optional[Fraction] = None
    for h in (3, 4, 5):
        for family, want in (
            ("non_cut", Fraction(h + 2, 2 * h + 2)),
            ("universal_double", Fraction(1, 2)),
        ):
            spec = f"{family}:complete:{h}"
            expected[spec] = str(want)
            try:
                _, (chi, chi_minus) = _gadget_values(spec, seq, None, options)
            except Timeout:
                skipped.append({"family": spec, "sequence": str(seq)})
                continue
            ratio = Fraction(chi_minus, chi)
            observed[spec] = str(ratio)
            if ratio != want:
                failures.append(
                    {
                        "family": spec,
                        "expected": str(want),
                        "ratio": str(ratio),
                    }
                )
            if family == "non_cut":
                if previous is not None and not ratio < previous:
                    failures.append(
                        {"family": spec, "not_decreasing": str(ratio)}
                    )
                previous = ratio
    params = {"hosts": ["complete:3", "complete:4", "complete:5"]}
    return params, [seq], expected, observed, failures, skipped


# exploration of open questions, no expected answers


def explore_cut_edges(
    n_max: int,
    seq: PackingSequence,
    options: Optional[VerifyOptions] = None,
) -> List[Dict[str, Any]]:
    """
    Cut-edges `e` with `χ_S(G - e) >= 2` and `2 χ_S(G - e) < χ_S(G) + 1`
    over the connected graphs with at most `n_max` vertices.

    Raises:
        Timeout:
            If some chromatic number cannot be computed within budget.
    """
    if options is None:
        options = VerifyOptions(n_max=n_max)
    found = list()
    for g in candidate_graphs(n_max, options.corpus):
        if g.n < 2:
            continue
        chi = _chi(g, seq, options)
        for e in g.sorted_edges():
            chi_minus = _chi(delete_edge(g, e), seq, options)
            if chi_minus < 2 or 2 * chi_minus >= chi + 1:
                continue
            if not is_cut_edge(g, e):
                continue
            found.append(_edge_entry(g, e, seq, chi=chi, chi_minus=chi_minus))
    return found


def explore_paths(
    seq: PackingSequence,
    n_max: int,
    options: Optional[VerifyOptions] = None,
) -> List[Tuple[int, int]]:
    """
    The table `(n, χ_S(P_n))` for `n = 1..n_max`.

    Example:
        >>> from PackCritS.sequence import parse_sequence
        >>> explore_paths(parse_sequence("1,inc"), 4)
        [(1, 1), (2, 2), (3, 2), (4, 3)]
    """
    if options is None:
        options = VerifyOptions()
    return [
        (n, _chi(generate(f"path:{n}"), seq, options))
        for n in range(1, n_max + 1)
    ]
