# Copyright 2025 PackCritS Project Developers. See the top-level COPYRIGHT file
# for details.
#
# SPDX-License-Identifier: MIT

"""
Criticality and the edge-removal recoloring

A graph is χ_S-critical if every proper subgraph has a smaller S-packing
chromatic number, and χ_S-vertex-critical if deleting any single vertex lowers
it. `is_critical` reports both verdicts together with the chromatic number of
every single-edge and single-vertex deletion.

`double_coloring` turns a coloring `c` of `G - e` into a coloring of `G`.
Pairs of equally colored vertices that come too close once `e` is restored
are problematic. All problematic pairs of one color share a vertex, and
recoloring one such cover vertex per color with a fresh unique color repairs
the coloring with at most twice the original number of colors.
`check_edge_bound` verifies the resulting lower bound on `χ_S(G - e)` and
its refinements on every edge of a graph.
"""

from typing import Callable, Dict, List, NamedTuple, Optional, Sequence, Tuple

from absl import logging

from PackCritS._src.util import auto_str
from PackCritS.errors import (
    ClaimViolation,
    InvalidInputColoring,
    MissingEdge,
    PartialColoring,
    Timeout,
)
from PackCritS.graph import (
    DistanceMatrix,
    Edge,
    Graph,
    all_pairs_distance,
    components,
    delete_edge,
    delete_vertex,
    isolated_vertices,
    is_cut_edge,
)
from PackCritS.sequence import PackingSequence
from PackCritS.solver import (
    Coloring,
    chi_s,
    is_k_colorable,
    validate_coloring,
)


@auto_str
class CriticalityReport:
    """
    Chromatic numbers of all single-edge and single-vertex deletions.

    Args:
        chi:
            The S-packing chromatic number of the graph, or None if it could
            not be computed within budget.
        per_edge:
            Maps each edge `e` to `χ_S(G - e)`.
        per_vertex:
            Maps each vertex `v` to `χ_S(G - v)`.
        is_critical:
            The criticality verdict, or None for a partial report.
        is_vertex_critical:
            The vertex-criticality verdict, or None for a partial report.
    """

    def __init__(
        self,
        chi: Optional[int],
        per_edge: Dict[Edge, int],
        per_vertex: Dict[int, int],
        is_critical: Optional[bool],
        is_vertex_critical: Optional[bool],
    ):
        self.chi = chi
        self.per_edge = per_edge
        self.per_vertex = per_vertex
        self.is_critical = is_critical
        self.is_vertex_critical = is_vertex_critical

    @property
    def complete(self) -> bool:
        return self.is_critical is not None


def is_critical(
    g: Graph,
    seq: PackingSequence,
    node_budget: Optional[int] = None,
    time_budget: Optional[float] = None,
    verbose: bool = False,
) -> CriticalityReport:
    """
    Decide χ_S-criticality and χ_S-vertex-criticality of `g`.

    `K_1` is critical. A graph with an isolated vertex and at least two
    vertices is neither critical nor vertex-critical, and its deletion tables
    are left empty. Otherwise the graph is critical iff every edge deletion
    lowers `χ_S`.

    Example:
        >>> from PackCritS.families import generate
        >>> from PackCritS.sequence import parse_sequence
        >>> seq = parse_sequence("2,const")
        >>> report = is_critical(generate("cycle:4"), seq)
        >>> report.chi, report.is_critical
        (4, True)

    Args:
        g:
            The graph.
        seq:
            The packing sequence.
        node_budget:
            Search node budget of each individual `chi_s` call.
        time_budget:
            Wall-clock seconds of each individual `chi_s` call.
        verbose:
            If true, log every deletion's chromatic number.

    Returns:
        The report.

    Raises:
        Timeout:
            If some chromatic number cannot be computed within budget. The
            exception's `partial` holds the report computed so far.
    """
    if g.n == 1:
        return CriticalityReport(1, dict(), dict(), True, True)
    report = CriticalityReport(None, dict(), dict(), None, None)

    def solve(h: Graph) -> int:
        try:
            return chi_s(h, seq, node_budget, time_budget).value
        except Timeout as e:
            raise Timeout(
                str(e), e.lower, e.upper, e.nodes, partial=report
            ) from e

    report.chi = solve(g)
    if isolated_vertices(g):
        report.is_critical = False
        report.is_vertex_critical = False
        return report
    for e in g.sorted_edges():
        report.per_edge[e] = solve(delete_edge(g, e))
        if verbose:
            logging.info(f"chi(G - {e}) = {report.per_edge[e]}")
    for v in g.vertices():
        report.per_vertex[v] = solve(delete_vertex(g, v))
        if verbose:
            logging.info(f"chi(G - {v}) = {report.per_vertex[v]}")
    report.is_critical = all(c < report.chi for c in report.per_edge.values())
    report.is_vertex_critical = all(
        c < report.chi for c in report.per_vertex.values()
    )
    return report


def is_vertex_critical(
    g: Graph,
    seq: PackingSequence,
    node_budget: Optional[int] = None,
    time_budget: Optional[float] = None,
) -> bool:
    """
    Whether deleting any single vertex lowers `χ_S(g)`.

    `K_1` counts as vertex-critical.

    Raises:
        Timeout:
            If some chromatic number cannot be computed within budget.
    """
    if g.n == 1:
        return True
    chi = chi_s(g, seq, node_budget, time_budget).value
    return is_k_vertex_critical(g, seq, chi, node_budget, time_budget)


def _has_chi(
    g: Graph,
    seq: PackingSequence,
    k: int,
    node_budget: Optional[int],
    time_budget: Optional[float],
) -> bool:
    if is_k_colorable(g, seq, k, node_budget, time_budget) is None:
        return False
    if k == 1:
        return True
    return is_k_colorable(g, seq, k - 1, node_budget, time_budget) is None


def is_k_critical(
    g: Graph,
    seq: PackingSequence,
    k: int,
    node_budget: Optional[int] = None,
    time_budget: Optional[float] = None,
) -> bool:
    """
    Whether `g` is χ_S-critical with `χ_S(g) = k`.

    Only asks whether `G - e` is `(k-1)`-colorable for each edge and stops at
    the first edge that is not.

    Raises:
        Timeout:
            If a decision cannot be made within budget.
    """
    if g.n == 1:
        return k == 1
    if isolated_vertices(g) or k < 2:
        return False
    if not _has_chi(g, seq, k, node_budget, time_budget):
        return False
    for e in g.sorted_edges():
        h = delete_edge(g, e)
        if is_k_colorable(h, seq, k - 1, node_budget, time_budget) is None:
            return False
    return True


def is_k_vertex_critical(
    g: Graph,
    seq: PackingSequence,
    k: int,
    node_budget: Optional[int] = None,
    time_budget: Optional[float] = None,
) -> bool:
    """
    Whether `g` is χ_S-vertex-critical with `χ_S(g) = k`.

    Raises:
        Timeout:
            If a decision cannot be made within budget.
    """
    if g.n == 1:
        return k == 1
    if isolated_vertices(g) or k < 2:
        return False
    if not _has_chi(g, seq, k, node_budget, time_budget):
        return False
    for v in g.vertices():
        h = delete_vertex(g, v)
        if is_k_colorable(h, seq, k - 1, node_budget, time_budget) is None:
            return False
    return True


class ProblematicPairs:
    """
    Equally colored vertex pairs of a coloring of `G - e` that are too close
    in `G`, grouped by color.

    Args:
        by_color:
            Maps each color to its sorted list of problematic pairs. Colors
            without problematic pairs are omitted.
    """

    def __init__(self, by_color: Dict[int, List[Edge]]):
        self.by_color = {t: list(ps) for t, ps in by_color.items() if ps}

    def colors(self) -> List[int]:
        return sorted(self.by_color)

    def __getitem__(self, t: int) -> List[Edge]:
        return self.by_color.get(t, [])

    def __len__(self) -> int:
        return sum(len(ps) for ps in self.by_color.values())

    def is_empty(self) -> bool:
        return len(self.by_color) == 0

    def __repr__(self) -> str:
        return f"ProblematicPairs({self.by_color})"


def _check_input_coloring(
    g: Graph, e: Sequence[int], seq: PackingSequence, c: Coloring
) -> Graph:
    u, v = int(e[0]), int(e[1])
    if not g.has_edge(u, v):
        raise MissingEdge(f"{(u, v)} is not an edge of {g}")
    h = delete_edge(g, (u, v))
    try:
        valid = validate_coloring(h, seq, c)
    except PartialColoring as err:
        raise InvalidInputColoring(str(err)) from err
    if not valid:
        raise InvalidInputColoring(
            f"{c} is not an S-packing coloring of G - {(u, v)} for {seq}"
        )
    return h


def problematic_pairs(
    g: Graph,
    e: Sequence[int],
    seq: PackingSequence,
    c: Coloring,
    dm: Optional[DistanceMatrix] = None,
) -> ProblematicPairs:
    """
    The pairs `{x, y}` with `c(x) = c(y) = t` and `d_G(x, y) <= s_t`.

    Args:
        g:
            The graph `G`.
        e:
            An edge of `G`.
        seq:
            The packing sequence.
        c:
            An S-packing coloring of `G - e`.
        dm:
            Optional precomputed distance matrix of `G`.

    Raises:
        MissingEdge:
            If `e` is not an edge of `g`.
        InvalidInputColoring:
            If `c` is not an S-packing coloring of `G - e`.
    """
    _check_input_coloring(g, e, seq, c)
    if dm is None:
        dm = all_pairs_distance(g)
    by_color: Dict[int, List[Edge]] = dict()
    for t, vertices in c.classes().items():
        s_t = seq.s_at(t)
        pairs = [
            (x, y)
            for i, x in enumerate(vertices)
            for y in vertices[i + 1:]
            if dm.array[x, y] >= 0 and dm.array[x, y] <= s_t
        ]
        if pairs:
            by_color[t] = pairs
    return ProblematicPairs(by_color)


def cover_vertex(pairs: Sequence[Sequence[int]]) -> Optional[int]:
    """
    The smallest vertex lying in every pair, or None if there is none.

    Example:
        >>> cover_vertex([(0, 1), (0, 2)])
        0
        >>> cover_vertex([(0, 1), (2, 3)]) is None
        True
    """
    if len(pairs) == 0:
        return None
    common = set(pairs[0])
    for p in pairs[1:]:
        common &= set(p)
    return min(common) if common else None


def _switch_cut_edge_colors(
    g: Graph, e: Edge, seq: PackingSequence, c: Coloring
) -> Coloring:
    u, v = e
    if not (seq.s_at(1) == seq.s_at(2) == 2):
        return c
    if {c[u], c[v]} != {1, 2} or not is_cut_edge(g, e):
        return c
    side = next(comp for comp in components(delete_edge(g, e)) if v in comp)
    swap = {1: 2, 2: 1}
    return Coloring(
        swap.get(col, col) if x in side else col for x, col in enumerate(c)
    )


def double_coloring(
    g: Graph,
    e: Sequence[int],
    seq: PackingSequence,
    c: Coloring,
    reasons: Sequence[str] = (),
    verbose: bool = False,
) -> Coloring:
    """
    Extend an S-packing coloring of `G - e` to one of `G`.

    For every color `t` with problematic pairs, one vertex covering all of
    them (the smallest such) is moved to a fresh color `k' + 1, k' + 2, ...`
    where `k'` is the largest color of `c`. Colors are processed in
    increasing order. When `s_1 = s_2 = 2`, `e` is a cut-edge and its
    endpoints carry colors 1 and 2, colors 1 and 2 are first exchanged on
    the side of `e` containing its second endpoint.

    Example:
        >>> from PackCritS.families import generate, distinguished_edge
        >>> from PackCritS.sequence import parse_sequence
        >>> g = generate("star_bridge:3")
        >>> e = distinguished_edge("star_bridge:3")
        >>> c = Coloring([2, 1, 1, 1, 2, 1, 1, 1])
        >>> double_coloring(g, e, parse_sequence("1,3,const"), c).k
        4

    Args:
        g:
            The graph `G`.
        e:
            An edge of `G`.
        seq:
            The packing sequence.
        c:
            An S-packing coloring of `G - e`.
        reasons:
            Refinement hypotheses holding for `e`, see `refinement_reasons`.
            For each one, some color among its candidates must have no
            problematic pair, which keeps the output within `2k' - 1`
            colors.
        verbose:
            If true, log the problematic pairs and the chosen covers.

    Returns:
        A valid S-packing coloring of `G` using at most `k' + |Z|` colors.

    Raises:
        MissingEdge:
            If `e` is not an edge of `g`.
        InvalidInputColoring:
            If `c` is not an S-packing coloring of `G - e`.
        ClaimViolation:
            If some color's problematic pairs have no common vertex, a
            refinement hypothesis in `reasons` leaves no problem-free
            color, or the repaired coloring fails validation.
    """
    edge: Edge = (int(e[0]), int(e[1]))
    _check_input_coloring(g, edge, seq, c)
    c = _switch_cut_edge_colors(g, edge, seq, c)
    dm = all_pairs_distance(g)
    pairs = problematic_pairs(g, edge, seq, c, dm=dm)
    for reason in reasons:
        candidates = [t for t in FREE_COLOR_CANDIDATES[reason] if t <= c.k]
        if problem_free_color(pairs, candidates) is None:
            logging.error(
                f"{reason}: every color of {candidates} has problematic "
                f"pairs on {g} minus {edge}"
            )
            raise ClaimViolation(
                0,
                [],
                message=f"{reason}: no problem-free color among "
                f"{candidates}, problematic pairs {pairs}",
            )
    assignment = list(c)
    fresh = c.k
    for t in pairs.colors():
        z = cover_vertex(pairs[t])
        if z is None:
            logging.error(
                f"problematic pairs of color {t} on {g} minus {edge} share "
                f"no vertex: {pairs[t]}"
            )
            raise ClaimViolation(t, pairs[t])
        fresh += 1
        assignment[z] = fresh
        if verbose:
            logging.info(
                f"color {t}: {len(pairs[t])} problematic pairs, "
                f"vertex {z} -> {fresh}"
            )
    out = Coloring(assignment)
    if not validate_coloring(g, seq, out, dm=dm):
        logging.error(f"repaired coloring {out} of {g} is invalid")
        raise ClaimViolation(
            0, [], message=f"repaired coloring {out} is not valid on G"
        )
    return out


def problem_free_color(
    pairs: ProblematicPairs, candidates: Sequence[int]
) -> Optional[int]:
    """The first candidate color without problematic pairs, if any."""
    for t in candidates:
        if not pairs[t]:
            return t
    return None


# Colors that must stay free of problematic pairs under each hypothesis.
FREE_COLOR_CANDIDATES: Dict[str, Tuple[int, ...]] = {
    "small": (1, 2),
    "s222": (1, 2, 3),
    "cut": (1, 2),
}


class EdgeBound(NamedTuple):
    """Chromatic numbers around one edge and the bound they must satisfy."""

    edge: Edge
    chi: int
    chi_minus: int
    reasons: Tuple[str, ...]

    @property
    def required(self) -> int:
        """Smallest allowed value of `2 * chi_minus`."""
        return self.chi + (1 if self.reasons else 0)

    @property
    def holds(self) -> bool:
        return 2 * self.chi_minus >= self.required


def refinement_reasons(
    g: Graph, e: Sequence[int], seq: PackingSequence, chi_minus: int
) -> Tuple[str, ...]:
    """
    Which hypotheses of the strengthened bound `2 χ_S(G - e) >= χ_S(G) + 1`
    hold for the edge `e`.

    - `"small"`: `s_1 = 1`, `s_2 <= 2` and some component has at least three
      vertices.
    - `"s222"`: `s_1 = s_2 = s_3 = 2` and `χ_S(G - e) >= 3`.
    - `"cut"`: `s_2 <= 2`, `e` is a cut-edge and `χ_S(G - e) >= 2`.
    """
    s1, s2, s3 = seq.s_at(1), seq.s_at(2), seq.s_at(3)
    reasons = list()
    if s1 == 1 and s2 <= 2 and max(len(c) for c in components(g)) >= 3:
        reasons.append("small")
    if s1 == s2 == s3 == 2 and chi_minus >= 3:
        reasons.append("s222")
    if s2 <= 2 and chi_minus >= 2 and is_cut_edge(g, e):
        reasons.append("cut")
    return tuple(reasons)


def edge_bounds(
    g: Graph,
    seq: PackingSequence,
    node_budget: Optional[int] = None,
    time_budget: Optional[float] = None,
    chi_of: Optional[Callable[[Graph], int]] = None,
) -> List[EdgeBound]:
    """
    The edge-removal bound of every edge of `g`.

    Args:
        chi_of:
            Computes `χ_S` of a graph. Defaults to `chi_s` under the given
            budgets; callers with a memoized solver pass their own.

    Raises:
        Timeout:
            If some chromatic number cannot be computed within budget.
    """
    if chi_of is None:

        def chi_of(h: Graph) -> int:
            return chi_s(h, seq, node_budget, time_budget).value

    chi = chi_of(g)
    out = list()
    for e in g.sorted_edges():
        chi_minus = chi_of(delete_edge(g, e))
        reasons = refinement_reasons(g, e, seq, chi_minus)
        out.append(EdgeBound(e, chi, chi_minus, reasons))
    return out


def edge_bound_violations(
    g: Graph,
    seq: PackingSequence,
    node_budget: Optional[int] = None,
    time_budget: Optional[float] = None,
) -> List[EdgeBound]:
    """The edges of `g` whose applicable removal bound fails."""
    return [
        b for b in edge_bounds(g, seq, node_budget, time_budget) if not b.holds
    ]


def check_edge_bound(
    g: Graph,
    seq: PackingSequence,
    node_budget: Optional[int] = None,
    time_budget: Optional[float] = None,
) -> bool:
    """
    Whether every edge `e` of `g` satisfies `2 χ_S(G - e) >= χ_S(G)`, and
    `2 χ_S(G - e) >= χ_S(G) + 1` whenever `refinement_reasons` applies.

    Raises:
        Timeout:
            If some chromatic number cannot be computed within budget.
    """
    return not edge_bound_violations(g, seq, node_budget, time_budget)
