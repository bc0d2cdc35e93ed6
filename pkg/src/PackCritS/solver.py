# Copyright 2025 PackCritS Project Developers. See the top-level COPYRIGHT file
# for details.
#
# SPDX-License-Identifier: MIT

"""
Exact S-packing coloring

An S-packing k-coloring of a graph assigns colors `1..k` to its vertices so
that two distinct vertices sharing color `i` are at distance greater than
`s_i`. `chi_s` computes the smallest such `k` exactly with a budgeted
backtracking search, one component at a time, ascending from a clique lower
bound towards a first-fit upper bound. `validate_coloring` checks witnesses
directly against the distance matrix, and `brute_force_chi` is an
enumeration oracle for small graphs.

Example:
    >>> from PackCritS.families import generate
    >>> from PackCritS.sequence import parse_sequence
    >>> from PackCritS.solver import chi_s, validate_coloring
    >>> p14 = generate("path:14")
    >>> seq = parse_sequence("2,3,11,const")
    >>> result = chi_s(p14, seq)
    >>> result.value
    8
    >>> validate_coloring(p14, seq, result.witness)
    True
"""

from time import perf_counter
from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional

import networkx as nx
import numpy as np
from absl import logging

from PackCritS._src.config import config
from PackCritS._src.search import PackingSearch
from PackCritS.errors import PartialColoring, SizeLimit, Timeout
from PackCritS.graph import (
    DistanceMatrix,
    Graph,
    all_pairs_distance,
    components,
    induced_subgraph,
)
from PackCritS.sequence import PackingSequence


class Coloring:
    """
    An assignment of positive colors to the vertices `0..n-1`.

    Entries of `0` mark uncolored vertices; such a coloring is partial and
    fails validation.

    Args:
        assignment:
            The color of each vertex.
    """

    __slots__ = ("_assignment",)

    def __init__(self, assignment: Iterable[int]):
        self._assignment = tuple(int(c) for c in assignment)

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int], n: int) -> "Coloring":
        """Build a coloring of `n` vertices, leaving unmapped ones at 0."""
        return cls(mapping.get(v, 0) for v in range(n))

    @property
    def assignment(self) -> tuple:
        return self._assignment

    @property
    def k(self) -> int:
        """The largest color used."""
        return max(self._assignment, default=0)

    def colors_used(self) -> int:
        return len({c for c in self._assignment if c > 0})

    def is_total(self) -> bool:
        return all(c > 0 for c in self._assignment)

    def classes(self) -> Dict[int, List[int]]:
        """Vertices of each used color, in increasing order."""
        out: Dict[int, List[int]] = dict()
        for v, c in enumerate(self._assignment):
            if c > 0:
                out.setdefault(c, []).append(v)
        return out

    def __getitem__(self, v: int) -> int:
        return self._assignment[v]

    def __len__(self) -> int:
        return len(self._assignment)

    def __iter__(self):
        return iter(self._assignment)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Coloring):
            return NotImplemented
        return self._assignment == other._assignment

    def __hash__(self) -> int:
        return hash(self._assignment)

    def __repr__(self) -> str:
        return f"Coloring({list(self._assignment)})"


class ChiResult(NamedTuple):
    """
    Outcome of `chi_s`.

    `value` is exact unless `timed_out` is set, in which case it is the best
    upper bound found and `witness` the coloring achieving it.
    """

    value: int
    witness: Coloring
    nodes_explored: int
    timed_out: bool = False


def validate_coloring(
    g: Graph,
    seq: PackingSequence,
    c: Coloring,
    dm: Optional[DistanceMatrix] = None,
) -> bool:
    """
    Whether `c` is an S-packing coloring of `g`.

    Checks every same-colored pair against its distance bound, straight from
    the distance matrix.

    Example:
        >>> from PackCritS.families import generate
        >>> from PackCritS.sequence import parse_sequence
        >>> c4 = generate("cycle:4")
        >>> c = Coloring([1, 2, 1, 2])
        >>> validate_coloring(c4, parse_sequence("1,const"), c)
        True
        >>> validate_coloring(c4, parse_sequence("1,2,const"), c)
        False

    Raises:
        PartialColoring:
            If `c` does not give a positive color to every vertex of `g`.
    """
    if len(c) != g.n or not c.is_total():
        raise PartialColoring(
            f"{c} does not color all {g.n} vertices with positive colors"
        )
    if dm is None:
        dm = all_pairs_distance(g)
    colors = np.asarray(c.assignment)
    bounds = np.array([seq.s_at(i) for i in range(1, c.k + 1)])[colors - 1]
    d = dm.array
    same = colors[:, None] == colors[None, :]
    np.fill_diagonal(same, False)
    conflict = same & (d >= 0) & (d <= bounds[:, None])
    return not bool(conflict.any())


def packing_lower_bound(
    g: Graph, seq: PackingSequence, dm: Optional[DistanceMatrix] = None
) -> int:
    """
    Size of a largest vertex set with pairwise distances at most `s_1`.

    Such vertices need pairwise distinct colors, whatever the sequence.
    """
    if dm is None:
        dm = all_pairs_distance(g)
    close = nx.from_numpy_array(dm.within(seq.s_at(1)).astype(int))
    _, size = nx.max_weight_clique(close, weight=None)
    return max(1, int(size))


def greedy_upper_bound(
    g: Graph, seq: PackingSequence, dm: Optional[DistanceMatrix] = None
) -> int:
    """
    Colors used by first-fit over a degree-descending vertex order.

    The first-fit coloring is valid, so this is at least `chi_s`.
    """
    return max(PackingSearch(g, seq, dm=dm).first_fit())


class _Component:
    def __init__(self, g: Graph, vertices: List[int], seq: PackingSequence):
        self.vertices = vertices
        self.graph = induced_subgraph(g, vertices)
        self.dm = all_pairs_distance(self.graph)
        self.seq = seq
        self.lower = packing_lower_bound(self.graph, seq, self.dm)
        self.greedy = PackingSearch(self.graph, seq, dm=self.dm).first_fit()
        self.upper = max(self.greedy)

    def search(self, node_budget: int, time_budget: float) -> PackingSearch:
        return PackingSearch(
            self.graph,
            self.seq,
            dm=self.dm,
            node_budget=node_budget,
            time_budget=time_budget,
        )


def _merge(g: Graph, parts: List[tuple]) -> Coloring:
    assignment = [0] * g.n
    for comp, colors in parts:
        for i, v in enumerate(comp.vertices):
            assignment[v] = colors[i]
    return Coloring(assignment)


class _Budget:
    def __init__(self, node_budget: Optional[int], time_budget):
        self.nodes = (
            config.state.node_budget if node_budget is None else node_budget
        )
        self.seconds = (
            config.state.time_budget if time_budget is None else time_budget
        )
        self.start = perf_counter()
        self.used = 0

    def search(self, comp: _Component) -> PackingSearch:
        seconds = 0.0
        if self.seconds:
            seconds = max(1e-9, self.seconds - (perf_counter() - self.start))
        return comp.search(self.nodes - self.used, seconds)


def is_k_colorable(
    g: Graph,
    seq: PackingSequence,
    k: int,
    node_budget: Optional[int] = None,
    time_budget: Optional[float] = None,
) -> Optional[Coloring]:
    """
    Decide whether `g` has an S-packing coloring with colors `1..k`.

    Example:
        >>> from PackCritS.families import generate
        >>> from PackCritS.sequence import parse_sequence
        >>> c5 = generate("cycle:5")
        >>> is_k_colorable(c5, parse_sequence("1,const"), 2) is None
        True

    Args:
        g:
            The graph.
        seq:
            The packing sequence.
        k:
            The number of available colors, at least 1.
        node_budget:
            Search node budget, defaulting to `packcrits_node_budget`.
        time_budget:
            Wall-clock seconds, defaulting to `packcrits_time_budget`.

    Returns:
        A witness coloring, or None if there is none.

    Raises:
        Timeout:
            If a budget runs out first. The exception carries the explored
            node count.
    """
    if k < 1:
        raise ValueError(f"k must be positive, not {k}")
    budget = _Budget(node_budget, time_budget)
    parts = list()
    for vertices in components(g):
        comp = _Component(g, vertices, seq)
        if comp.upper <= k:
            parts.append((comp, comp.greedy))
            continue
        if comp.lower > k:
            return None
        search = budget.search(comp)
        try:
            colors = search.color(k)
        except Timeout as e:
            raise Timeout(
                str(e), nodes=budget.used + search.nodes
            ) from e
        budget.used += search.nodes
        if colors is None:
            return None
        parts.append((comp, colors))
    return _merge(g, parts)


def chi_s(
    g: Graph,
    seq: PackingSequence,
    node_budget: Optional[int] = None,
    time_budget: Optional[float] = None,
    raise_on_timeout: bool = True,
    verbose: bool = False,
) -> ChiResult:
    """
    Compute the S-packing chromatic number of `g` exactly.

    Components are solved independently and the largest value wins. Each
    component ascends from its clique lower bound and stops at the first
    colorable `k`, falling back to its first-fit coloring.

    Args:
        g:
            The graph.
        seq:
            The packing sequence.
        node_budget:
            Search node budget shared by all components, defaulting to
            `packcrits_node_budget`.
        time_budget:
            Wall-clock seconds, defaulting to `packcrits_time_budget`.
        raise_on_timeout:
            If false, an exhausted budget yields a result flagged `timed_out`
            whose value is the best upper bound found.
        verbose:
            If true, log every decided `k`.

    Returns:
        The chromatic number, a witness coloring, and the explored node count.

    Raises:
        Timeout:
            If a budget runs out and `raise_on_timeout` is set. The exception
            carries the best known lower and upper bounds and, as `partial`,
            the timed-out result.
    """
    budget = _Budget(node_budget, time_budget)
    comps = [_Component(g, vs, seq) for vs in components(g)]
    parts: List[tuple] = list()
    values: List[int] = list()
    for idx, comp in enumerate(comps):
        colors = comp.greedy
        k = comp.lower
        search = budget.search(comp)
        try:
            while k < comp.upper:
                found = search.color(k)
                if verbose:
                    logging.info(
                        f"component {idx} (n={comp.graph.n}): "
                        f"k={k} {'colorable' if found else 'infeasible'}"
                    )
                if found is not None:
                    colors = found
                    break
                k += 1
        except Timeout as e:
            budget.used += search.nodes
            rest = comps[idx + 1:]
            lower = max(values + [k] + [c.lower for c in rest])
            upper = max(values + [c.upper for c in comps[idx:]])
            witness = _merge(
                g, parts + [(c, c.greedy) for c in comps[idx:]]
            )
            partial = ChiResult(upper, witness, budget.used, True)
            if verbose:
                logging.warning(
                    f"chi_s timed out after {budget.used} nodes: "
                    f"{lower} <= chi <= {upper}"
                )
            if raise_on_timeout:
                raise Timeout(
                    f"{e}; chi_S is between {lower} and {upper}",
                    lower=lower,
                    upper=upper,
                    nodes=budget.used,
                    partial=partial,
                ) from e
            return partial
        budget.used += search.nodes
        parts.append((comp, colors))
        values.append(max(colors))
    return ChiResult(max(values), _merge(g, parts), budget.used, False)


def brute_force_chi(
    g: Graph, seq: PackingSequence, chunk_size: int = 1 << 16
) -> int:
    """
    Compute the S-packing chromatic number by enumerating every assignment.

    For `k = 1, 2, ...` all `k**n` maps from the vertices to `1..k` are
    tested in vectorized chunks until one is valid. No pruning is applied.

    Raises:
        SizeLimit:
            If `g.n` exceeds the `packcrits_brute_force_limit` option.
    """
    n = g.n
    if n > config.state.brute_force_limit:
        raise SizeLimit(
            f"brute force is limited to n <= "
            f"{config.state.brute_force_limit}, not {n}"
        )
    d = all_pairs_distance(g).array
    us, vs = np.nonzero(np.triu(d > 0))
    dists = d[us, vs]
    for k in range(1, n + 1):
        s = np.array([0] + [seq.s_at(i) for i in range(1, k + 1)])
        places = k ** np.arange(n, dtype=np.int64)
        total = k**n
        for start in range(0, total, chunk_size):
            idx = np.arange(start, min(total, start + chunk_size))
            a = (idx[:, None] // places[None, :]) % k + 1
            cu, cv = a[:, us], a[:, vs]
            bad = (cu == cv) & (dists[None, :] <= s[cu])
            if np.any(~bad.any(axis=1)):
                return k
    return n


def diameter_rule_chi(
    g: Graph, seq: PackingSequence, dm: Optional[DistanceMatrix] = None
) -> Optional[int]:
    """
    `n - a + 1` for connected `g` with diameter at most `s_2`, where `a` is
    the size of a largest vertex set with pairwise distances above `s_1`.

    Under that hypothesis no color other than 1 can repeat, so the formula
    equals `chi_s`. Returns None when the hypothesis fails.
    """
    if dm is None:
        dm = all_pairs_distance(g)
    diam = dm.diameter()
    if not isinstance(diam, int) or diam > seq.s_at(2):
        return None
    apart = ~dm.within(seq.s_at(1))
    np.fill_diagonal(apart, False)
    _, size = nx.max_weight_clique(
        nx.from_numpy_array(apart.astype(int)), weight=None
    )
    return g.n - max(1, int(size)) + 1
