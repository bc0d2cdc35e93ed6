# Copyright 2025 PackCritS Project Developers. See the top-level COPYRIGHT file
# for details.
#
# SPDX-License-Identifier: MIT

"""
Small graph enumeration

`enumerate_connected_graphs(n)` yields one representative of every
isomorphism class of connected graphs on `n` vertices. Graphs on `n` vertices
are grown from those on `n - 1` by adding a vertex adjacent to every
non-empty vertex subset; every connected graph has a vertex whose deletion
leaves it connected, so nothing is missed. Duplicates are rejected by
canonical form and the classes are cached per order.

`find_k_critical` and `find_k_vertex_critical` sweep the enumeration (or a
supplied graph6 corpus) for critical graphs, optionally in parallel worker
processes through joblib.
"""

from functools import lru_cache
from typing import Iterable, Iterator, List, Optional, Tuple

import networkx as nx
from absl import logging
from joblib import Parallel, delayed

from PackCritS._src.config import config
from PackCritS.canon import canonical_graph
from PackCritS.critical import is_k_critical, is_k_vertex_critical
from PackCritS.errors import SizeLimit, Timeout
from PackCritS.graph import Graph, is_connected
from PackCritS.io import emit_graph6, from_networkx
from PackCritS.sequence import PackingSequence


@lru_cache(maxsize=None)
def _connected_graphs(n: int) -> Tuple[Graph, ...]:
    if n == 1:
        return (Graph(1),)
    seen = dict()
    for parent in _connected_graphs(n - 1):
        base = list(parent.edges)
        for subset in range(1, 1 << (n - 1)):
            extra = [(v, n - 1) for v in range(n - 1) if subset >> v & 1]
            child = canonical_graph(Graph(n, base + extra))
            seen.setdefault(emit_graph6(child), child)
    return tuple(seen[key] for key in sorted(seen))


def enumerate_connected_graphs(
    n: int, verbose: bool = False
) -> Iterator[Graph]:
    """
    Stream the connected graphs on `n` vertices up to isomorphism.

    Example:
        >>> from PackCritS.verify.enumerate import enumerate_connected_graphs
        >>> len(list(enumerate_connected_graphs(4)))
        6

    Args:
        n:
            The order, between 1 and the `packcrits_enumeration_limit`
            option.
        verbose:
            If true, log the number of classes found.

    Raises:
        SizeLimit:
            If `n` exceeds the `packcrits_enumeration_limit` option.
    """
    if n < 1:
        raise ValueError(f"graphs need at least one vertex, not {n}")
    if n > config.state.enumeration_limit:
        raise SizeLimit(
            f"internal enumeration is limited to n <= "
            f"{config.state.enumeration_limit}, not {n}; supply a graph6 "
            f"corpus instead"
        )
    graphs = _connected_graphs(n)
    if verbose:
        logging.info(f"{len(graphs)} connected graphs on {n} vertices")
    return iter(graphs)


def connected_graphs_up_to(n_max: int, verbose: bool = False) -> List[Graph]:
    """All connected graphs with `1..n_max` vertices, by increasing order."""
    out: List[Graph] = list()
    for n in range(1, n_max + 1):
        out.extend(enumerate_connected_graphs(n, verbose=verbose))
    return out


def trees(n: int) -> List[Graph]:
    """The trees on `n` vertices up to isomorphism, via networkx."""
    if n == 1:
        return [Graph(1)]
    return [from_networkx(t) for t in nx.nonisomorphic_trees(n)]


def candidate_graphs(
    n_max: int, corpus: Optional[Iterable[Graph]] = None
) -> List[Graph]:
    """
    The connected graphs with at most `n_max` vertices, from the internal
    enumeration or filtered out of `corpus`.
    """
    if corpus is None:
        return connected_graphs_up_to(n_max)
    return [g for g in corpus if g.n <= n_max and is_connected(g)]


def _decide(
    g: Graph,
    seq: PackingSequence,
    k: int,
    vertex: bool,
    node_budget: Optional[int],
    time_budget: Optional[float],
) -> Optional[bool]:
    if g.n < k:
        return False
    decide = is_k_vertex_critical if vertex else is_k_critical
    try:
        return decide(g, seq, k, node_budget, time_budget)
    except Timeout:
        return None


def _sweep(
    n_max: int,
    seq: PackingSequence,
    k: int,
    vertex: bool,
    corpus: Optional[Iterable[Graph]],
    skipped: Optional[List[Graph]],
    node_budget: Optional[int],
    time_budget: Optional[float],
    workers: int,
    verbose: bool,
) -> List[Graph]:
    graphs = candidate_graphs(n_max, corpus)
    if workers == 1:
        verdicts = [
            _decide(g, seq, k, vertex, node_budget, time_budget)
            for g in graphs
        ]
    else:
        verdicts = Parallel(n_jobs=workers)(
            delayed(_decide)(g, seq, k, vertex, node_budget, time_budget)
            for g in graphs
        )
    found = list()
    for g, verdict in zip(graphs, verdicts):
        if verdict is None:
            if skipped is not None:
                skipped.append(g)
            logging.warning(f"skipping {g}: search budget exhausted")
        elif verdict:
            found.append(g)
    if verbose:
        kind = "vertex-critical" if vertex else "critical"
        logging.info(
            f"{len(found)} {k}-{kind} graphs among {len(graphs)} with "
            f"n <= {n_max} for {seq}"
        )
    return found


def find_k_critical(
    n_max: int,
    seq: PackingSequence,
    k: int,
    corpus: Optional[Iterable[Graph]] = None,
    skipped: Optional[List[Graph]] = None,
    node_budget: Optional[int] = None,
    time_budget: Optional[float] = None,
    workers: int = 1,
    verbose: bool = False,
) -> List[Graph]:
    """
    All connected χ_S-critical graphs with `χ_S = k` and at most `n_max`
    vertices.

    Example:
        >>> from PackCritS.sequence import parse_sequence
        >>> found = find_k_critical(7, parse_sequence("1,const"), 3)
        >>> sorted(g.n for g in found)
        [3, 5, 7]

    Args:
        n_max:
            Largest order to sweep.
        seq:
            The packing sequence.
        k:
            The chromatic number of interest.
        corpus:
            Graphs to sweep instead of the internal enumeration, e.g. from
            `PackCritS.io.read_graph6_file`. Disconnected graphs and graphs
            above `n_max` are ignored.
        skipped:
            If given, graphs whose decision ran out of budget are appended.
        node_budget:
            Search node budget of each decision.
        time_budget:
            Wall-clock seconds of each decision.
        workers:
            Number of joblib worker processes, or -1 for one per core.
        verbose:
            If true, log a summary.

    Raises:
        SizeLimit:
            If no corpus is given and `n_max` exceeds the
            `packcrits_enumeration_limit` option.
    """
    return _sweep(
        n_max,
        seq,
        k,
        False,
        corpus,
        skipped,
        node_budget,
        time_budget,
        workers,
        verbose,
    )


def find_k_vertex_critical(
    n_max: int,
    seq: PackingSequence,
    k: int,
    corpus: Optional[Iterable[Graph]] = None,
    skipped: Optional[List[Graph]] = None,
    node_budget: Optional[int] = None,
    time_budget: Optional[float] = None,
    workers: int = 1,
    verbose: bool = False,
) -> List[Graph]:
    """
    All connected χ_S-vertex-critical graphs with `χ_S = k` and at most
    `n_max` vertices. Arguments are as for `find_k_critical`.
    """
    return _sweep(
        n_max,
        seq,
        k,
        True,
        corpus,
        skipped,
        node_budget,
        time_budget,
        workers,
        verbose,
    )
