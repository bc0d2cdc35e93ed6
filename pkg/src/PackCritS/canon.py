# Copyright 2025 PackCritS Project Developers. See the top-level COPYRIGHT file
# for details.
#
# SPDX-License-Identifier: MIT

"""
Canonical labeling of small graphs

`canonical_form` maps isomorphic graphs to the same graph6 byte string. It
runs color refinement on an ordered vertex partition and, while the partition
is not discrete, individualizes each vertex of the first smallest
non-singleton cell in turn. Among the resulting discrete labelings it keeps
the one whose adjacency bit string is largest. Twin vertices of a cell are
exchanged by an automorphism, so only one vertex per twin class is
individualized.

The search is exponential in the worst case and is capped by the
`packcrits_canon_limit` configuration option.
"""

from typing import List, Optional, Tuple

from PackCritS._src.config import config
from PackCritS.errors import SizeLimit
from PackCritS.graph import Graph
from PackCritS.io import emit_graph6


def _refine(nbrs: List[List[int]], col: List[int]) -> List[int]:
    while True:
        sig = [
            (col[v], tuple(sorted(col[w] for w in nbrs[v])))
            for v in range(len(col))
        ]
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if len(ranks) == len(set(col)):
            return new
        col = new


def _target_cell(col: List[int]) -> Optional[List[int]]:
    cells: dict = dict()
    for v, c in enumerate(col):
        cells.setdefault(c, []).append(v)
    best = None
    for c in sorted(cells):
        cell = cells[c]
        if len(cell) > 1 and (best is None or len(cell) < len(best)):
            best = cell
    return best


def _twin_representatives(adj: Tuple[int, ...], cell: List[int]) -> List[int]:
    reps: List[int] = list()
    for v in cell:
        for r in reps:
            mask = ~((1 << v) | (1 << r))
            if adj[v] & mask == adj[r] & mask:
                break
        else:
            reps.append(v)
    return reps


def _certificate(edges, perm: List[int], n: int) -> int:
    length = n * (n - 1) // 2
    cert = 0
    for a, b in edges:
        i, j = perm[a], perm[b]
        if i > j:
            i, j = j, i
        cert |= 1 << (length - 1 - (j * (j - 1) // 2 + i))
    return cert


def canonical_labeling(g: Graph) -> List[int]:
    """
    A canonical relabeling of `g`.

    Returns:
        A list `perm` such that vertex `v` of `g` becomes vertex `perm[v]` of
        the canonical representative.

    Raises:
        SizeLimit:
            If `g.n` exceeds the `packcrits_canon_limit` option.
    """
    if g.n > config.state.canon_limit:
        raise SizeLimit(
            f"canonical labeling is limited to n <= "
            f"{config.state.canon_limit}, not {g.n}"
        )
    nbrs = [g.neighbors(v) for v in g.vertices()]
    adj = g.adjacency_masks
    edges = g.sorted_edges()
    best_cert = -1
    best_perm: List[int] = list(g.vertices())
    stack = [_refine(nbrs, [0] * g.n)]
    while stack:
        col = stack.pop()
        cell = _target_cell(col)
        if cell is None:
            cert = _certificate(edges, col, g.n)
            if cert > best_cert:
                best_cert, best_perm = cert, col
            continue
        for v in _twin_representatives(adj, cell):
            split = [2 * c + 1 for c in col]
            split[v] -= 1
            stack.append(_refine(nbrs, split))
    return list(best_perm)


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative of the isomorphism class of `g`."""
    perm = canonical_labeling(g)
    return Graph(g.n, [(perm[a], perm[b]) for a, b in g.edges])


def canonical_form(g: Graph) -> bytes:
    """
    A byte string identifying the isomorphism class of `g`.

    Example:
        >>> from PackCritS.graph import Graph
        >>> from PackCritS.canon import canonical_form
        >>> c5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
        >>> other = Graph(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)])
        >>> canonical_form(c5) == canonical_form(other)
        True

    Raises:
        SizeLimit:
            If `g.n` exceeds the `packcrits_canon_limit` option.
    """
    return emit_graph6(canonical_graph(g)).encode("ascii")


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    """
    Whether two graphs are isomorphic.

    Raises:
        SizeLimit:
            If the graphs agree on order, size and degree sequence and their
            order exceeds the `packcrits_canon_limit` option.
    """
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_form(g1) == canonical_form(g2)
