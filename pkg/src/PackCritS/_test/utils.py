# Copyright 2025 PackCritS Project Developers. See the top-level COPYRIGHT file
# for details.
#
# SPDX-License-Identifier: MIT

from typing import Callable, List, Sequence

import networkx as nx
import numpy as np
from hypothesis import strategies as st

from PackCritS.graph import Graph
from PackCritS.io import from_networkx, to_networkx
from PackCritS.sequence import PackingSequence, parse_sequence
from PackCritS.solver import Coloring, validate_coloring

_generic_sequence_texts = (
    "1,1,const",
    "1,2,const",
    "1,2,3,inc",
    "2,2,const",
    "1,3,const",
    "2,5,const",
    "3,3,const",
)

_generic_sequences = [parse_sequence(t) for t in _generic_sequence_texts]

_small_sequences = [
    parse_sequence(t) for t in ("1,const", "1,inc", "2,const", "1,2,2,const")
]


def _make_random_graph(n: int, p: float, seed: int) -> Graph:
    """
    An Erdős–Rényi graph `G(n, p)` drawn with networkx.

    Args:
        n:
            The order.
        p:
            The edge probability.
        seed:
            The random seed.

    Returns:
        The graph.
    """
    return from_networkx(nx.gnp_random_graph(n, p, seed=seed))


def _make_connected_graph(n: int, p: float, seed: int) -> Graph:
    """A random connected graph: a random tree plus `G(n, p)` edges."""
    rng = np.random.default_rng(seed)
    edges = [(int(rng.integers(0, v)), v) for v in range(1, n)]
    extra = nx.gnp_random_graph(n, p, seed=seed).edges()
    return Graph(n, edges + [(u, v) for u, v in extra])


def _relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """`g` with vertex `v` renamed `perm[v]`."""
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def _floyd_warshall(g: Graph) -> np.ndarray:
    """Distances via networkx's Floyd-Warshall, -1 for unreachable pairs."""
    d = nx.floyd_warshall_numpy(to_networkx(g), nodelist=list(range(g.n)))
    return np.where(np.isinf(d), -1, d).astype(int)


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8) -> Graph:
    """Hypothesis strategy for small graphs on `min_n..max_n` vertices."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(
        st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs))
    )
    return Graph(n, [p for p, keep in zip(pairs, mask) if keep])


@st.composite
def permutations_of(draw, n: int) -> List[int]:
    return draw(st.permutations(list(range(n))))


def _check_coloring(
    test_fn: Callable,
    g: Graph,
    seq: PackingSequence,
    c: Coloring,
    k: int,
):
    """Assert that `c` is a valid coloring of `g` using exactly `k` colors."""
    test_fn(len(c), g.n)
    test_fn(validate_coloring(g, seq, c), True)
    test_fn(c.k, k)
