# Copyright 2025 PackCritS Project Developers. See the top-level COPYRIGHT file
# for details.
#
# SPDX-License-Identifier: MIT

"""
Graph representation and metric computation

`PackCritS.graph.Graph` is an immutable simple undirected graph on the dense
vertex set `{0, ..., n-1}`. Mutation operations (`delete_edge`,
`delete_vertex`, `add_edge`) return new graphs. Vertex deletion re-indexes the
surviving vertices and records, in `Graph.origin`, the index each new vertex
had in the graph it was derived from.

Distances are computed all-pairs with an unweighted breadth-first search
(`scipy.sparse.csgraph.shortest_path`) and stored in a
`PackCritS.graph.DistanceMatrix`. Vertices in distinct components are at
distance `UNREACHABLE`, a dedicated sentinel that refuses ordering comparisons
with integers.

Example:
    >>> from PackCritS.graph import Graph, all_pairs_distance
    >>> p4 = Graph(4, [(0, 1), (1, 2), (2, 3)])
    >>> dm = all_pairs_distance(p4)
    >>> dm[0, 3], dm.diameter()
    (3, 3)
"""

import math
from collections import deque
from typing import (
    FrozenSet,
    Iterable,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    Union,
)

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components, shortest_path

from PackCritS.errors import DeleteLastVertex, MissingEdge, MissingVertex

Edge = Tuple[int, int]


class _Unreachable:
    """
    Distance between vertices of distinct components.

    Deliberately unordered: comparing it with an integer raises `TypeError`.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(_Unreachable, cls).__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNREACHABLE"

    def __reduce__(self):
        return (_Unreachable, ())


UNREACHABLE = _Unreachable()
INFINITY = math.inf


def _normalize_edge(e: Sequence[int]) -> Edge:
    u, v = int(e[0]), int(e[1])
    return (u, v) if u < v else (v, u)


class Graph:
    """
    Immutable simple undirected graph.

    Args:
        n:
            The number of vertices, at least 1.
        edges:
            An iterable of vertex pairs. Each unordered pair may appear in
            either orientation and is stored once.
        origin:
            Optional re-index map. `origin[i]` is the index vertex `i` had in
            the graph this one was derived from. Defaults to the identity. Not
            part of equality.

    Raises:
        ValueError:
            If `n < 1`, an edge is a self-loop, or an endpoint is out of range.
    """

    __slots__ = ("_n", "_edges", "_adj", "_origin", "_hash")

    def __init__(
        self,
        n: int,
        edges: Iterable[Sequence[int]] = (),
        origin: Optional[Sequence[int]] = None,
    ):
        if n < 1:
            raise ValueError(f"graphs need at least one vertex, not {n}")
        normalized = set()
        adj = [0] * n
        for e in edges:
            u, v = _normalize_edge(e)
            if u == v:
                raise ValueError(f"self-loop at vertex {u} is not allowed")
            if u < 0 or v >= n:
                raise ValueError(f"edge {(u, v)} out of range for n={n}")
            normalized.add((u, v))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._n = n
        self._edges: FrozenSet[Edge] = frozenset(normalized)
        self._adj = tuple(adj)
        if origin is None:
            origin = range(n)
        self._origin = tuple(int(i) for i in origin)
        if len(self._origin) != n:
            raise ValueError(
                f"origin map has {len(self._origin)} entries for n={n}"
            )
        self._hash = hash((n, self._edges))

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> FrozenSet[Edge]:
        return self._edges

    @property
    def origin(self) -> Tuple[int, ...]:
        return self._origin

    @property
    def adjacency_masks(self) -> Tuple[int, ...]:
        """Per-vertex neighborhoods as integer bitsets."""
        return self._adj

    def vertices(self) -> range:
        return range(self._n)

    def sorted_edges(self) -> List[Edge]:
        return sorted(self._edges)

    def has_edge(self, u: int, v: int) -> bool:
        if u == v or not (0 <= u < self._n and 0 <= v < self._n):
            return False
        return bool(self._adj[u] >> v & 1)

    def neighbors(self, v: int) -> List[int]:
        self._check_vertex(v)
        mask = self._adj[v]
        return [w for w in range(self._n) if mask >> w & 1]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return bin(self._adj[v]).count("1")

    def degrees(self) -> List[int]:
        return [bin(mask).count("1") for mask in self._adj]

    def adjacency_matrix(self) -> np.ndarray:
        """Dense boolean adjacency matrix of shape `(n, n)`."""
        a = np.zeros((self._n, self._n), dtype=bool)
        if self._edges:
            us, vs = np.array(self.sorted_edges()).T
            a[us, vs] = True
            a[vs, us] = True
        return a

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise MissingVertex(f"vertex {v} not in graph of order {self._n}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.sorted_edges()})"


class DistanceMatrix:
    """
    All-pairs shortest path distances of a graph.

    Indexing with a vertex pair returns an `int`, or `UNREACHABLE` for
    vertices of distinct components. The raw array (with `-1` standing in for
    `UNREACHABLE`) is available as `DistanceMatrix.array` for vectorized
    consumers.

    Args:
        array:
            Integer matrix of shape `(n, n)` using `-1` for unreachable pairs.
    """

    __slots__ = ("_d",)

    def __init__(self, array: np.ndarray):
        self._d = np.asarray(array, dtype=np.int64)
        self._d.setflags(write=False)

    @property
    def n(self) -> int:
        return self._d.shape[0]

    @property
    def array(self) -> np.ndarray:
        return self._d

    def __getitem__(self, key: Tuple[int, int]) -> Union[int, _Unreachable]:
        val = int(self._d[key])
        return UNREACHABLE if val < 0 else val

    def within(self, r: int) -> np.ndarray:
        """
        Boolean matrix of distinct vertex pairs at distance at most `r`.

        Unreachable pairs are never within any radius.
        """
        w = (self._d >= 0) & (self._d <= r)
        np.fill_diagonal(w, False)
        return w

    def ball_masks(self, r: int) -> Tuple[int, ...]:
        """
        Per-vertex integer bitsets of the other vertices within distance `r`.
        """
        w = self.within(r)
        masks = []
        for row in w:
            mask = 0
            for j in np.flatnonzero(row):
                mask |= 1 << int(j)
            masks.append(mask)
        return tuple(masks)

    def diameter(self) -> Union[int, _Unreachable]:
        if np.any(self._d < 0):
            return UNREACHABLE
        return int(self._d.max())

    def __eq__(self, other) -> bool:
        if not isinstance(other, DistanceMatrix):
            return NotImplemented
        return np.array_equal(self._d, other._d)

    def __repr__(self) -> str:
        return f"DistanceMatrix(n={self.n})"


class EdgePartition(NamedTuple):
    """
    Partition of the vertices by which endpoint of an edge they are closer to.

    `w_uv` holds the vertices strictly closer to `u`, `w_vu` those strictly
    closer to `v`, and `ties` the rest.
    """

    edge: Edge
    w_uv: FrozenSet[int]
    w_vu: FrozenSet[int]
    ties: FrozenSet[int]


def _csgraph(g: Graph) -> csr_matrix:
    a = g.adjacency_matrix()
    return csr_matrix(a.astype(np.int8))


def all_pairs_distance(g: Graph) -> DistanceMatrix:
    """
    Compute the exact distance between every pair of vertices.

    Args:
        g:
            The graph.

    Returns:
        The distance matrix of `g`. Pairs in distinct components are
        `UNREACHABLE`.
    """
    d = shortest_path(_csgraph(g), directed=False, unweighted=True)
    d[np.isinf(d)] = -1
    return DistanceMatrix(d.astype(np.int64))


def components(g: Graph) -> List[List[int]]:
    """
    The connected components of `g`, each as a sorted vertex list, ordered by
    their smallest vertex.
    """
    _, labels = connected_components(_csgraph(g), directed=False)
    groups: dict = dict()
    for v, label in enumerate(labels):
        groups.setdefault(int(label), []).append(v)
    return sorted(groups.values(), key=lambda c: c[0])


def is_connected(g: Graph) -> bool:
    count, _ = connected_components(_csgraph(g), directed=False)
    return count == 1


def diameter(g: Graph) -> Union[int, _Unreachable]:
    return all_pairs_distance(g).diameter()


def girth(g: Graph) -> Union[int, float]:
    """
    Length of a shortest cycle of `g`, or `INFINITY` if `g` is a forest.

    A breadth-first search from every root closes a cycle of length
    `dist[x] + dist[y] + 1` at each non-tree edge `xy`; the minimum over all
    roots is the girth.
    """
    best = INFINITY
    adj = [g.neighbors(v) for v in g.vertices()]
    for root in g.vertices():
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def _closer(a, b) -> bool:
    # finite distances are strictly smaller than UNREACHABLE
    if a is UNREACHABLE:
        return False
    if b is UNREACHABLE:
        return True
    return a < b


def w_partition(
    g: Graph,
    e: Sequence[int],
    require_edge: bool = True,
    dm: Optional[DistanceMatrix] = None,
) -> EdgePartition:
    """
    Partition the vertices of `g` by their distances to the endpoints of `e`.

    Example:
        >>> from PackCritS.graph import Graph, w_partition
        >>> c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        >>> part = w_partition(c4, (0, 1))
        >>> sorted(part.w_uv), sorted(part.w_vu), sorted(part.ties)
        ([0, 3], [1, 2], [])

    Args:
        g:
            The graph.
        e:
            The vertex pair `(u, v)`. Orientation matters: `w_uv` is the side
            of `u`.
        require_edge:
            If true, `e` must be an edge of `g`. Pass false to recompute the
            partition for the endpoints of an edge that has been deleted.
        dm:
            Optional precomputed distance matrix of `g`.

    Returns:
        The partition. Vertices unreachable from both endpoints are ties.

    Raises:
        MissingEdge:
            If `require_edge` is true and `e` is not an edge of `g`.
    """
    u, v = int(e[0]), int(e[1])
    g._check_vertex(u)
    g._check_vertex(v)
    if require_edge and not g.has_edge(u, v):
        raise MissingEdge(f"{(u, v)} is not an edge of {g}")
    if dm is None:
        dm = all_pairs_distance(g)
    w_uv, w_vu, ties = set(), set(), set()
    for w in g.vertices():
        du, dv = dm[u, w], dm[v, w]
        if _closer(du, dv):
            w_uv.add(w)
        elif _closer(dv, du):
            w_vu.add(w)
        else:
            ties.add(w)
    return EdgePartition(
        (u, v), frozenset(w_uv), frozenset(w_vu), frozenset(ties)
    )


def delete_edge(g: Graph, e: Sequence[int]) -> Graph:
    """
    Remove an edge, keeping every vertex.

    Raises:
        MissingEdge:
            If `e` is not an edge of `g`.
    """
    u, v = _normalize_edge(e)
    if not g.has_edge(u, v):
        raise MissingEdge(f"{(u, v)} is not an edge of {g}")
    return Graph(g.n, g.edges - {(u, v)}, origin=g.origin)


def add_edge(g: Graph, e: Sequence[int]) -> Graph:
    """
    Add an edge between two existing vertices.

    Raises:
        MissingVertex:
            If an endpoint is not a vertex of `g`.
        ValueError:
            If `e` is a self-loop or already an edge.
    """
    u, v = _normalize_edge(e)
    g._check_vertex(u)
    g._check_vertex(v)
    if g.has_edge(u, v):
        raise ValueError(f"{(u, v)} is already an edge of {g}")
    return Graph(g.n, g.edges | {(u, v)}, origin=g.origin)


def delete_vertex(g: Graph, v: int) -> Graph:
    """
    Remove a vertex and its incident edges, re-indexing the rest.

    The returned graph's `origin` maps each new index to the original index
    of the same vertex in `g`'s own origin numbering.

    Raises:
        MissingVertex:
            If `v` is not a vertex of `g`.
        DeleteLastVertex:
            If `g` has a single vertex.
    """
    g._check_vertex(v)
    if g.n == 1:
        raise DeleteLastVertex("cannot delete the only vertex of K_1")
    keep = [w for w in g.vertices() if w != v]
    index = {w: i for i, w in enumerate(keep)}
    edges = [
        (index[a], index[b]) for a, b in g.edges if a != v and b != v
    ]
    return Graph(g.n - 1, edges, origin=[g.origin[w] for w in keep])


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """
    The subgraph induced by `vertices`, re-indexed in increasing order.
    """
    keep = sorted(set(vertices))
    for w in keep:
        g._check_vertex(w)
    index = {w: i for i, w in enumerate(keep)}
    edges = [
        (index[a], index[b]) for a, b in g.edges if a in index and b in index
    ]
    return Graph(len(keep), edges, origin=[g.origin[w] for w in keep])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """`g` followed by a copy of `h` shifted by `g.n`."""
    shifted = [(a + g.n, b + g.n) for a, b in h.edges]
    return Graph(g.n + h.n, list(g.edges) + shifted)


def is_cut_edge(g: Graph, e: Sequence[int]) -> bool:
    """
    Whether deleting `e` increases the number of components of `g`.

    Raises:
        MissingEdge:
            If `e` is not an edge of `g`.
    """
    before = len(components(g))
    return len(components(delete_edge(g, e))) > before


def isolated_vertices(g: Graph) -> List[int]:
    return [v for v, mask in enumerate(g.adjacency_masks) if mask == 0]


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)
