# Copyright 2025 PackCritS Project Developers. See the top-level COPYRIGHT file
# for details.
#
# SPDX-License-Identifier: MIT

"""
Named graphs and graph families

Every family is addressed by a `FamilySpec`, written `name:param:...` in text.
Host-parametrized gadgets take another family spec as their trailing
parameter, e.g. `universal_double:complete:3`.

========================  ===========================================
`path:n`                  path on `n >= 1` vertices `0-1-...-(n-1)`
`cycle:n`                 cycle on `n >= 3` vertices
`complete:n`              complete graph on `n >= 1` vertices
`complete_minus_edge:n`   `K_n` without the edge `(n-2, n-1)`, `n >= 2`
`star:k`                  `K_{1,k}` with center 0, `k >= 1`
`Z1`                      triangle `0,1,2` with a pendant vertex 3 at 2
`X:2k`                    `P_{2k}` with a pendant at both support vertices
`G1` ... `G8`             eight small fixed graphs, see `FIGURE_GRAPHS`
`star_bridge:k`           two `K_{1,k}` joined leaf to leaf, `k >= 3`
`center_bridge:k`         two `K_{1,k}` joined center to center
`clique_path:k`           `K_k` and `K_{k+1}` joined by a path of length 3
`universal_double:H`      two copies of `H` joined at a universal vertex
`non_cut:H`               two copies of `H` joined at one universal vertex
                          and by a path of length 3 at another
========================  ===========================================

Example:
    >>> from PackCritS.families import generate
    >>> generate("X:6").n
    8
    >>> generate("universal_double:complete:3").m
    7
"""

from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from PackCritS.errors import (
    Disconnected,
    ParameterOutOfRange,
    UnknownFamily,
)
from PackCritS.graph import (
    Edge,
    Graph,
    all_pairs_distance,
    delete_edge,
    disjoint_union,
    is_connected,
)
from PackCritS.solver import Coloring


class FamilySpec:
    """
    A family name with integer parameters and an optional host graph spec.

    Args:
        name:
            The family name.
        params:
            The integer parameters.
        host:
            The host graph of gadget families.
    """

    __slots__ = ("name", "params", "host")

    def __init__(
        self,
        name: str,
        params: Sequence[int] = (),
        host: Optional["FamilySpec"] = None,
    ):
        self.name = name
        self.params = tuple(int(p) for p in params)
        self.host = host

    def __eq__(self, other) -> bool:
        if not isinstance(other, FamilySpec):
            return NotImplemented
        return (self.name, self.params, self.host) == (
            other.name,
            other.params,
            other.host,
        )

    def __hash__(self) -> int:
        return hash((self.name, self.params, self.host))

    def __str__(self) -> str:
        return format_family(self)

    def __repr__(self) -> str:
        return f"FamilySpec({format_family(self)!r})"


def parse_family(text: str) -> FamilySpec:
    """
    Parse `name:param:...` text, with nested host specs for gadgets.

    Raises:
        UnknownFamily:
            If the name is not a registered family.
        ParameterOutOfRange:
            If a parameter is not an integer.
    """
    tokens = [t.strip() for t in text.strip().split(":")]
    name = _canonical_name(tokens[0])
    if name in _HOSTED:
        if len(tokens) < 2:
            raise ParameterOutOfRange(f"{name} needs a host graph spec")
        return FamilySpec(name, host=parse_family(":".join(tokens[1:])))
    params = list()
    for t in tokens[1:]:
        try:
            params.append(int(t))
        except ValueError:
            raise ParameterOutOfRange(
                f"parameter {t!r} of {name} is not an integer"
            )
    return FamilySpec(name, params)


def format_family(spec: FamilySpec) -> str:
    parts = [spec.name] + [str(p) for p in spec.params]
    if spec.host is not None:
        parts.append(format_family(spec.host))
    return ":".join(parts)


def _as_spec(spec: Union[FamilySpec, str]) -> FamilySpec:
    return parse_family(spec) if isinstance(spec, str) else spec


def _params(spec: FamilySpec, count: int) -> Tuple[int, ...]:
    if len(spec.params) != count:
        raise ParameterOutOfRange(
            f"{spec.name} takes {count} parameter(s), got {len(spec.params)}"
        )
    return spec.params


def _require(cond: bool, spec: FamilySpec, domain: str) -> None:
    if not cond:
        raise ParameterOutOfRange(
            f"{format_family(spec)} is outside the domain {domain}"
        )


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_minus_edge(n: int) -> Graph:
    return delete_edge(complete(n), (n - 2, n - 1))


def star(k: int) -> Graph:
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)])


def x_graph(order: int) -> Graph:
    """`P_{order}` (`order = 2k`) with a pendant at each support vertex."""
    edges = [(i, i + 1) for i in range(order - 1)]
    edges += [(order, 1), (order + 1, order - 2)]
    return Graph(order + 2, edges)


def star_bridge(k: int) -> Graph:
    """Centers 0 and `k+1`; the bridging edge is `(1, k+2)`."""
    g = disjoint_union(star(k), star(k))
    return Graph(g.n, list(g.edges) + [(1, k + 2)])


def center_bridge(k: int) -> Graph:
    """Centers 0 and `k+1`; the bridging edge is `(0, k+1)`."""
    g = disjoint_union(star(k), star(k))
    return Graph(g.n, list(g.edges) + [(0, k + 1)])


def clique_path(k: int) -> Graph:
    """
    `K_k` on `0..k-1`, `K_{k+1}` on `k..2k` and the path
    `0 - (2k+1) - (2k+2) - k`.
    """
    g = disjoint_union(complete(k), complete(k + 1))
    p, q = 2 * k + 1, 2 * k + 2
    return Graph(g.n + 2, list(g.edges) + [(0, p), (p, q), (q, k)])


def universal_vertices(g: Graph) -> List[int]:
    return [v for v in g.vertices() if g.degree(v) == g.n - 1]


def universal_double(host: Graph) -> Graph:
    """
    Two copies of `host` (`0..h-1` and `h..2h-1`) joined by `(x, h+x)` for
    the smallest universal vertex `x`.

    Raises:
        ParameterOutOfRange:
            If `host` has no universal vertex.
    """
    us = universal_vertices(host)
    if not us:
        raise ParameterOutOfRange(f"{host} has no universal vertex")
    x, h = us[0], host.n
    g = disjoint_union(host, host)
    return Graph(g.n, list(g.edges) + [(x, h + x)])


def non_cut(host: Graph) -> Graph:
    """
    Two copies of `host` joined by `(x, h+x)` and by the path
    `y - 2h - (2h+1) - (h+y)`, for the two smallest universal vertices
    `x < y`.

    Raises:
        ParameterOutOfRange:
            If `host` has fewer than two universal vertices.
    """
    us = universal_vertices(host)
    if len(us) < 2:
        raise ParameterOutOfRange(
            f"{host} has fewer than two universal vertices"
        )
    x, y, h = us[0], us[1], host.n
    g = disjoint_union(host, host)
    p, q = 2 * h, 2 * h + 1
    extra = [(x, h + x), (y, p), (p, q), (q, h + y)]
    return Graph(g.n + 2, list(g.edges) + extra)


FIGURE_GRAPHS: Dict[str, Tuple[int, Tuple[Edge, ...]]] = {
    "G1": (5, ((0, 1), (0, 2), (1, 2), (2, 3), (3, 4))),
    "G2": (6, ((0, 1), (0, 2), (1, 3), (2, 3), (2, 4), (3, 5))),
    "G3": (5, ((0, 1), (0, 2), (0, 3), (1, 3), (2, 3), (2, 4))),
    "G4": (6, ((0, 1), (1, 2), (2, 3), (1, 4), (2, 4), (4, 5))),
    "G5": (8, ((0, 5), (0, 1), (1, 2), (2, 3), (3, 4), (3, 6), (4, 7))),
    "G6": (8, ((0, 4), (0, 5), (0, 1), (1, 2), (2, 3), (3, 6), (3, 7))),
    "G7": (7, ((0, 4), (0, 1), (1, 2), (2, 3), (1, 5), (2, 6))),
    "G8": (6, ((0, 3), (0, 1), (1, 2), (1, 4), (2, 5))),
}


def _gen_path(spec: FamilySpec) -> Graph:
    (n,) = _params(spec, 1)
    _require(n >= 1, spec, "n >= 1")
    return path(n)


def _gen_cycle(spec: FamilySpec) -> Graph:
    (n,) = _params(spec, 1)
    _require(n >= 3, spec, "n >= 3")
    return cycle(n)


def _gen_complete(spec: FamilySpec) -> Graph:
    (n,) = _params(spec, 1)
    _require(n >= 1, spec, "n >= 1")
    return complete(n)


def _gen_complete_minus_edge(spec: FamilySpec) -> Graph:
    (n,) = _params(spec, 1)
    _require(n >= 2, spec, "n >= 2")
    return complete_minus_edge(n)


def _gen_star(spec: FamilySpec) -> Graph:
    (k,) = _params(spec, 1)
    _require(k >= 1, spec, "k >= 1")
    return star(k)


def _gen_z1(spec: FamilySpec) -> Graph:
    _params(spec, 0)
    return Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


def _gen_x(spec: FamilySpec) -> Graph:
    (order,) = _params(spec, 1)
    _require(order >= 6 and order % 2 == 0, spec, "even 2k with k >= 3")
    return x_graph(order)


def _gen_figure(spec: FamilySpec) -> Graph:
    _params(spec, 0)
    n, edges = FIGURE_GRAPHS[spec.name]
    return Graph(n, edges)


def _gen_star_bridge(spec: FamilySpec) -> Graph:
    (k,) = _params(spec, 1)
    _require(k >= 3, spec, "k >= 3")
    return star_bridge(k)


def _gen_center_bridge(spec: FamilySpec) -> Graph:
    (k,) = _params(spec, 1)
    _require(k >= 1, spec, "k >= 1")
    return center_bridge(k)


def _gen_clique_path(spec: FamilySpec) -> Graph:
    (k,) = _params(spec, 1)
    _require(k >= 2, spec, "k >= 2")
    return clique_path(k)


def _gen_universal_double(spec: FamilySpec) -> Graph:
    if spec.host is None:
        raise ParameterOutOfRange("universal_double needs a host graph")
    return universal_double(generate(spec.host))


def _gen_non_cut(spec: FamilySpec) -> Graph:
    if spec.host is None:
        raise ParameterOutOfRange("non_cut needs a host graph")
    return non_cut(generate(spec.host))


_GENERATORS: Dict[str, Callable[[FamilySpec], Graph]] = {
    "path": _gen_path,
    "cycle": _gen_cycle,
    "complete": _gen_complete,
    "complete_minus_edge": _gen_complete_minus_edge,
    "star": _gen_star,
    "Z1": _gen_z1,
    "X": _gen_x,
    **{name: _gen_figure for name in FIGURE_GRAPHS},
    "star_bridge": _gen_star_bridge,
    "center_bridge": _gen_center_bridge,
    "clique_path": _gen_clique_path,
    "universal_double": _gen_universal_double,
    "non_cut": _gen_non_cut,
}

_HOSTED = {"universal_double", "non_cut"}

FAMILY_NAMES = tuple(_GENERATORS)


def _canonical_name(name: str) -> str:
    for known in _GENERATORS:
        if known.lower() == name.lower():
            return known
    raise UnknownFamily(
        f"unknown graph family {name!r}; known families are "
        f"{', '.join(_GENERATORS)}"
    )


def generate(spec: Union[FamilySpec, str]) -> Graph:
    """
    Build the graph named by `spec` with its documented labeling.

    Args:
        spec:
            A `FamilySpec` or its `name:param:...` text.

    Returns:
        The graph.

    Raises:
        UnknownFamily:
            If the family name is not registered.
        ParameterOutOfRange:
            If a parameter lies outside the family's domain.
    """
    spec = _as_spec(spec)
    return _GENERATORS[_canonical_name(spec.name)](spec)


def distinguished_edge(spec: Union[FamilySpec, str]) -> Edge:
    """
    The edge `e` singled out by an edge-removal gadget: the bridging edge of
    `star_bridge`, `center_bridge` and `universal_double`, the path edge at
    `K_{k+1}` of `clique_path`, the edge `(x, h+x)` of `non_cut` and the
    middle edge `(n/2 - 1, n/2)` of a path (`n >= 2`).

    Raises:
        ParameterOutOfRange:
            If the family has no distinguished edge.
    """
    spec = _as_spec(spec)
    g = generate(spec)
    name = _canonical_name(spec.name)
    if name == "path" and g.n >= 2:
        return (g.n // 2 - 1, g.n // 2)
    if name == "star_bridge":
        (k,) = spec.params
        return (1, k + 2)
    if name == "center_bridge":
        (k,) = spec.params
        return (0, k + 1)
    if name == "clique_path":
        (k,) = spec.params
        return (k, 2 * k + 2)
    if name in _HOSTED:
        host = generate(spec.host)  # type: ignore
        x = universal_vertices(host)[0]
        return (x, host.n + x)
    raise ParameterOutOfRange(
        f"{format_family(spec)} has no distinguished edge"
    )


def in_C_s4(n: int, s4: int) -> bool:
    """
    Whether the cycle `C_n` lies in the class of cycles that are 4-critical
    for sequences starting `(1, 3, 3, s_4)`: `n >= 5` and either
    `n = 1, 2 (mod 4)`, or `n = 3 (mod 4)` and `s_4 < floor(n / 2)`.
    """
    if n < 5:
        return False
    if n % 4 in (1, 2):
        return True
    return n % 4 == 3 and s4 < n // 2


def is_diameter_k_critical(g: Graph, k: int) -> bool:
    """
    Whether `diam(g) = k` and deleting any edge increases the diameter.

    Deletions that disconnect `g` count as increases.

    Raises:
        Disconnected:
            If `g` is not connected.
    """
    if not is_connected(g):
        raise Disconnected(f"{g} is not connected")
    if all_pairs_distance(g).diameter() != k:
        return False
    for e in g.sorted_edges():
        h = delete_edge(g, e)
        if is_connected(h) and all_pairs_distance(h).diameter() <= k:
            return False
    return True


def periodic_coloring(
    n: int, period: Sequence[int], head: Sequence[int] = ()
) -> Coloring:
    """
    Color vertex `i` of a path or cycle on `n` vertices with `head[i]`, and
    the vertices after the head by repeating `period`.

    Example:
        >>> periodic_coloring(7, (1, 2, 3), head=(1, 2, 1, 3)).assignment
        (1, 2, 1, 3, 1, 2, 3)
    """
    head = tuple(head)
    return Coloring(
        head[i] if i < len(head) else period[(i - len(head)) % len(period)]
        for i in range(n)
    )
