# Copyright 2025 PackCritS Project Developers. See the top-level COPYRIGHT file
# for details.
#
# SPDX-License-Identifier: MIT

"""
graph6 and edge-list ingestion

graph6 strings are decoded and encoded through networkx after a strict
validation pass that pinpoints the offending byte of malformed input. Edge
lists are plain text with one `u v` pair per line, an optional `n=<k>` header
line for graphs with isolated vertices, blank lines, and `#` comments.

Example:
    >>> from PackCritS.io import parse_graph6, emit_graph6, parse_edge_list
    >>> g = parse_graph6("D?{")
    >>> emit_graph6(g)
    'D?{'
    >>> parse_edge_list("0 1\\n1 2").m
    2
"""

import os
from typing import Iterator, List, Union

import networkx as nx

from PackCritS.errors import MalformedEdgeList, MalformedGraph6
from PackCritS.graph import Graph

GRAPH6_HEADER = ">>graph6<<"


def _graph6_order(data: bytes) -> tuple:
    """Decode the order prefix of a graph6 string into `(n, prefix_len)`."""
    if len(data) == 0:
        raise MalformedGraph6("empty graph6 string", 0)
    for i, b in enumerate(data[: min(len(data), 8)]):
        if not 63 <= b <= 126:
            raise MalformedGraph6(f"invalid graph6 character {chr(b)!r}", i)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) < 4:
        raise MalformedGraph6("truncated order prefix", len(data))
    if data[1] != 126:
        n = 0
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
        return n, 4
    if len(data) < 8:
        raise MalformedGraph6("truncated order prefix", len(data))
    n = 0
    for b in data[2:8]:
        n = (n << 6) | (b - 63)
    return n, 8


def parse_graph6(text: Union[str, bytes]) -> Graph:
    """
    Decode a single graph6 string.

    Args:
        text:
            The graph6 encoding, optionally preceded by the `>>graph6<<`
            header and followed by a newline.

    Returns:
        The decoded graph with vertices in encoding order.

    Raises:
        MalformedGraph6:
            If the string is not valid graph6, with the byte offset of the
            first problem.
    """
    if isinstance(text, str):
        try:
            data = text.encode("ascii")
        except UnicodeEncodeError as err:
            raise MalformedGraph6(
                f"invalid graph6 character {text[err.start]!r}", err.start
            )
    else:
        data = text
    base = 0
    if data.startswith(GRAPH6_HEADER.encode()):
        base = len(GRAPH6_HEADER)
        data = data[base:]
    data = data.rstrip(b"\r\n")
    n, prefix = _graph6_order(data)
    if n == 0:
        raise MalformedGraph6("graph6 string encodes the empty graph", base)
    expected = prefix + (n * (n - 1) // 2 + 5) // 6
    for i in range(prefix, len(data)):
        if not 63 <= data[i] <= 126:
            raise MalformedGraph6(
                f"invalid graph6 character {chr(data[i])!r}", base + i
            )
    if len(data) != expected:
        raise MalformedGraph6(
            f"expected {expected} bytes for n={n}, found {len(data)}",
            base + min(len(data), expected),
        )
    nxg = nx.from_graph6_bytes(data)
    return from_networkx(nxg)


def emit_graph6(g: Graph) -> str:
    """Encode `g` as a graph6 string without header or trailing newline."""
    out = nx.to_graph6_bytes(to_networkx(g), header=False)
    return out.decode("ascii").rstrip("\n")


def to_networkx(g: Graph) -> nx.Graph:
    nxg = nx.Graph()
    nxg.add_nodes_from(g.vertices())
    nxg.add_edges_from(g.sorted_edges())
    return nxg


def from_networkx(nxg: nx.Graph) -> Graph:
    """
    Convert a networkx graph, numbering vertices in `nxg.nodes` order.
    """
    index = {v: i for i, v in enumerate(nxg.nodes)}
    return Graph(len(index), [(index[a], index[b]) for a, b in nxg.edges])


def parse_edge_list(text: Union[str, bytes]) -> Graph:
    """
    Parse a plain-text edge list.

    Each non-blank, non-comment line is either `u v` with non-negative
    integer endpoints or the header `n=<k>`. The order is the header value if
    given, else one more than the largest endpoint.

    Raises:
        MalformedEdgeList:
            If a line cannot be parsed, an edge is a self-loop or out of the
            header's range, or no vertex is defined at all. The offset is the
            byte at which the offending line starts.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    n_header = None
    edges: List[tuple] = list()
    offset = 0
    max_vertex = -1
    for line in text.splitlines(keepends=True):
        start = offset
        offset += len(line.encode("utf-8"))
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if body.replace(" ", "").startswith("n="):
            try:
                n_header = int(body.replace(" ", "")[2:])
            except ValueError:
                raise MalformedEdgeList(f"bad order header {body!r}", start)
            if n_header < 1:
                raise MalformedEdgeList(
                    f"order must be positive, not {n_header}", start
                )
            continue
        tokens = body.split()
        if len(tokens) != 2:
            raise MalformedEdgeList(f"expected 'u v', found {body!r}", start)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise MalformedEdgeList(f"non-integer vertex in {body!r}", start)
        if u < 0 or v < 0:
            raise MalformedEdgeList(f"negative vertex in {body!r}", start)
        if u == v:
            raise MalformedEdgeList(f"self-loop at vertex {u}", start)
        if n_header is not None and max(u, v) >= n_header:
            raise MalformedEdgeList(
                f"edge {(u, v)} out of range for n={n_header}", start
            )
        max_vertex = max(max_vertex, u, v)
        edges.append((u, v))
    n = n_header if n_header is not None else max_vertex + 1
    if max_vertex >= n:
        raise MalformedEdgeList(
            f"vertex {max_vertex} out of range for n={n}", offset
        )
    if n < 1:
        raise MalformedEdgeList("edge list defines no vertices", offset)
    return Graph(n, edges)


def emit_edge_list(g: Graph) -> str:
    """
    Render `g` as an edge list, with an order header whenever the last
    vertex is isolated.
    """
    lines = [f"{u} {v}" for u, v in g.sorted_edges()]
    if g.m == 0 or max(v for _, v in g.edges) != g.n - 1:
        lines.insert(0, f"n={g.n}")
    return "\n".join(lines) + "\n"


def read_graph6_file(path: Union[str, os.PathLike]) -> Iterator[Graph]:
    """
    Stream the graphs of a graph6 corpus, one graph per line.

    A leading `>>graph6<<` header and blank lines are tolerated.
    Offsets of `MalformedGraph6` errors are relative to the whole file.
    """
    offset = 0
    with open(path, "rb") as f:
        for line in f:
            start = offset
            offset += len(line)
            body = line.strip()
            if not body:
                continue
            try:
                yield parse_graph6(body)
            except MalformedGraph6 as e:
                raise MalformedGraph6(
                    f"{os.fspath(path)}: line at byte {start} is malformed",
                    start + e.offset,
                ) from e
