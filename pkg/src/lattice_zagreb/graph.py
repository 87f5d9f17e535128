"""Undirected simple graphs with the degree queries index computation needs."""

from __future__ import annotations

from bisect import bisect_left, insort
from collections import Counter
from typing import Iterable, Iterator, TextIO

__all__ = [
    "GraphError",
    "VertexError",
    "SelfLoopError",
    "DuplicateEdgeError",
    "EdgeListFormatError",
    "Graph",
    "EdgePartition",
    "new_graph",
    "graph_from_edges",
    "degree_pair_partition",
    "format_edgelist",
    "write_edgelist",
    "parse_edgelist",
    "read_edgelist",
]


class GraphError(ValueError):
    pass


class VertexError(GraphError, IndexError):
    pass


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class EdgeListFormatError(GraphError):
    pass


DegreePair = tuple[int, int]
EdgePartition = dict[DegreePair, int]


class Graph:
    """Simple undirected graph on vertices ``0 .. vertex_count - 1``.

    Neighbour lists are kept sorted so iteration order never depends on
    insertion order. Adding a self-loop or an edge that already exists
    raises instead of being silently ignored.
    """

    __slots__ = ("_adj", "_edge_count")

    def __init__(self, vertex_count: int = 0) -> None:
        if vertex_count < 0:
            raise GraphError(f"vertex_count must be non-negative, got {vertex_count}")
        self._adj: list[list[int]] = [[] for _ in range(vertex_count)]
        self._edge_count = 0

    def __repr__(self) -> str:
        return f"Graph(vertices={self.vertex_count}, edges={self.edge_count})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    @property
    def vertex_count(self) -> int:
        return len(self._adj)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def _check(self, v: int) -> None:
        if not 0 <= v < len(self._adj):
            raise VertexError(f"vertex {v} out of range [0, {len(self._adj)})")

    def add_edge(self, u: int, v: int) -> None:
        self._check(u)
        self._check(v)
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if self.has_edge(u, v):
            raise DuplicateEdgeError(f"edge {{{u}, {v}}} already present")
        insort(self._adj[u], v)
        insort(self._adj[v], u)
        self._edge_count += 1

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        nbrs = self._adj[u]
        i = bisect_left(nbrs, v)
        return i < len(nbrs) and nbrs[i] == v

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check(v)
        return tuple(self._adj[v])

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self._adj]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield every edge once as ``(u, v)`` with ``u < v``, lexicographically sorted."""
        for u, nbrs in enumerate(self._adj):
            for v in nbrs:
                if v > u:
                    yield u, v

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges())


def new_graph(vertex_count: int) -> Graph:
    return Graph(vertex_count)


def graph_from_edges(vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
    g = Graph(vertex_count)
    for u, v in edges:
        g.add_edge(u, v)
    return g


def degree_pair_partition(g: Graph) -> EdgePartition:
    """Count edges by the unordered degree pair of their endpoints.

    Keys are normalised to ``(low, high)``; the returned dict is sorted by key.
    """
    deg = g.degrees()
    counts: Counter[DegreePair] = Counter()
    for u, v in g.edges():
        du, dv = deg[u], deg[v]
        counts[(du, dv) if du <= dv else (dv, du)] += 1
    return dict(sorted(counts.items()))


def format_edgelist(g: Graph) -> str:
    lines = [f"p {g.vertex_count} {g.edge_count}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def write_edgelist(g: Graph, fh: TextIO) -> None:
    fh.write(format_edgelist(g))


def parse_edgelist(text: str) -> Graph:
    """Parse the ``p <V> <E>`` / ``e <u> <v>`` text format.

    Strict: single spaces, ``u < v``, edges sorted, declared count must match.
    """
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise EdgeListFormatError("empty edge list")
    header = lines[0].split(" ")
    if len(header) != 3 or header[0] != "p":
        raise EdgeListFormatError(f"bad header line: {lines[0]!r}")
    try:
        nv, ne = int(header[1]), int(header[2])
    except ValueError as exc:
        raise EdgeListFormatError(f"bad header line: {lines[0]!r}") from exc
    if len(lines) - 1 != ne:
        raise EdgeListFormatError(f"header declares {ne} edges, found {len(lines) - 1}")
    g = Graph(nv)
    prev = (-1, -1)
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split(" ")
        if len(parts) != 3 or parts[0] != "e":
            raise EdgeListFormatError(f"line {lineno}: bad edge line {line!r}")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError as exc:
            raise EdgeListFormatError(f"line {lineno}: bad edge line {line!r}") from exc
        if u >= v:
            raise EdgeListFormatError(f"line {lineno}: expected u < v, got {u} {v}")
        if (u, v) <= prev:
            raise EdgeListFormatError(f"line {lineno}: edges not in sorted order")
        prev = (u, v)
        g.add_edge(u, v)
    return g


def read_edgelist(fh: TextIO) -> Graph:
    return parse_edgelist(fh.read())
