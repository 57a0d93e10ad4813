"""Simple connected graphs with a canonical edge order.

Vertices are ``0..n-1``. Edges are stored as a strictly increasing tuple of
pairs ``(u, v)`` with ``u < v``; an edge's position in that tuple is its
identity, and colorings are indexed by it.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InvalidParameterError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple connected graph.

    The constructor only accepts the canonical form and raises
    :class:`InvalidParameterError` otherwise; use :meth:`from_edges` to
    normalize an arbitrary edge iterable.
    """

    vertex_count: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        n = self.vertex_count
        if not isinstance(n, int) or n < 1:
            raise InvalidParameterError(f"vertex_count must be a positive integer, got {n!r}")
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in self.edges))
        prev = None
        for u, v in self.edges:
            if not (0 <= u < v < n):
                raise InvalidParameterError(f"edge ({u}, {v}) is not of the form u < v within 0..{n - 1}")
            if prev is not None and (u, v) <= prev:
                raise InvalidParameterError("edge list must be strictly increasing in lexicographic order")
            prev = (u, v)
        if not self._is_connected():
            raise InvalidParameterError("graph is not connected")

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph from edges in any order or orientation."""
        normalized = set()
        for u, v in edges:
            if u == v:
                raise InvalidParameterError(f"loop at vertex {u}")
            normalized.add((min(u, v), max(u, v)))
        return cls(vertex_count, tuple(sorted(normalized)))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(x)) for x in nbrs)

    @cached_property
    def incidence(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, the sorted ``(neighbor, edge index)`` pairs."""
        inc: list[list[tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        for idx, (u, v) in enumerate(self.edges):
            inc[u].append((v, idx))
            inc[v].append((u, idx))
        return tuple(tuple(sorted(x)) for x in inc)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def index_of(self, u: int, v: int) -> int:
        """Index of edge ``{u, v}``; raises ``KeyError`` if absent."""
        return self.edge_index[(u, v) if u < v else (v, u)]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_index

    def _is_connected(self) -> bool:
        nbrs: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in nbrs[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == self.vertex_count


@dataclass(frozen=True)
class DistanceTable:
    source: int
    dist: tuple[int, ...]


def build_cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameterError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def build_path(n: int) -> Graph:
    if n < 1:
        raise InvalidParameterError(f"a path needs at least 1 vertex, got {n}")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def build_complete(n: int) -> Graph:
    if n < 1:
        raise InvalidParameterError(f"a complete graph needs at least 1 vertex, got {n}")
    return Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


def build_star(leaves: int) -> Graph:
    """``K_{1,leaves}`` with the center at vertex 0."""
    if leaves < 1:
        raise InvalidParameterError(f"a star needs at least 1 leaf, got {leaves}")
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def _check_vertex(g: Graph, v: int) -> None:
    if not (0 <= v < g.vertex_count):
        raise InvalidParameterError(f"vertex {v} out of range 0..{g.vertex_count - 1}")


def bfs_distances(g: Graph, source: int) -> DistanceTable:
    _check_vertex(g, source)
    dist = [-1] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return DistanceTable(source, tuple(dist))


def eccentricity(g: Graph, v: int) -> int:
    return max(bfs_distances(g, v).dist)


def diameter(g: Graph) -> int:
    """Largest distance between two vertices; 0 for the one-vertex graph."""
    return max(eccentricity(g, v) for v in range(g.vertex_count))


@dataclass(frozen=True)
class GeodesicDag:
    """Shortest-path DAG rooted at ``source``.

    ``preds[t]`` lists the neighbors of ``t`` one step closer to the source,
    so every chain ``source -> ... -> t`` through ``preds`` is a geodesic and
    every geodesic arises this way.
    """

    source: int
    dist: tuple[int, ...]
    preds: tuple[tuple[int, ...], ...]

    @cached_property
    def order(self) -> tuple[int, ...]:
        """Vertices sorted by distance (ties by id)."""
        return tuple(sorted(range(len(self.dist)), key=lambda v: (self.dist[v], v)))

    def count_geodesics(self, target: int) -> int:
        counts = [0] * len(self.dist)
        counts[self.source] = 1
        for v in self.order:
            if v != self.source:
                counts[v] = sum(counts[p] for p in self.preds[v])
        return counts[target]

    def geodesics(self, target: int) -> list[tuple[int, ...]]:
        """All geodesics from the source to ``target``, in lexicographic order."""
        out: list[tuple[int, ...]] = []

        def walk(v: int, suffix: list[int]) -> None:
            if v == self.source:
                out.append(tuple(reversed(suffix + [v])))
                return
            for p in self.preds[v]:
                walk(p, suffix + [v])

        walk(target, [])
        return sorted(out)


def geodesic_dag(g: Graph, source: int) -> GeodesicDag:
    table = bfs_distances(g, source)
    dist = table.dist
    preds = tuple(
        tuple(p for p in g.adjacency[t] if dist[p] == dist[t] - 1) for t in range(g.vertex_count)
    )
    return GeodesicDag(source, dist, preds)
