"""Undirected simple graphs: exact distances, bounded path enumeration, geodesics.

Vertices are dense 0-based integers; edges are stored canonically with the
smaller endpoint first. Everything here is immutable after construction and
all operations are pure, so values can be shared freely.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    DisconnectedError,
    IndexOutOfRangeError,
    PathNotInGraphError,
    SelfLoopError,
)

UNREACHABLE = math.inf


def canonical_pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph over vertices 0..vertex_count-1."""

    vertex_count: int
    edges: frozenset[tuple[int, int]]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def edge_list(self) -> list[tuple[int, int]]:
        """Edges sorted by endpoints; the canonical edge order used everywhere."""
        return sorted(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_pair(u, v) in self.edges

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


def _check_vertex(v: int, vertex_count: int) -> None:
    if not 0 <= v < vertex_count:
        raise IndexOutOfRangeError(f"vertex {v} not in range 0..{vertex_count - 1}")


def new_graph(vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph, canonicalizing edges and collapsing duplicates.

    Rejects self-loops and out-of-range endpoints.
    """
    if vertex_count < 0:
        raise ValueError("vertex_count must be nonnegative")
    canon: set[tuple[int, int]] = set()
    for u, v in edges:
        _check_vertex(u, vertex_count)
        _check_vertex(v, vertex_count)
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        canon.add(canonical_pair(u, v))
    neighbor_sets: list[set[int]] = [set() for _ in range(vertex_count)]
    for u, v in canon:
        neighbor_sets[u].add(v)
        neighbor_sets[v].add(u)
    adjacency = tuple(tuple(sorted(s)) for s in neighbor_sets)
    return Graph(vertex_count, frozenset(canon), adjacency)


@dataclass(frozen=True)
class Path:
    """A simple path given by its vertex sequence."""

    vertices: tuple[int, ...]

    @property
    def edge_count(self) -> int:
        return len(self.vertices) - 1

    def edges(self) -> tuple[tuple[int, int], ...]:
        vs = self.vertices
        return tuple(canonical_pair(vs[i], vs[i + 1]) for i in range(len(vs) - 1))


def check_path(g: Graph, p: Path) -> None:
    """Raise PathNotInGraphError unless p is a simple path of g."""
    vs = p.vertices
    if len(vs) == 0:
        raise PathNotInGraphError("empty vertex sequence")
    if len(set(vs)) != len(vs):
        raise PathNotInGraphError(f"repeated vertex in {vs}")
    for v in vs:
        if not 0 <= v < g.vertex_count:
            raise PathNotInGraphError(f"vertex {v} out of range")
    for a, b in zip(vs, vs[1:]):
        if not g.has_edge(a, b):
            raise PathNotInGraphError(f"missing edge ({a}, {b})")


@dataclass(frozen=True)
class PairSet:
    """Unordered vertex pairs, stored canonically with duplicates collapsed."""

    pairs: frozenset[tuple[int, int]]

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self.pairs))

    def __len__(self) -> int:
        return len(self.pairs)

    def __contains__(self, pair: tuple[int, int]) -> bool:
        u, v = pair
        return canonical_pair(u, v) in self.pairs

    def as_lists(self) -> list[list[int]]:
        return [[u, v] for u, v in sorted(self.pairs)]


def make_pairs(pairs: Iterable[tuple[int, int]], vertex_count: int | None = None) -> PairSet:
    canon: set[tuple[int, int]] = set()
    for u, v in pairs:
        if u == v:
            raise SelfLoopError(f"pair ({u}, {v}) joins a vertex to itself")
        if vertex_count is not None:
            _check_vertex(u, vertex_count)
            _check_vertex(v, vertex_count)
        canon.add(canonical_pair(u, v))
    return PairSet(frozenset(canon))


def all_pairs(vertex_count: int) -> PairSet:
    return PairSet(frozenset((u, v) for u in range(vertex_count) for v in range(u + 1, vertex_count)))


def distances_from(g: Graph, source: int) -> list[int | float]:
    """Breadth-first shortest-path distances; unreachable vertices get math.inf."""
    _check_vertex(source, g.vertex_count)
    dist: list[int | float] = [UNREACHABLE] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in g.adjacency[v]:
            if dist[w] == UNREACHABLE:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def distance(g: Graph, u: int, v: int) -> int | float:
    return distances_from(g, u)[v]


def diameter(g: Graph) -> int | float:
    """Largest pairwise distance; math.inf when disconnected, 0 for <= 1 vertex."""
    if g.vertex_count <= 1:
        return 0
    worst: int | float = 0
    for source in range(g.vertex_count):
        for d in distances_from(g, source):
            if d is UNREACHABLE:
                return UNREACHABLE
            if d > worst:
                worst = d
    return worst


def is_connected(g: Graph) -> bool:
    if g.vertex_count <= 1:
        return True
    return UNREACHABLE not in distances_from(g, 0)


def is_bipartite(g: Graph) -> tuple[bool, tuple[int, ...] | None]:
    """2-color by BFS; returns (True, side labels) or (False, None)."""
    side = [-1] * g.vertex_count
    for start in range(g.vertex_count):
        if side[start] != -1:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if side[w] == -1:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return False, None
    return True, tuple(side)


def simple_paths_up_to(g: Graph, u: int, v: int, max_len: int) -> list[Path]:
    """All simple u-v paths with at most max_len edges, in lexicographic order.

    Depth-first with ascending neighbor order; branches that cannot reach v
    within the remaining budget are pruned, which does not change the output.
    """
    _check_vertex(u, g.vertex_count)
    _check_vertex(v, g.vertex_count)
    if u == v:
        raise ValueError("endpoints must differ")
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    dist_to_target = distances_from(g, v)
    out: list[Path] = []
    on_path = [False] * g.vertex_count
    on_path[u] = True
    stack = [u]

    def extend(x: int) -> None:
        used = len(stack) - 1
        for w in g.adjacency[x]:
            if w == v:
                if used + 1 <= max_len:
                    out.append(Path(tuple(stack) + (v,)))
                continue
            if on_path[w] or used + 1 + dist_to_target[w] > max_len:
                continue
            on_path[w] = True
            stack.append(w)
            extend(w)
            stack.pop()
            on_path[w] = False

    extend(u)
    return out


def geodesics(g: Graph, u: int, v: int) -> list[Path]:
    """All shortest u-v paths, in lexicographic order, via the shortest-path DAG."""
    _check_vertex(u, g.vertex_count)
    _check_vertex(v, g.vertex_count)
    if u == v:
        raise ValueError("endpoints must differ")
    dist_u = distances_from(g, u)
    if dist_u[v] is UNREACHABLE:
        raise DisconnectedError(f"no path between {u} and {v}")
    dist_v = distances_from(g, v)
    total = dist_u[v]
    out: list[Path] = []
    stack = [u]

    def extend(x: int) -> None:
        for w in g.adjacency[x]:
            if dist_u[w] != dist_u[x] + 1 or dist_u[w] + dist_v[w] != total:
                continue
            if w == v:
                out.append(Path(tuple(stack) + (v,)))
                continue
            stack.append(w)
            extend(w)
            stack.pop()

    extend(u)
    return out
