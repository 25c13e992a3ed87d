"""Edge-coloring semantics: rainbow paths and the four connectivity predicates.

A rainbow path repeats no edge color, so with k colors it has at most k
edges. All existence checks below search over (used-color-set, vertex)
states, which bounds the depth at k automatically and keeps gadget-sized
instances cheap. Vertex sets are carried as integer bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import DisconnectedError, IndexOutOfRangeError
from .graph import UNREACHABLE, Graph, PairSet, Path, canonical_pair, check_path, distances_from


@dataclass(frozen=True)
class EdgeColoring:
    """Total assignment of color indices 0..color_count-1 to the host's edges.

    colors[i] is the color of host.edge_list()[i]; not every index needs to
    be used.
    """

    host: Graph
    color_count: int
    colors: tuple[int, ...]

    @property
    def assignment(self) -> dict[tuple[int, int], int]:
        return dict(zip(self.host.edge_list(), self.colors))

    def color_of(self, u: int, v: int) -> int:
        return self.assignment[canonical_pair(u, v)]


def edge_coloring(
    host: Graph,
    color_count: int,
    assignment: Mapping[tuple[int, int], int] | Iterable[int],
) -> EdgeColoring:
    """Build a validated coloring from an edge->color map or an aligned sequence."""
    if color_count < 1:
        raise ValueError("color_count must be positive")
    order = host.edge_list()
    if isinstance(assignment, Mapping):
        canon = {canonical_pair(u, v): c for (u, v), c in assignment.items()}
        missing = [e for e in order if e not in canon]
        if missing:
            raise ValueError(f"no color for edge {missing[0]}")
        extra = set(canon) - set(order)
        if extra:
            raise ValueError(f"color given for non-edge {sorted(extra)[0]}")
        colors = tuple(canon[e] for e in order)
    else:
        colors = tuple(assignment)
        if len(colors) != len(order):
            raise ValueError(f"expected {len(order)} colors, got {len(colors)}")
    for c in colors:
        if not 0 <= c < color_count:
            raise ValueError(f"color index {c} not in 0..{color_count - 1}")
    return EdgeColoring(host, color_count, colors)


def is_rainbow_path(c: EdgeColoring, p: Path) -> bool:
    """True iff the edge colors along p are pairwise distinct."""
    check_path(c.host, p)
    seen = c.assignment
    used = [seen[e] for e in p.edges()]
    return len(set(used)) == len(used)


def _color_neighbor_masks(c: EdgeColoring) -> list[list[int]]:
    # masks[color][v] = bitmask of the neighbors v reaches via edges of that color
    n = c.host.vertex_count
    masks = [[0] * n for _ in range(c.color_count)]
    for (u, v), col in zip(c.host.edge_list(), c.colors):
        masks[col][u] |= 1 << v
        masks[col][v] |= 1 << u
    return masks


def _rainbow_reach(masks: list[list[int]], color_count: int, source: int, stop_mask: int | None = None) -> int:
    """Bitmask of vertices reachable from source along some rainbow path.

    Level d of the search holds, per used-color set, the vertices reachable
    by a rainbow walk using exactly those d colors; shortcutting a repeated
    vertex in such a walk leaves a rainbow simple path, so reachability by
    walk and by path coincide.
    """
    reached = 1 << source
    frontier: dict[int, int] = {0: reached}
    for _ in range(color_count):
        nxt: dict[int, int] = {}
        for used, mask in frontier.items():
            for col in range(color_count):
                bit = 1 << col
                if used & bit:
                    continue
                by_color = masks[col]
                out = 0
                mm = mask
                while mm:
                    low = mm & -mm
                    out |= by_color[low.bit_length() - 1]
                    mm ^= low
                if out:
                    key = used | bit
                    nxt[key] = nxt.get(key, 0) | out
        if not nxt:
            break
        frontier = nxt
        for mask in nxt.values():
            reached |= mask
        if stop_mask is not None and stop_mask & ~reached == 0:
            break
    return reached


def exists_rainbow_path(c: EdgeColoring, u: int, v: int) -> bool:
    """True iff some simple u-v path of the host is rainbow under c."""
    n = c.host.vertex_count
    for x in (u, v):
        if not 0 <= x < n:
            raise IndexOutOfRangeError(f"vertex {x} not in range 0..{n - 1}")
    if u == v:
        raise ValueError("endpoints must differ")
    masks = _color_neighbor_masks(c)
    return bool(_rainbow_reach(masks, c.color_count, u, 1 << v) >> v & 1)


def _require_pair_connected(g: Graph, u: int, v: int) -> None:
    if distances_from(g, u)[v] == UNREACHABLE:
        raise DisconnectedError(f"no path between {u} and {v}")


def _geodesic_color_sets(c: EdgeColoring, source: int) -> list[set[int]]:
    """Per vertex, the color sets realizable along shortest paths from source.

    Walks over the shortest-path DAG in distance order; a vertex with an
    empty set at finite distance has no rainbow geodesic from source.
    """
    g = c.host
    dist = distances_from(g, source)
    colored_adj: list[list[tuple[int, int]]] = [[] for _ in range(g.vertex_count)]
    for (u, v), col in zip(g.edge_list(), c.colors):
        colored_adj[u].append((v, col))
        colored_adj[v].append((u, col))
    order = sorted((d, v) for v, d in enumerate(dist) if d != UNREACHABLE)
    sets: list[set[int]] = [set() for _ in range(g.vertex_count)]
    sets[source].add(0)
    for d, v in order:
        here = sets[v]
        if not here:
            continue
        for w, col in colored_adj[v]:
            if dist[w] != d + 1:
                continue
            bit = 1 << col
            target = sets[w]
            for s in here:
                if not s & bit:
                    target.add(s | bit)
    return sets


def exists_geodesic_rainbow_path(c: EdgeColoring, u: int, v: int) -> bool:
    """True iff at least one shortest u-v path is rainbow under c."""
    if u == v:
        raise ValueError("endpoints must differ")
    _require_pair_connected(c.host, u, v)
    return bool(_geodesic_color_sets(c, u)[v])


def first_non_rainbow_pair(
    c: EdgeColoring,
    required: PairSet | None = None,
    skip: PairSet | None = None,
) -> tuple[int, int] | None:
    """Earliest pair (by source, then target) lacking a rainbow path.

    With required given, only those pairs are examined; skip excludes pairs
    from the all-pairs scan. Unreachable pairs count as failures here; use
    the public predicates for the loud Disconnected errors.
    """
    masks = _color_neighbor_masks(c)
    n = c.host.vertex_count
    wanted: dict[int, int] = {}
    if required is not None:
        for u, v in required:
            wanted[u] = wanted.get(u, 0) | 1 << v
    else:
        for u in range(n - 1):
            mask = 0
            for v in range(u + 1, n):
                if skip is not None and (u, v) in skip:
                    continue
                mask |= 1 << v
            if mask:
                wanted[u] = mask
    for u in sorted(wanted):
        targets = wanted[u]
        reach = _rainbow_reach(masks, c.color_count, u, targets)
        missing = targets & ~reach
        if missing:
            return u, (missing & -missing).bit_length() - 1
    return None


def first_non_geodesic_rainbow_pair(
    c: EdgeColoring,
    required: PairSet | None = None,
    skip: PairSet | None = None,
) -> tuple[int, int] | None:
    """Earliest pair with no rainbow shortest path (unreachable pairs fail)."""
    n = c.host.vertex_count
    wanted: dict[int, set[int]] = {}
    if required is not None:
        for u, v in required:
            wanted.setdefault(u, set()).add(v)
    else:
        for u in range(n - 1):
            vs = {v for v in range(u + 1, n) if skip is None or (u, v) not in skip}
            if vs:
                wanted[u] = vs
    for u in sorted(wanted):
        sets = _geodesic_color_sets(c, u)
        for v in sorted(wanted[u]):
            if not sets[v]:
                return u, v
    return None


def is_rainbow_connected(c: EdgeColoring) -> bool:
    """True iff every vertex pair of the (connected) host has a rainbow path."""
    _raise_if_disconnected(c.host)
    return first_non_rainbow_pair(c) is None


def is_strong_rainbow_connected(c: EdgeColoring) -> bool:
    """True iff every vertex pair of the (connected) host has a rainbow geodesic."""
    _raise_if_disconnected(c.host)
    return first_non_geodesic_rainbow_pair(c) is None


def is_subset_rainbow_connected(c: EdgeColoring, pairs: PairSet) -> bool:
    """True iff every pair in pairs has a rainbow path; pairs must be connected."""
    for u, v in pairs:
        _require_pair_connected(c.host, u, v)
    return first_non_rainbow_pair(c, required=pairs) is None


def is_subset_strong_rainbow_connected(c: EdgeColoring, pairs: PairSet) -> bool:
    """True iff every pair in pairs has a rainbow geodesic; pairs must be connected."""
    for u, v in pairs:
        _require_pair_connected(c.host, u, v)
    return first_non_geodesic_rainbow_pair(c, required=pairs) is None


def _raise_if_disconnected(g: Graph) -> None:
    if g.vertex_count == 0:
        return
    dist = distances_from(g, 0)
    for v, d in enumerate(dist):
        if d == UNREACHABLE:
            raise DisconnectedError(f"no path between 0 and {v}")


def load_coloring_json(obj: dict, host: Graph) -> EdgeColoring:
    """Decode {"k": int, "colors": [[u, v, c], ...]} against a host graph."""
    from .errors import ParseError

    if not isinstance(obj, dict) or "k" not in obj or "colors" not in obj:
        raise ParseError("coloring JSON needs 'k' and 'colors'")
    k = obj["k"]
    if not isinstance(k, int) or k < 1:
        raise ParseError("'k' must be a positive integer")
    assignment: dict[tuple[int, int], int] = {}
    for entry in obj["colors"]:
        if not (isinstance(entry, list) and len(entry) == 3):
            raise ParseError(f"bad color triple {entry!r}")
        u, v, col = entry
        key = canonical_pair(u, v)
        if key in assignment:
            raise ParseError(f"edge ({u}, {v}) colored twice")
        assignment[key] = col
    try:
        return edge_coloring(host, k, assignment)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def coloring_json(c: EdgeColoring) -> dict:
    return {
        "k": c.color_count,
        "colors": [[u, v, col] for (u, v), col in zip(c.host.edge_list(), c.colors)],
    }
