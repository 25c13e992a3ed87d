"""Instance constructors: star reductions, the bipartite strong-rainbow
extension, the distance-gadget family, and the assembled rainbow-connectivity
instances with their explicit witness colorings.

Vertex layout is fixed so verifiers and serialized output have stable
addressing: base vertices come first (0..n-1), then layer blocks in
construction order. Matchings and tie-breaks that the constructions leave
open are pinned to the identity/canonical choice for reproducibility.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .coloring import (
    EdgeColoring,
    edge_coloring,
    is_subset_rainbow_connected,
    is_subset_strong_rainbow_connected,
)
from .errors import (
    DomainMismatchError,
    EmptyGraphError,
    ImproperColoringError,
    IndexOutOfRangeError,
    InvalidOrderError,
    MissingLayerTagsError,
    NotAStarError,
    NotSubsetRainbowConnectedError,
    PairNotLeafPairError,
    TooFewColorsError,
)
from .graph import Graph, PairSet, canonical_pair, make_pairs, new_graph


@dataclass(frozen=True)
class SubsetInstance:
    """A graph, a set of vertex pairs to connect, and a color budget."""

    graph: Graph
    pairs: PairSet
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be positive")
        n = self.graph.vertex_count
        for u, v in self.pairs:
            if not (0 <= u < n and 0 <= v < n):
                raise IndexOutOfRangeError(f"pair ({u}, {v}) out of range")


@dataclass(frozen=True)
class StarInstance:
    """A star with leaves 0..leaf_count-1, center leaf_count, and leaf pairs.

    Leaf i stands for vertex i of the source graph, so the leaf-to-source
    map is the identity. below_hardness_regime flags color budgets where
    the encoded decision problem is easy (k < 3).
    """

    graph: Graph
    leaf_count: int
    pairs: PairSet
    k: int
    below_hardness_regime: bool

    @property
    def center(self) -> int:
        return self.leaf_count

    @property
    def leaves(self) -> range:
        return range(self.leaf_count)


def star_reduction(g: Graph, k: int) -> StarInstance:
    """Encode k-vertex-colorability of g as a subset connectivity question.

    The star has one leaf per vertex of g plus a fresh center; the pairs are
    exactly the edges of g lifted to leaf pairs.
    """
    if g.vertex_count == 0:
        raise EmptyGraphError("source graph has no vertices")
    if k < 1:
        raise ValueError("k must be positive")
    n = g.vertex_count
    star = new_graph(n + 1, [(i, n) for i in range(n)])
    pairs = make_pairs(g.edges, n)
    return StarInstance(star, n, pairs, k, below_hardness_regime=k < 3)


def lift_vertex_coloring(inst: StarInstance, vc: Sequence[int]) -> EdgeColoring:
    """Turn a proper vertex coloring of the source into a star edge coloring.

    Edge (leaf_i, center) receives the color of source vertex i; the result
    gives every required pair a rainbow (and, paths being unique, geodesic
    rainbow) connection.
    """
    if len(vc) != inst.leaf_count:
        raise ImproperColoringError(f"expected {inst.leaf_count} vertex colors, got {len(vc)}")
    for c in vc:
        if not 0 <= c < inst.k:
            raise ImproperColoringError(f"color {c} not in 0..{inst.k - 1}")
    for u, v in inst.pairs:
        if vc[u] == vc[v]:
            raise ImproperColoringError(f"adjacent source vertices {u}, {v} share color {vc[u]}")
    # sorted star edges are (0, center), (1, center), ... so colors align with leaves
    return EdgeColoring(inst.graph, inst.k, tuple(vc))


def project_star_coloring(inst: StarInstance, c: EdgeColoring) -> tuple[int, ...]:
    """Read a vertex coloring back off the star edges; inverse of the lift.

    Requires c to rainbow-connect the instance pairs, which forces distinct
    colors on the two edges of each pair and hence a proper result.
    """
    if c.host != inst.graph:
        raise DomainMismatchError("coloring does not belong to this star")
    if not is_subset_rainbow_connected(c, inst.pairs):
        raise NotSubsetRainbowConnectedError("coloring misses a required pair")
    return tuple(c.colors)


def _nonpairs(n: int, pairs: PairSet) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in pairs]


@dataclass(frozen=True, eq=False)
class SrcExtension:
    """The star grown into a bipartite graph whose every pair is constrained.

    New layer one (anchors + bridges) attaches to the leaves, its twin layer
    attaches to the center, and the two layers are joined completely. The
    sides ({center} + layer one, leaves + twin layer) witness bipartiteness.
    """

    star: StarInstance
    graph: Graph
    anchors: tuple[int, ...]
    bridges: dict[tuple[int, int], int]
    anchor_twins: tuple[int, ...]
    bridge_twins: dict[tuple[int, int], int]

    @property
    def layer_one(self) -> tuple[int, ...]:
        return tuple(sorted(self.anchors + tuple(self.bridges.values())))

    @property
    def twin_layer(self) -> tuple[int, ...]:
        return tuple(sorted(self.anchor_twins + tuple(self.bridge_twins.values())))

    @property
    def matching(self) -> tuple[tuple[int, int], ...]:
        pairs = [(a, b) for a, b in zip(self.anchors, self.anchor_twins)]
        pairs += [(self.bridges[t], self.bridge_twins[t]) for t in sorted(self.bridges)]
        return tuple(canonical_pair(a, b) for a, b in sorted(pairs))

    def sides(self) -> tuple[tuple[int, ...], ...]:
        a = tuple(sorted((self.star.center,) + self.layer_one))
        b = tuple(sorted(tuple(self.star.leaves) + self.twin_layer))
        return a, b

    def edge_layer(self, u: int, v: int) -> str:
        """Classify an edge: star | leaf_link | cross_link | center_link."""
        u, v = canonical_pair(u, v)
        center = self.star.center
        leaves = set(self.star.leaves)
        one = set(self.layer_one)
        two = set(self.twin_layer)
        if v == center and u in leaves:
            return "star"
        if u in leaves and v in one:
            return "leaf_link"
        if u in one and v in two:
            return "cross_link"
        if u == center and v in two:
            return "center_link"
        raise DomainMismatchError(f"({u}, {v}) is not an edge of the extension")


def src_extension(inst: StarInstance) -> SrcExtension:
    """Extend a star instance so that the pair constraints become global.

    Per leaf i one new vertex (anchor) on each side; per unconstrained leaf
    pair one bridge per side. Bridges give every non-pair a two-edge detour,
    the complete join makes everything else close, and each required pair
    keeps its unique two-edge path through the center.
    """
    n = inst.leaf_count
    expected = frozenset(canonical_pair(i, inst.center) for i in range(n))
    if inst.graph.edges != expected:
        raise NotAStarError("instance graph is not the expected star")
    for u, v in inst.pairs:
        if u >= n or v >= n:
            raise PairNotLeafPairError(f"pair ({u}, {v}) touches the center")
    nonpairs = _nonpairs(n, inst.pairs)
    z = len(nonpairs)
    layer_size = n + z
    first = n + 1
    anchors = tuple(first + i for i in range(n))
    bridges = {t: first + n + idx for idx, t in enumerate(nonpairs)}
    anchor_twins = tuple(a + layer_size for a in anchors)
    bridge_twins = {t: b + layer_size for t, b in bridges.items()}

    edges: list[tuple[int, int]] = [(i, inst.center) for i in range(n)]
    edges += [(i, anchors[i]) for i in range(n)]
    for (i, j), b in bridges.items():
        edges.append((i, b))
        edges.append((j, b))
    layer_one = anchors + tuple(bridges[t] for t in nonpairs)
    twin_layer = anchor_twins + tuple(bridge_twins[t] for t in nonpairs)
    edges += [(x, y) for x in layer_one for y in twin_layer]
    edges += [(inst.center, y) for y in twin_layer]

    graph = new_graph(n + 1 + 2 * layer_size, edges)
    return SrcExtension(inst, graph, anchors, dict(bridges), anchor_twins, dict(bridge_twins))


def src_witness_coloring(ext: SrcExtension, base: EdgeColoring) -> EdgeColoring:
    """Extend a feasible star coloring to the whole extension.

    Keeps the star edges, sends anchors' leaf links and all center links to
    color 2, splits each bridge's two leaf links as 0/1, and colors the
    complete join 0 on the identity matching and 1 elsewhere. Needs at
    least three colors.
    """
    if base.host != ext.star.graph:
        raise DomainMismatchError("base coloring does not belong to the extension's star")
    if base.color_count < 3:
        raise TooFewColorsError("the extension coloring needs at least 3 colors")
    if not is_subset_strong_rainbow_connected(base, ext.star.pairs):
        raise NotSubsetRainbowConnectedError("base coloring misses a required pair")
    k = base.color_count
    center = ext.star.center
    colors: dict[tuple[int, int], int] = {}
    for i in ext.star.leaves:
        colors[canonical_pair(i, center)] = base.color_of(i, center)
        colors[canonical_pair(i, ext.anchors[i])] = 2
    for (i, j), b in ext.bridges.items():
        colors[canonical_pair(i, b)] = 0
        colors[canonical_pair(j, b)] = 1
    matched = set(ext.matching)
    for x in ext.layer_one:
        for y in ext.twin_layer:
            colors[canonical_pair(x, y)] = 0 if canonical_pair(x, y) in matched else 1
    for y in ext.twin_layer:
        colors[canonical_pair(center, y)] = 2
    return edge_coloring(ext.graph, k, colors)


@dataclass(frozen=True, eq=False)
class Gadget:
    """An order-k distance gadget with designated base vertices.

    Base vertices sit at indices 0..n-1 and carry the encoded pair set:
    encoded pairs end up at distance at least order+1, every other base
    pair at distance exactly order. roles maps each vertex to a tagged
    tuple; for orders above three the construction trace (inner gadget,
    copy triples, carried map) drives the recursive witness coloring.
    """

    graph: Graph
    order: int
    base_vertices: tuple[int, ...]
    pairs: PairSet
    roles: dict[int, tuple]
    inner: "Gadget | None" = None
    copies: dict[int, tuple[int, int, int]] | None = None
    carried: dict[int, int] | None = None

    @property
    def base_count(self) -> int:
        return len(self.base_vertices)


def _check_gadget_args(n: int, pairs: PairSet) -> None:
    if n < 2:
        raise ValueError("need at least two base vertices")
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRangeError(f"pair ({u}, {v}) out of range 0..{n - 1}")


def build_order2_gadget(n: int, pairs: PairSet) -> Gadget:
    """Order-2 gadget: a hub clique of anchors and bridges below the bases.

    Each base vertex hangs off its own anchor; every unconstrained base
    pair additionally shares a bridge, giving it a two-edge connection.
    Constrained pairs must travel base-anchor-anchor-base, length three.
    """
    _check_gadget_args(n, pairs)
    nonpairs = _nonpairs(n, pairs)
    anchors = tuple(n + i for i in range(n))
    bridges = {t: 2 * n + idx for idx, t in enumerate(nonpairs)}
    hub = list(anchors) + [bridges[t] for t in nonpairs]

    edges: list[tuple[int, int]] = [(i, anchors[i]) for i in range(n)]
    for (i, j), b in bridges.items():
        edges.append((i, b))
        edges.append((j, b))
    edges += [(x, y) for idx, x in enumerate(hub) for y in hub[idx + 1 :]]

    roles: dict[int, tuple] = {i: ("base", i) for i in range(n)}
    roles.update({anchors[i]: ("anchor", i) for i in range(n)})
    roles.update({b: ("bridge", i, j) for (i, j), b in bridges.items()})
    graph = new_graph(n + len(hub), edges)
    return Gadget(graph, 2, tuple(range(n)), pairs, roles)


def build_order3_gadget(n: int, pairs: PairSet) -> Gadget:
    """Order-3 gadget: a two-layer core joined completely, bridges in series.

    Anchors and bridge halves form the first layer; a twin layer mirrors it
    and the two are completely joined. Each unconstrained base pair gets a
    left/right bridge half pair joined by an edge, yielding a three-edge
    connection; constrained pairs need at least four edges.
    """
    _check_gadget_args(n, pairs)
    nonpairs = _nonpairs(n, pairs)
    z = len(nonpairs)
    layer_size = n + 2 * z
    anchors = tuple(n + i for i in range(n))
    lefts = {t: 2 * n + 2 * idx for idx, t in enumerate(nonpairs)}
    rights = {t: 2 * n + 2 * idx + 1 for idx, t in enumerate(nonpairs)}
    layer = list(anchors) + [v for t in nonpairs for v in (lefts[t], rights[t])]
    twins = [x + layer_size for x in layer]

    edges: list[tuple[int, int]] = [(i, anchors[i]) for i in range(n)]
    for i, j in nonpairs:
        edges.append((i, lefts[(i, j)]))
        edges.append((j, rights[(i, j)]))
        edges.append((lefts[(i, j)], rights[(i, j)]))
    edges += [(x, y) for x in layer for y in twins]

    roles: dict[int, tuple] = {i: ("base", i) for i in range(n)}
    roles.update({anchors[i]: ("anchor", i) for i in range(n)})
    for (i, j), v in lefts.items():
        roles[v] = ("bridge_left", i, j)
    for (i, j), v in rights.items():
        roles[v] = ("bridge_right", i, j)
    for x in layer:
        tag, *rest = roles[x]
        roles[x + layer_size] = (tag + "_twin", *rest)
    graph = new_graph(n + 2 * layer_size, edges)
    return Gadget(graph, 3, tuple(range(n)), pairs, roles)


@dataclass(frozen=True, eq=False)
class SplitBase:
    """Result of splitting every base vertex into a triangle of copies.

    copies maps each old base vertex to its three copy ids; carried maps
    every surviving vertex to its id in the new graph. Distances between
    surviving vertices (and copies of old bases) are preserved exactly.
    """

    graph: Graph
    copies: dict[int, tuple[int, int, int]]
    carried: dict[int, int]


def split_base(g: Gadget) -> SplitBase:
    """Replace each base vertex by a triangle, triplicating incident edges."""
    base = set(g.base_vertices)
    copies = {b: (3 * idx, 3 * idx + 1, 3 * idx + 2) for idx, b in enumerate(sorted(base))}
    offset = 3 * len(base)
    survivors = sorted(v for v in range(g.graph.vertex_count) if v not in base)
    carried = {v: offset + idx for idx, v in enumerate(survivors)}

    edges: list[tuple[int, int]] = []
    for b in sorted(base):
        c1, c2, c3 = copies[b]
        edges += [(c1, c2), (c1, c3), (c2, c3)]
    for u, v in g.graph.edge_list():
        if u in base and v in base:
            raise MissingLayerTagsError("gadget has an edge between two base vertices")
        if u in base:
            edges += [(c, carried[v]) for c in copies[u]]
        elif v in base:
            edges += [(carried[u], c) for c in copies[v]]
        else:
            edges.append((carried[u], carried[v]))
    graph = new_graph(offset + len(survivors), edges)
    return SplitBase(graph, copies, carried)


def build_gadget(n: int, pairs: PairSet, order: int) -> Gadget:
    """Order-k distance gadget; recursive for k >= 4 via base splitting.

    Even orders bottom out at the order-2 gadget, odd at order-3. Each
    recursion step splits the inner bases into triangles and hangs a fresh
    base vertex off every triangle, stretching all base distances by two.
    """
    if order < 2:
        raise InvalidOrderError(f"no gadget of order {order}")
    if order == 2:
        return build_order2_gadget(n, pairs)
    if order == 3:
        return build_order3_gadget(n, pairs)
    inner = build_gadget(n, pairs, order - 2)
    sp = split_base(inner)
    shift = n
    copies = {b: tuple(c + shift for c in cs) for b, cs in sp.copies.items()}
    carried = {v: w + shift for v, w in sp.carried.items()}
    edges = [(u + shift, v + shift) for u, v in sp.graph.edge_list()]
    for i, b in enumerate(inner.base_vertices):
        for c in copies[b]:
            edges.append((i, c))
    graph = new_graph(sp.graph.vertex_count + n, edges)

    roles: dict[int, tuple] = {i: ("base", i) for i in range(n)}
    for b in inner.base_vertices:
        i = inner.roles[b][1]
        for t, c in enumerate(copies[b], start=1):
            roles[c] = ("copy", i, t)
    for v, w in carried.items():
        roles[w] = inner.roles[v]
    return Gadget(graph, order, tuple(range(n)), pairs, roles, inner, copies, carried)


def _twin_tags(rx: tuple, ry: tuple) -> bool:
    tx, ty = rx[0], ry[0]
    if tx.endswith("_twin"):
        tx, ty = ty, tx
    return ty == tx + "_twin" and rx[1:] == ry[1:]


def _order2_colors(g: Gadget) -> dict[tuple[int, int], int]:
    colors: dict[tuple[int, int], int] = {}
    for u, v in g.graph.edge_list():
        ru, rv = g.roles[u], g.roles[v]
        if ru[0] != "base" and rv[0] != "base":
            colors[(u, v)] = 0
            continue
        rb, ro = (ru, rv) if ru[0] == "base" else (rv, ru)
        if ro[0] == "anchor":
            colors[(u, v)] = 1
        else:  # bridge (i, j) with i < j: near side 0, far side 1
            colors[(u, v)] = 0 if rb[1] == ro[1] else 1
    return colors


def _order3_colors(g: Gadget) -> dict[tuple[int, int], int]:
    colors: dict[tuple[int, int], int] = {}
    for u, v in g.graph.edge_list():
        ru, rv = g.roles[u], g.roles[v]
        if ru[0] == "base" or rv[0] == "base":
            ro = rv if ru[0] == "base" else ru
            if ro[0] == "anchor":
                colors[(u, v)] = 2
            elif ro[0] == "bridge_left":
                colors[(u, v)] = 0
            else:
                colors[(u, v)] = 1
        elif ru[0] == "bridge_left" and rv[0] == "bridge_right":
            colors[(u, v)] = 2
        elif rv[0] == "bridge_left" and ru[0] == "bridge_right":
            colors[(u, v)] = 2
        else:  # complete join between the layer and its twin
            colors[(u, v)] = 0 if _twin_tags(ru, rv) else 1
    return colors


def witness_coloring(g: Gadget) -> EdgeColoring:
    """The explicit coloring that rainbow-connects all pairs outside P.

    Orders 2 and 3 use their closed-form colorings. For order k >= 4 the
    inner coloring is inherited on two of the three copies of each old
    base, the third copy's links get color k-2, triangles and the fresh
    base links get color k-1 (except one k-2 link per base, which keeps
    the new two-step detours rainbow). Uses exactly k color indices.
    """
    if set(g.roles) != set(range(g.graph.vertex_count)):
        raise MissingLayerTagsError("vertex roles missing or inconsistent")
    k = g.order
    if k == 2:
        return edge_coloring(g.graph, 2, _order2_colors(g))
    if k == 3:
        return edge_coloring(g.graph, 3, _order3_colors(g))
    if g.inner is None or g.copies is None or g.carried is None:
        raise MissingLayerTagsError("recursive gadget lacks its construction trace")
    inner_coloring = witness_coloring(g.inner)
    inner_base = set(g.inner.base_vertices)
    colors: dict[tuple[int, int], int] = {}
    for u, v in g.inner.graph.edge_list():
        if u in inner_base or v in inner_base:
            b, w = (u, v) if u in inner_base else (v, u)
            cw = g.carried[w]
            c1, c2, c3 = g.copies[b]
            inherited = inner_coloring.color_of(u, v)
            colors[canonical_pair(c1, cw)] = inherited
            colors[canonical_pair(c2, cw)] = inherited
            colors[canonical_pair(c3, cw)] = k - 2
        else:
            colors[canonical_pair(g.carried[u], g.carried[v])] = inner_coloring.color_of(u, v)
    for i, b in enumerate(g.inner.base_vertices):
        c1, c2, c3 = g.copies[b]
        colors[canonical_pair(c1, c2)] = k - 1
        colors[canonical_pair(c1, c3)] = k - 1
        colors[canonical_pair(c2, c3)] = k - 1
        nb = g.base_vertices[i]
        colors[canonical_pair(c1, nb)] = k - 2
        colors[canonical_pair(c2, nb)] = k - 1
        colors[canonical_pair(c3, nb)] = k - 1
    return edge_coloring(g.graph, k, colors)


def gadget_layers(g: Gadget) -> dict[int, str]:
    """Per-vertex display tag: base / copy1-3 / the inherited inner tag."""
    if g.order in (2, 3) or g.inner is None:
        return {v: g.roles[v][0] for v in range(g.graph.vertex_count)}
    tags: dict[int, str] = {v: "base" for v in g.base_vertices}
    for b, (c1, c2, c3) in sorted(g.copies.items()):
        tags[c1], tags[c2], tags[c3] = "copy1", "copy2", "copy3"
    inner_tags = gadget_layers(g.inner)
    for v, w in sorted(g.carried.items()):
        tags[w] = inner_tags[v]
    return dict(sorted(tags.items()))


@dataclass(frozen=True, eq=False)
class ReducedInstance:
    """The gadget with the source graph's edges drawn between its bases.

    Base vertex i of the gadget is source vertex i, so the base-induced
    subgraph is the source graph itself.
    """

    graph: Graph
    gadget: Gadget
    base_edges: frozenset[tuple[int, int]]
    source: SubsetInstance

    def base_graph(self) -> Graph:
        return new_graph(self.source.graph.vertex_count, self.base_edges)


def rc_reduction(inst: SubsetInstance) -> ReducedInstance:
    """Embed a subset instance into a plain rainbow-connectivity instance.

    The combined graph is the edge-disjoint union of the order-k gadget on
    the instance's pairs and the source edges placed between base vertices.
    """
    if inst.k < 2:
        raise InvalidOrderError(f"no reduction for k = {inst.k}")
    gadget = build_gadget(inst.graph.vertex_count, inst.pairs, inst.k)
    base_edges = frozenset(inst.graph.edges)
    edges = list(gadget.graph.edges) + list(base_edges)
    graph = new_graph(gadget.graph.vertex_count, edges)
    return ReducedInstance(graph, gadget, base_edges, inst)


def combine_colorings(r: ReducedInstance, base: EdgeColoring, gadget: EdgeColoring) -> EdgeColoring:
    """Union the base coloring (on source edges) with the gadget coloring.

    Both inputs must color exactly their side of the edge-disjoint union
    and stay within the instance's k color indices.
    """
    k = r.source.k
    if base.host != r.source.graph:
        raise DomainMismatchError("base coloring must cover exactly the source edges")
    if gadget.host != r.gadget.graph:
        raise DomainMismatchError("gadget coloring must cover exactly the gadget edges")
    if base.color_count > k or gadget.color_count > k:
        raise DomainMismatchError(f"colorings must use at most {k} color indices")
    colors: dict[tuple[int, int], int] = {}
    for e in r.graph.edge_list():
        colors[e] = base.color_of(*e) if e in r.base_edges else gadget.color_of(*e)
    return edge_coloring(r.graph, k, colors)
