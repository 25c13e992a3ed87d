"""Serialization: edge-list text, instance JSON, coloring JSON, gadget JSON, DOT.

Every emitter is deterministic (sorted keys, sorted edge and pair lists) so
identical inputs always produce byte-identical output.
"""

from __future__ import annotations

import json

from .coloring import EdgeColoring, coloring_json, load_coloring_json
from .errors import ParseError
from .graph import Graph, PairSet, make_pairs, new_graph
from .reductions import Gadget, ReducedInstance, gadget_layers


def _decode(text: str | bytes) -> str:
    if isinstance(text, bytes):
        try:
            return text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not valid UTF-8: {exc}") from exc
    return text


def _int_token(token: str, line: int, column: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", line, column) from None


def parse_edge_list(text: str | bytes) -> Graph:
    """Parse "n m" followed by m lines "u v" (0-based, whitespace separated)."""
    lines = _decode(text).splitlines()
    rows: list[tuple[int, list[str]]] = []
    for number, raw in enumerate(lines, start=1):
        if raw.strip():
            rows.append((number, raw.split()))
    if not rows:
        raise ParseError("empty input", 1)

    def two_ints(row: tuple[int, list[str]]) -> tuple[int, int]:
        number, tokens = row
        if len(tokens) != 2:
            raise ParseError(f"expected two fields, got {len(tokens)}", number)
        a = _int_token(tokens[0], number, 1)
        b = _int_token(tokens[1], number, 2)
        return a, b

    n, m = two_ints(rows[0])
    if len(rows) - 1 != m:
        raise ParseError(f"header promises {m} edges, found {len(rows) - 1}", rows[0][0])
    edges = [two_ints(row) for row in rows[1:]]
    return new_graph(n, edges)


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines += [f"{u} {v}" for u, v in g.edge_list()]
    return "\n".join(lines) + "\n"


def _instance_from_json_obj(obj: object) -> tuple[Graph, PairSet | None, int | None]:
    if not isinstance(obj, dict):
        raise ParseError("instance JSON must be an object")
    if "n" not in obj or "edges" not in obj:
        raise ParseError("instance JSON needs 'n' and 'edges'")
    n = obj["n"]
    if not isinstance(n, int) or n < 0:
        raise ParseError("'n' must be a nonnegative integer")
    edges = obj["edges"]
    if not isinstance(edges, list):
        raise ParseError("'edges' must be a list of pairs")
    graph = new_graph(n, [tuple(e) for e in edges])
    pairs = None
    if obj.get("pairs") is not None:
        pairs = make_pairs([tuple(p) for p in obj["pairs"]], n)
    k = obj.get("k")
    if k is not None and (not isinstance(k, int) or k < 1):
        raise ParseError("'k' must be a positive integer")
    return graph, pairs, k


def parse_instance(text: str | bytes, fmt: str = "auto") -> tuple[Graph, PairSet | None, int | None]:
    """Parse an instance in edge-list or JSON form; auto-detects by default."""
    body = _decode(text)
    if fmt == "auto":
        fmt = "json" if body.lstrip().startswith("{") else "edge-list"
    if fmt == "edge-list":
        return parse_edge_list(body), None, None
    if fmt != "json":
        raise ValueError(f"unknown format {fmt!r}")
    try:
        obj = json.loads(body)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc
    return _instance_from_json_obj(obj)


def instance_json_obj(g: Graph, pairs: PairSet | None = None, k: int | None = None) -> dict:
    obj: dict = {"n": g.vertex_count, "edges": [[u, v] for u, v in g.edge_list()]}
    if pairs is not None:
        obj["pairs"] = pairs.as_lists()
    if k is not None:
        obj["k"] = k
    return obj


def emit_instance(g: Graph, pairs: PairSet | None = None, k: int | None = None) -> str:
    return json.dumps(instance_json_obj(g, pairs, k), sort_keys=True) + "\n"


def to_dot(g: Graph, highlights: tuple[int, ...] | list[int] = ()) -> str:
    """DOT text for an undirected graph; highlighted vertices get doublecircle."""
    marked = set(highlights)
    lines = ["graph g {"]
    for v in range(g.vertex_count):
        attr = " [shape=doublecircle]" if v in marked else ""
        lines.append(f"  {v}{attr};")
    for u, v in g.edge_list():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_coloring(text: str | bytes, host: Graph) -> EdgeColoring:
    try:
        obj = json.loads(_decode(text))
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc
    return load_coloring_json(obj, host)


def dump_coloring(c: EdgeColoring) -> str:
    return json.dumps(coloring_json(c), sort_keys=True) + "\n"


def gadget_json_obj(g: Gadget) -> dict:
    """Full recursive gadget serialization, enough to re-derive its coloring."""
    obj: dict = {
        "order": g.order,
        "n": g.graph.vertex_count,
        "edges": [[u, v] for u, v in g.graph.edge_list()],
        "base_vertices": list(g.base_vertices),
        "pairs": g.pairs.as_lists(),
        "layers": {str(v): tag for v, tag in sorted(gadget_layers(g).items())},
        "roles": {str(v): list(g.roles[v]) for v in sorted(g.roles)},
    }
    if g.inner is not None:
        obj["copies"] = {str(b): list(cs) for b, cs in sorted(g.copies.items())}
        obj["carried"] = {str(v): w for v, w in sorted(g.carried.items())}
        obj["inner"] = gadget_json_obj(g.inner)
    return obj


def gadget_from_json_obj(obj: dict) -> Gadget:
    """Rebuild a gadget record verbatim; no structural validation on purpose,
    so deliberately corrupted files can be fed to the checkers."""
    if not isinstance(obj, dict) or "order" not in obj:
        raise ParseError("gadget JSON needs an 'order'")
    graph = new_graph(obj["n"], [tuple(e) for e in obj["edges"]])
    pairs = make_pairs([tuple(p) for p in obj["pairs"]], obj["n"])
    roles = {int(v): tuple(role) for v, role in obj.get("roles", {}).items()}
    inner = gadget_from_json_obj(obj["inner"]) if obj.get("inner") else None
    copies = None
    carried = None
    if obj.get("copies") is not None:
        copies = {int(b): tuple(cs) for b, cs in obj["copies"].items()}
    if obj.get("carried") is not None:
        carried = {int(v): w for v, w in obj["carried"].items()}
    return Gadget(
        graph,
        obj["order"],
        tuple(obj["base_vertices"]),
        pairs,
        roles,
        inner,
        copies,
        carried,
    )


def dump_gadget(g: Gadget) -> str:
    return json.dumps(gadget_json_obj(g), sort_keys=True) + "\n"


def load_gadget(text: str | bytes) -> Gadget:
    try:
        obj = json.loads(_decode(text))
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc
    return gadget_from_json_obj(obj)


def reduced_instance_json_obj(r: ReducedInstance) -> dict:
    """Instance JSON plus base-vertex and layer-tag annotations."""
    obj = instance_json_obj(r.graph, r.gadget.pairs, r.source.k)
    obj["base_vertices"] = list(r.gadget.base_vertices)
    obj["layers"] = {str(v): tag for v, tag in sorted(gadget_layers(r.gadget).items())}
    return obj


def emit_reduced_instance(r: ReducedInstance) -> str:
    return json.dumps(reduced_instance_json_obj(r), sort_keys=True) + "\n"
