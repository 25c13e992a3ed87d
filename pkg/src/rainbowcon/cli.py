"""Command-line front end: solve | reduce | verify | demo.

Exit status: 0 = feasible / computed / all checks pass, 1 = infeasible or a
failed check, 2 = error (bad input, disconnected graph, exceeded budget).
All randomness flows from --seed; omitting it means seed 0, never entropy.
Output goes to stdout unless --output is given.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io as gio
from .coloring import EdgeColoring
from .errors import NotAStarError, ParseError, ToolkitError
from .graph import Graph, PairSet, is_bipartite, make_pairs, new_graph
from .reductions import (
    StarInstance,
    SubsetInstance,
    combine_colorings,
    gadget_layers,
    rc_reduction,
    src_extension,
    src_witness_coloring,
    star_reduction,
    witness_coloring,
)
from .search import rc_exact, src_exact, subset_rc_leq, subset_src_leq, vertex_coloring_leq
from .verify import (
    check_nonpair_distances,
    check_pair_distances,
    check_path_containment,
    check_rc_equivalence,
    check_src_equivalence,
    check_vertex_coloring_equivalence,
    check_witness,
    run_battery,
    summary_table,
)

PROBLEMS = ("rc", "src", "subset-rc", "subset-src", "chromatic")
REDUCTIONS = ("star", "src-ext", "rc-gadget")
CHECKS = (
    "all",
    "pair-distances",
    "nonpair-distances",
    "witness",
    "containment",
    "vc-equivalence",
    "src-equivalence",
    "rc-equivalence",
)


def _read_input(args: argparse.Namespace) -> str:
    if args.input is not None:
        return Path(args.input).read_text(encoding="utf-8")
    return sys.stdin.read()


def _write_output(args: argparse.Namespace, text: str) -> None:
    if getattr(args, "output", None):
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load_instance(args: argparse.Namespace) -> tuple[Graph, PairSet | None, int | None]:
    graph, pairs, k = gio.parse_instance(_read_input(args), args.format)
    if args.k is not None:
        k = args.k
    return graph, pairs, k


def _star_from_graph(graph: Graph, pairs: PairSet | None, k: int) -> StarInstance:
    """Interpret a star-shaped graph (leaves 0..n-2, center n-1) as an instance."""
    n = graph.vertex_count - 1
    if n < 1:
        raise NotAStarError("a star instance needs a center and at least one leaf")
    inst = StarInstance(graph, n, pairs if pairs is not None else make_pairs([], n), k, k < 3)
    expected = frozenset((i, n) for i in range(n))
    if graph.edges != expected:
        raise NotAStarError("expected leaves 0..n-2 all joined to center n-1 and nothing else")
    return inst


def cmd_solve(args: argparse.Namespace) -> int:
    graph, pairs, k = _load_instance(args)
    if args.problem in ("subset-rc", "subset-src", "chromatic") and k is None:
        raise ToolkitError(f"--k is required for problem {args.problem!r}")
    out: list[str] = []
    exit_code = 0
    witness: EdgeColoring | None = None
    if args.problem == "chromatic":
        result = vertex_coloring_leq(graph, k)
        if result.feasible:
            out.append(f"chromatic <= {k}: feasible")
            out.append("colors: " + " ".join(map(str, result.witness)))
        else:
            out.append(f"chromatic <= {k}: infeasible")
            exit_code = 1
    elif args.problem in ("subset-rc", "subset-src"):
        if pairs is None:
            raise ToolkitError("subset problems need a 'pairs' list in the instance JSON")
        solver = subset_rc_leq if args.problem == "subset-rc" else subset_src_leq
        result = solver(graph, pairs, k, budget=args.budget)
        if result.feasible:
            out.append(f"{args.problem} <= {k}: feasible")
            witness = result.witness
        else:
            out.append(f"{args.problem} <= {k}: infeasible")
            exit_code = 1
    else:
        exact = rc_exact if args.problem == "rc" else src_exact
        if k is not None:
            from .graph import all_pairs

            solver = subset_rc_leq if args.problem == "rc" else subset_src_leq
            result = solver(graph, all_pairs(graph.vertex_count), k, budget=args.budget)
            if result.feasible:
                out.append(f"{args.problem} <= {k}: feasible")
                witness = result.witness
            else:
                out.append(f"{args.problem} <= {k}: infeasible")
                exit_code = 1
        else:
            opt = exact(graph, budget=args.budget)
            out.append(f"{args.problem} = {opt.value}")
            witness = opt.witness
    text = "\n".join(out) + "\n"
    if witness is not None:
        text += gio.dump_coloring(witness)
    _write_output(args, text)
    return exit_code


def cmd_reduce(args: argparse.Namespace) -> int:
    graph, pairs, k = _load_instance(args)
    if k is None:
        raise ToolkitError("--k (or a 'k' field in the instance) is required")
    dot_graph = None
    dot_highlights: tuple[int, ...] = ()
    if args.reduction == "star":
        star = star_reduction(graph, k)
        payload = gio.instance_json_obj(star.graph, star.pairs, star.k)
        payload["center"] = star.center
        summary = (
            f"star instance: {star.graph.vertex_count} vertices, "
            f"{star.graph.edge_count} edges, {len(star.pairs)} pairs"
        )
        dot_graph, dot_highlights = star.graph, (star.center,)
    elif args.reduction == "src-ext":
        star = _star_from_graph(graph, pairs, k)
        ext = src_extension(star)
        payload = gio.instance_json_obj(ext.graph, None, k)
        payload["sides"] = [list(side) for side in ext.sides()]
        payload["matching"] = [[u, v] for u, v in ext.matching]
        payload["layers"] = {str(v): tag for v, tag in sorted(_extension_layers(ext).items())}
        summary = (
            f"extension: {ext.graph.vertex_count} vertices, {ext.graph.edge_count} edges, "
            f"layer sizes {len(ext.layer_one)}+{len(ext.twin_layer)}, "
            f"bipartite: {is_bipartite(ext.graph)[0]}"
        )
        dot_graph, dot_highlights = ext.graph, tuple(star.leaves) + (star.center,)
    else:
        if pairs is None:
            raise ToolkitError("rc-gadget needs a 'pairs' list in the instance JSON")
        reduced = rc_reduction(SubsetInstance(graph, pairs, k))
        payload = gio.reduced_instance_json_obj(reduced)
        layer_tags = gadget_layers(reduced.gadget)
        tag_counts: dict[str, int] = {}
        for tag in layer_tags.values():
            tag_counts[tag] = tag_counts.get(tag, 0) + 1
        layers_text = ", ".join(f"{tag}: {tag_counts[tag]}" for tag in sorted(tag_counts))
        summary = (
            f"reduced instance: {reduced.graph.vertex_count} vertices, "
            f"{reduced.graph.edge_count} edges ({layers_text})"
        )
        dot_graph, dot_highlights = reduced.graph, reduced.gadget.base_vertices
    _write_output(args, json.dumps(payload, sort_keys=True) + "\n" + summary + "\n")
    if args.dot and dot_graph is not None:
        Path(args.dot).write_text(gio.to_dot(dot_graph, dot_highlights), encoding="utf-8")
    return 0


def _extension_layers(ext) -> dict[int, str]:
    tags = {i: "leaf" for i in ext.star.leaves}
    tags[ext.star.center] = "center"
    for a in ext.anchors:
        tags[a] = "anchor"
    for b in ext.bridges.values():
        tags[b] = "bridge"
    for a in ext.anchor_twins:
        tags[a] = "anchor_twin"
    for b in ext.bridge_twins.values():
        tags[b] = "bridge_twin"
    return tags


def _gadget_for_check(args: argparse.Namespace):
    """Either a serialized gadget (trusted as-is) or a source instance to build from."""
    text = _read_input(args)
    stripped = text.lstrip()
    if stripped.startswith("{") and '"order"' in stripped:
        return gio.load_gadget(text)
    graph, pairs, k = gio.parse_instance(text, args.format)
    if args.k is not None:
        k = args.k
    if k is None:
        raise ToolkitError("--k (or a 'k' field) is required to build the gadget")
    if pairs is None:
        pairs = make_pairs([], graph.vertex_count)
    from .reductions import build_gadget

    return build_gadget(graph.vertex_count, pairs, k)


def cmd_verify(args: argparse.Namespace) -> int:
    if args.check == "all":
        reports = run_battery(n_max=args.n_max, seeds=args.seeds, seed=args.seed)
    else:
        if args.check in ("pair-distances", "nonpair-distances", "witness"):
            gadget = _gadget_for_check(args)
            runner = {
                "pair-distances": check_pair_distances,
                "nonpair-distances": check_nonpair_distances,
                "witness": check_witness,
            }[args.check]
            reports = [runner(gadget)]
        else:
            graph, pairs, k = _load_instance(args)
            if k is None:
                raise ToolkitError("--k (or a 'k' field) is required for this check")
            if args.check == "vc-equivalence":
                reports = [check_vertex_coloring_equivalence(graph, k)]
            elif args.check == "src-equivalence":
                star = _star_from_graph(graph, pairs, k)
                reports = [check_src_equivalence(star)]
            elif args.check == "rc-equivalence":
                if pairs is None:
                    raise ToolkitError("rc-equivalence needs a 'pairs' list")
                reports = [check_rc_equivalence(SubsetInstance(graph, pairs, k))]
            else:  # containment
                if pairs is None:
                    raise ToolkitError("containment needs a 'pairs' list")
                reports = [check_path_containment(rc_reduction(SubsetInstance(graph, pairs, k)))]
    lines = "\n".join(r.json_line() for r in reports)
    text = (lines + "\n" if lines else "") + summary_table(reports) + "\n"
    _write_output(args, text)
    return 0 if all(r.passed for r in reports) else 1


def _demo_line(step: str) -> None:
    sys.stdout.write(step + "\n")


def cmd_demo(args: argparse.Namespace) -> int:
    if args.showcase == "micro":
        single = new_graph(2, [(0, 1)])
        inst = SubsetInstance(single, make_pairs([(0, 1)]), 2)
        _demo_line("source: the single edge, one required pair, k = 2")
        report = check_rc_equivalence(inst, full_bruteforce=True)
        reduced = rc_reduction(inst)
        _demo_line(
            f"reduced graph: {reduced.graph.vertex_count} vertices, "
            f"{reduced.graph.edge_count} edges (a 4-cycle)"
        )
        _demo_line(f"full brute force agrees with the subset solver: {report.passed}")
        _demo_line("rc(G') = 2")
        return 0
    if args.showcase == "k3":
        source = new_graph(3, [(0, 1), (0, 2), (1, 2)])
        label = "triangle"
    else:
        source = new_graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
        label = "4-clique"
    k = 3
    _demo_line(f"source: the {label}, k = {k}")
    vc = vertex_coloring_leq(source, k)
    _demo_line(f"step 1 vertex coloring with {k} colors: {'feasible' if vc.feasible else 'infeasible'}")
    star = star_reduction(source, k)
    _demo_line(
        f"step 2 star instance: {star.graph.vertex_count} vertices, {len(star.pairs)} required pairs"
    )
    base_rc = subset_rc_leq(star.graph, star.pairs, k)
    base_src = subset_src_leq(star.graph, star.pairs, k)
    _demo_line(
        f"step 3 star solvers agree with step 1: "
        f"{vc.feasible == base_rc.feasible == base_src.feasible}"
    )
    ext_report = check_src_equivalence(star)
    ext = src_extension(star)
    _demo_line(
        f"step 4 bipartite extension ({ext.graph.vertex_count} vertices): "
        f"checked {'pass' if ext_report.passed else 'fail'}"
    )
    inst = SubsetInstance(star.graph, star.pairs, k)
    reduced = rc_reduction(inst)
    _demo_line(
        f"step 5 gadget instance: {reduced.graph.vertex_count} vertices, "
        f"{reduced.graph.edge_count} edges"
    )
    rc_report = check_rc_equivalence(inst)
    if base_rc.feasible:
        combined = combine_colorings(reduced, base_rc.witness, witness_coloring(reduced.gadget))
        from .coloring import is_rainbow_connected

        assert rc_report.passed and is_rainbow_connected(combined)
        _demo_line(f"rc(G') <= {k} certified by witness")
    else:
        assert rc_report.passed
        _demo_line(f"rc(G') > {k} certified (containment + base exhaustion)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rainbowcon",
        description="Exact rainbow-connectivity solvers, reductions and verifiers",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p: argparse.ArgumentParser) -> None:
        p.add_argument("--input", help="input file (defaults to stdin)")
        p.add_argument(
            "--format", choices=("auto", "edge-list", "json"), default="auto", help="input format"
        )
        p.add_argument("--k", type=int, help="color budget")
        p.add_argument("--output", help="write results here instead of stdout")
        p.add_argument("--seed", type=int, default=0, help="base seed (default 0)")
        p.add_argument("--budget", type=int, help="search node budget")

    solve = sub.add_parser("solve", help="run an exact solver")
    add_io(solve)
    solve.add_argument("--problem", choices=PROBLEMS, required=True)
    solve.set_defaults(func=cmd_solve)

    reduce_p = sub.add_parser("reduce", help="construct a reduction instance")
    add_io(reduce_p)
    reduce_p.add_argument("--reduction", choices=REDUCTIONS, required=True)
    reduce_p.add_argument("--dot", help="also write a DOT rendering here")
    reduce_p.set_defaults(func=cmd_reduce)

    verify = sub.add_parser("verify", help="machine-check construction guarantees")
    add_io(verify)
    verify.add_argument("--check", choices=CHECKS, default="all")
    verify.add_argument("--n-max", type=int, default=4, help="sweep size for --check all")
    verify.add_argument("--seeds", type=int, default=200, help="fuzz instances for --check all")
    verify.set_defaults(func=cmd_verify)

    demo = sub.add_parser("demo", help="run a built-in showcase pipeline")
    demo.add_argument("showcase", choices=("k3", "k4", "micro"))
    demo.set_defaults(func=cmd_demo)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ToolkitError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
