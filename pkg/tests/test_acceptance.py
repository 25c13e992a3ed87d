"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines as they complete.
"""

import itertools
import subprocess
import sys

from rainbowcon import (
    FuzzConfig,
    SubsetInstance,
    build_gadget,
    check_path_containment,
    check_rc_equivalence,
    check_src_equivalence,
    check_witness,
    combine_colorings,
    diameter,
    distances_from,
    edge_coloring,
    is_bipartite,
    is_rainbow_connected,
    is_strong_rainbow_connected,
    is_subset_rainbow_connected,
    make_pairs,
    new_graph,
    rc_exact,
    rc_reduction,
    src_exact,
    star_reduction,
    subset_rc_leq,
    subset_src_leq,
    vertex_coloring_leq,
    witness_coloring,
)
from rainbowcon.verify import random_instance

from oracles import connected_graph_representatives, edge_slots


def report(number: int, description: str, ok: bool) -> bool:
    print(f"ACCEPTANCE {number}: {'PASS' if ok else 'FAIL'} - {description}")
    return ok


def all_pair_subsets(n):
    slots = edge_slots(n)
    for mask in range(1 << len(slots)):
        yield make_pairs([slots[t] for t in range(len(slots)) if mask >> t & 1], n)


def test_criterion_1_star_equivalence_sweep():
    # every edge subset of the 5-clique, k in {2, 3}: the three solvers agree
    ok = True
    slots = edge_slots(5)
    for mask in range(1 << len(slots)):
        g = new_graph(5, [slots[t] for t in range(len(slots)) if mask >> t & 1])
        star = star_reduction(g, 2)
        for k in (2, 3):
            a = vertex_coloring_leq(g, k).feasible
            b = subset_rc_leq(star.graph, star.pairs, k).feasible
            c = subset_src_leq(star.graph, star.pairs, k).feasible
            if not (a == b == c):
                ok = False
    assert report(1, "vertex coloring and star solvers agree on all 1024 5-vertex graphs", ok)


def test_criterion_2_gadget_distances():
    ok = True
    for n in (2, 3, 4):
        for pairs in all_pair_subsets(n):
            for k in (2, 3, 4, 5):
                g = build_gadget(n, pairs, k)
                for i in range(n):
                    dist = distances_from(g.graph, i)
                    for j in range(i + 1, n):
                        required = dist[j] >= k + 1 if (i, j) in pairs else dist[j] == k
                        if not required:
                            ok = False
    assert report(2, "encoded pairs at distance >= k+1, others exactly k (n <= 4, all P, k <= 5)", ok)


def test_criterion_3_witness_colorings():
    ok = True
    for n in (2, 3, 4):
        for pairs in all_pair_subsets(n):
            for k in (2, 3, 4, 5):
                if not check_witness(build_gadget(n, pairs, k)).passed:
                    ok = False
    config = FuzzConfig(n_min=5, n_max=5, seeds=200)
    for index in range(config.seeds):
        inst = random_instance(config, 0, index)
        gadget = build_gadget(inst.graph.vertex_count, inst.pairs, inst.k)
        if not check_witness(gadget).passed:
            ok = False
    assert report(3, "witness colorings connect everything outside P (sweep + 200 seeded n=5)", ok)


def test_criterion_4_strong_rainbow_extension():
    ok = True
    k3 = new_graph(3, [(0, 1), (0, 2), (1, 2)])
    c5 = new_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    single = new_graph(2, [(0, 1)])
    for source in (k3, c5, single):
        star = star_reduction(source, 3)
        outcome = check_src_equivalence(star)
        feasible_side = outcome.passed and outcome.instance["feasible"]
        from rainbowcon import src_extension, src_witness_coloring

        ext = src_extension(star)
        base = subset_src_leq(star.graph, star.pairs, 3)
        explicit = (
            is_bipartite(ext.graph)[0]
            and base.feasible
            and is_strong_rainbow_connected(src_witness_coloring(ext, base.witness))
        )
        if not (feasible_side and explicit):
            ok = False
    k4 = new_graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    star4 = star_reduction(k4, 3)
    outcome = check_src_equivalence(star4)
    if not (outcome.passed and not outcome.instance["feasible"]):
        ok = False
    count_failing = sum(
        1
        for colors in itertools.product(range(3), repeat=4)
        if not is_subset_rainbow_connected(edge_coloring(star4.graph, 3, colors), star4.pairs)
    )
    if count_failing != 81:
        ok = False
    assert report(4, "extension bipartite, witnesses strong-rainbow, 4-clique side certified", ok)


def test_criterion_5_end_to_end_rc_equivalence():
    ok = True
    # (a) micro instance: reduced graph is the 4-cycle, decided both ways
    single = new_graph(2, [(0, 1)])
    micro = SubsetInstance(single, make_pairs([(0, 1)], 2), 2)
    micro_check = check_rc_equivalence(micro, full_bruteforce=True)
    micro_reduced = rc_reduction(micro)
    if not (micro_check.passed and rc_exact(micro_reduced.graph).value == 2):
        ok = False
    # (b) triangle chain: the combined witness colors the 116-edge instance
    star3 = star_reduction(new_graph(3, [(0, 1), (0, 2), (1, 2)]), 3)
    chain3 = SubsetInstance(star3.graph, star3.pairs, 3)
    r3 = rc_reduction(chain3)
    base3 = subset_rc_leq(chain3.graph, chain3.pairs, 3)
    combined = combine_colorings(r3, base3.witness, witness_coloring(r3.gadget))
    if not (r3.graph.edge_count == 116 and is_rainbow_connected(combined)):
        ok = False
    # (c) 4-clique chain: containment plus exhaustion of all 81 base colorings
    k4 = new_graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    star4 = star_reduction(k4, 3)
    chain4 = SubsetInstance(star4.graph, star4.pairs, 3)
    r4 = rc_reduction(chain4)
    backward = check_rc_equivalence(chain4)
    if not (
        backward.passed
        and not backward.instance["feasible"]
        and check_path_containment(r4).passed
    ):
        ok = False
    assert report(5, "micro brute force, triangle witness, 4-clique negative certificate", ok)


def test_criterion_6_solver_sanity():
    ok = True
    values = {
        "K4": (new_graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)]), 1),
        "C4": (new_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]), 2),
        "P4": (new_graph(4, [(0, 1), (1, 2), (2, 3)]), 3),
        "K_1_4": (new_graph(5, [(0, 4), (1, 4), (2, 4), (3, 4)]), 4),
    }
    for g, expected in values.values():
        if rc_exact(g).value != expected:
            ok = False
    if src_exact(values["K_1_4"][0]).value != 4:
        ok = False
    for n in range(2, 7):
        for g in connected_graph_representatives(n):
            rc = rc_exact(g).value
            src = src_exact(g).value
            if not (diameter(g) <= rc <= src <= g.edge_count):
                ok = False
    assert report(6, "rc values and diameter <= rc <= src <= m over all connected graphs <= 6", ok)


def test_criterion_7_determinism():
    argv = [sys.executable, "-m", "rainbowcon", "verify", "--seeds", "200", "--seed", "7"]
    first = subprocess.run(argv, capture_output=True, check=False)
    second = subprocess.run(argv, capture_output=True, check=False)
    ok = first.returncode == 0 == second.returncode and first.stdout == second.stdout
    json_lines = [l for l in first.stdout.splitlines() if l.startswith(b"{")]
    ok = ok and len(json_lines) > 0
    assert report(7, "two seeded verify runs emit byte-identical output", ok)
