import json

from rainbowcon import is_rainbow_connected, make_pairs, new_graph
from rainbowcon.cli import main
from rainbowcon.io import dump_gadget, emit_edge_list, emit_instance, load_coloring
from rainbowcon.reductions import build_order2_gadget, Gadget

C4 = new_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
K4 = new_graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_solve_rc_on_c4(tmp_path, capsys):
    path = write(tmp_path, "c4.txt", emit_edge_list(C4))
    code = main(["solve", "--problem", "rc", "--input", path])
    out = capsys.readouterr().out
    assert code == 0
    assert out.splitlines()[0] == "rc = 2"
    witness = load_coloring(out.splitlines()[1], C4)
    assert is_rainbow_connected(witness)


def test_solve_chromatic_infeasible(tmp_path, capsys):
    path = write(tmp_path, "k4.txt", emit_edge_list(K4))
    code = main(["solve", "--problem", "chromatic", "--k", "3", "--input", path])
    assert code == 1
    assert "infeasible" in capsys.readouterr().out


def test_solve_disconnected_is_an_error(tmp_path, capsys):
    path = write(tmp_path, "broken.txt", emit_edge_list(new_graph(3, [(0, 1)])))
    code = main(["solve", "--problem", "rc", "--input", path])
    assert code == 2
    assert "error:" in capsys.readouterr().err


def test_solve_subset_requires_pairs(tmp_path, capsys):
    path = write(tmp_path, "c4.txt", emit_edge_list(C4))
    assert main(["solve", "--problem", "subset-rc", "--k", "2", "--input", path]) == 2
    inst = write(tmp_path, "inst.json", emit_instance(C4, make_pairs([(0, 2)], 4), 2))
    assert main(["solve", "--problem", "subset-rc", "--input", inst]) == 0


def test_solve_decision_mode_with_k(tmp_path, capsys):
    path = write(tmp_path, "c4.txt", emit_edge_list(C4))
    assert main(["solve", "--problem", "rc", "--k", "1", "--input", path]) == 1
    assert main(["solve", "--problem", "rc", "--k", "2", "--input", path]) == 0


def test_reduce_star(tmp_path, capsys):
    k3 = write(tmp_path, "k3.txt", emit_edge_list(new_graph(3, [(0, 1), (0, 2), (1, 2)])))
    code = main(["reduce", "--reduction", "star", "--k", "3", "--input", k3])
    out = capsys.readouterr().out
    assert code == 0
    payload = json.loads(out.splitlines()[0])
    assert payload["n"] == 4 and len(payload["pairs"]) == 3 and payload["center"] == 3
    assert "star instance: 4 vertices, 3 edges, 3 pairs" in out


def test_reduce_rc_gadget_micro(tmp_path, capsys):
    inst = write(
        tmp_path,
        "edge.json",
        emit_instance(new_graph(2, [(0, 1)]), make_pairs([(0, 1)], 2), 2),
    )
    dot_file = tmp_path / "out.dot"
    code = main(
        ["reduce", "--reduction", "rc-gadget", "--input", inst, "--dot", str(dot_file)]
    )
    out = capsys.readouterr().out
    assert code == 0
    payload = json.loads(out.splitlines()[0])
    assert payload["edges"] == [[0, 1], [0, 2], [1, 3], [2, 3]]
    assert payload["base_vertices"] == [0, 1]
    dot = dot_file.read_text()
    assert "0 [shape=doublecircle];" in dot and "1 [shape=doublecircle];" in dot


def test_reduce_src_ext(tmp_path, capsys):
    star = new_graph(4, [(0, 3), (1, 3), (2, 3)])
    inst = write(
        tmp_path,
        "star.json",
        emit_instance(star, make_pairs([(0, 1), (0, 2), (1, 2)], 4), 3),
    )
    code = main(["reduce", "--reduction", "src-ext", "--input", inst])
    out = capsys.readouterr().out
    assert code == 0
    payload = json.loads(out.splitlines()[0])
    assert payload["n"] == 10
    assert "bipartite: True" in out


def test_reduce_invalid_order(tmp_path, capsys):
    inst = write(
        tmp_path,
        "edge.json",
        emit_instance(new_graph(2, [(0, 1)]), make_pairs([(0, 1)], 2), 1),
    )
    assert main(["reduce", "--reduction", "rc-gadget", "--input", inst]) == 2
    assert "error:" in capsys.readouterr().err


def test_verify_all_small(tmp_path, capsys):
    code = main(["verify", "--check", "all", "--n-max", "3", "--seeds", "3", "--seed", "1"])
    out = capsys.readouterr().out
    assert code == 0
    lines = out.splitlines()
    json_lines = [l for l in lines if l.startswith("{")]
    assert json_lines and all(json.loads(l)["passed"] for l in json_lines)
    assert any(l.startswith("total") for l in lines)


def test_verify_output_is_reproducible(capsys):
    argv = ["verify", "--check", "all", "--n-max", "3", "--seeds", "4", "--seed", "9"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    assert capsys.readouterr().out == first


def test_verify_witness_on_corrupted_gadget_file(tmp_path, capsys):
    g = build_order2_gadget(3, make_pairs([(0, 1)], 3))
    sabotaged = Gadget(
        new_graph(g.graph.vertex_count, list(g.graph.edges) + [(0, 1)]),
        2,
        g.base_vertices,
        g.pairs,
        g.roles,
    )
    path = write(tmp_path, "bad_gadget.json", dump_gadget(sabotaged))
    code = main(["verify", "--check", "pair-distances", "--input", path])
    out = capsys.readouterr().out
    assert code == 1
    report = json.loads(out.splitlines()[0])
    assert not report["passed"] and report["counterexample"]["pair"] == [0, 1]
    # the healthy gadget passes through the same file path
    good = write(tmp_path, "good_gadget.json", dump_gadget(g))
    assert main(["verify", "--check", "witness", "--input", good]) == 0


def test_verify_single_checks_from_instance_json(tmp_path, capsys):
    k3 = new_graph(3, [(0, 1), (0, 2), (1, 2)])
    inst = write(tmp_path, "k3.json", emit_instance(k3, None, 3))
    assert main(["verify", "--check", "vc-equivalence", "--input", inst]) == 0
    star = new_graph(4, [(0, 3), (1, 3), (2, 3)])
    star_inst = write(
        tmp_path, "star.json", emit_instance(star, make_pairs([(0, 1), (0, 2), (1, 2)], 4), 3)
    )
    assert main(["verify", "--check", "src-equivalence", "--input", star_inst]) == 0
    assert main(["verify", "--check", "rc-equivalence", "--input", star_inst]) == 0
    assert main(["verify", "--check", "containment", "--input", star_inst]) == 0


def test_demo_endings(capsys):
    assert main(["demo", "k3"]) == 0
    assert capsys.readouterr().out.splitlines()[-1] == "rc(G') <= 3 certified by witness"
    assert main(["demo", "k4"]) == 0
    assert (
        capsys.readouterr().out.splitlines()[-1]
        == "rc(G') > 3 certified (containment + base exhaustion)"
    )
    assert main(["demo", "micro"]) == 0
    assert capsys.readouterr().out.splitlines()[-1] == "rc(G') = 2"


def test_output_flag_writes_file(tmp_path, capsys):
    src = write(tmp_path, "c4.txt", emit_edge_list(C4))
    out_file = tmp_path / "result.txt"
    code = main(["solve", "--problem", "rc", "--input", src, "--output", str(out_file)])
    assert code == 0
    assert capsys.readouterr().out == ""
    assert out_file.read_text().startswith("rc = 2")
