import json
import subprocess
import sys

import pytest

from lltlab.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_llt_of_shapes_json(capsys):
    code, out, _ = call(capsys, "llt", "shapes", "[(1),(1)]", "--vars", "2")
    assert code == 0
    assert json.loads(out) == {
        "num_vars": 2,
        "terms": [{"exponents": [2], "q_coeffs": ["1"]}, {"exponents": [1, 1], "q_coeffs": ["1", "1"]}],
    }


def test_llt_of_graph_defaults_to_vertex_count(capsys):
    code, out, _ = call(capsys, "llt", "graph", '{"n": 2, "e1": [[1, 2]]}')
    assert code == 0 and json.loads(out)["num_vars"] == 2


def test_graph_from_file(tmp_path, capsys):
    path = tmp_path / "g.json"
    path.write_text(json.dumps({"n": 3, "ed": [[1, 2], [1, 3], [2, 3]]}))
    code, out, _ = call(capsys, "cumulant", str(path), "--schur")
    assert code == 0
    assert json.loads(out)["schur"] == [
        {"partition": [2, 1], "q_coeffs": ["1"]},
        {"partition": [1, 1, 1], "q_coeffs": ["2", "1"]},
    ]


def test_recursive_method_agrees(capsys):
    g = '{"n": 3, "ed": [[1, 2], [2, 3]]}'
    _, closed, _ = call(capsys, "cumulant", g)
    _, recursive, _ = call(capsys, "cumulant", g, "--method", "recursive")
    assert closed == recursive


def test_lollipop_modes(capsys):
    code, out, _ = call(capsys, "lollipop", "--l", "0", "--m", "2", "--k", "0", "--verify")
    assert code == 0 and json.loads(out)["verdict"] == "holds"
    code, out, _ = call(capsys, "lollipop", "--l", "1", "--m", "2", "--k", "0")
    assert json.loads(out) == {"n": 3, "e1": [], "e2": [], "ed": [[1, 2], [2, 3]]}
    code, out, _ = call(capsys, "lollipop", "--l", "1", "--m", "3", "--k", "1", "--schur")
    assert code == 0


def test_parking_listing(capsys):
    code, out, _ = call(capsys, "parking", "--m", "3")
    data = json.loads(out)
    assert code == 0 and data["count"] == 16 and len(data["functions"]) == 16


def test_tree_commands(capsys):
    _, out, _ = call(capsys, "nu", "[[1,3],[1,5],[1,6],[5,2],[5,4]]")
    data = json.loads(out)
    assert data["paths"] == [[1, 3], [5, 2], [4], [6]]
    assert data["diagonal_labels"] == [1, 3, 5, 6, 2, 4]
    assert data["schroder"] == "ndnnedneee"
    _, out, _ = call(capsys, "mu", "nnee")
    assert json.loads(out)["strips"] == "[(1),(1)]"
    _, out, _ = call(capsys, "trees", '{"n": 4, "edges": [[1,2],[2,3],[3,4],[1,4]]}')
    data = json.loads(out)
    assert data["count"] == data["matrix_tree"] == 4


@pytest.mark.parametrize("what", ["theorem", "corollary", "moebius", "forest-identity", "schur", "lemma-3-2",
                                  "lemma-4-5", "bijections"])
def test_verify_subcommands_pass(capsys, what):
    extra = {"theorem": ["--l", "1", "--m", "3", "--k", "1"], "corollary": ["--m", "4"],
             "lemma-4-5": ["--max-length", "3"], "moebius": ["--m", "3"], "forest-identity": ["--m", "3"],
             "schur": ["--m", "3"]}.get(what, [])
    code, out, _ = call(capsys, "verify", what, "--no-timing", *extra)
    assert code == 0
    assert all(json.loads(line)["verdict"] == "holds" for line in out.splitlines())


def test_lemma_4_5_single_position(capsys):
    code, out, _ = call(capsys, "verify", "lemma-4-5", "--path", "nnee", "--case", "A", "--position", "1")
    assert code == 0 and json.loads(out)["params"] == {"n": 2, "path": "nnee", "position": 1}


def test_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("LLT_LAB_SEED", "17")
    _, out, _ = call(capsys, "verify", "lemma-3-2", "--case", "1a", "--trials", "2")
    assert json.loads(out)["params"]["seed"] == 17


def test_output_is_byte_stable(capsys):
    argv = ["verify", "corollary", "--max-m", "3", "--no-timing"]
    assert call(capsys, *argv) == call(capsys, *argv)


def test_text_format(capsys):
    code, out, _ = call(capsys, "--format", "text", "verify", "theorem", "--l", "0", "--m", "2")
    assert code == 0 and out.startswith("[PASS] theorem_1_2(")


def test_usage_errors_exit_2(capsys):
    assert call(capsys, "nonsense")[0] == 2
    assert call(capsys, "mu", "nnn")[0] == 2
    assert call(capsys, "llt", "shapes", "(1,2)")[0] == 2
    code, _, err = call(capsys, "llt", "graph", "missing.json")
    assert code == 2 and "error" in err


def test_failed_division_exits_3_with_witness(capsys):
    code, out, err = call(capsys, "cumulant", '{"n": 3, "e1": [[1, 3], [2, 3]]}')
    assert code == 3 and out == ""
    witness = json.loads(err)
    assert witness["error"] == "NotDivisible" and "remainder" in witness


def test_failed_verification_exits_1(capsys, monkeypatch):
    import lltlab.cli
    from lltlab.report import VerificationReport

    failing = VerificationReport("theorem_1_2", {}, False, {"lhs": 0})
    monkeypatch.setattr(lltlab.cli, "verify_theorem_1_2", lambda p, n: failing)
    assert call(capsys, "verify", "theorem", "--m", "2")[0] == 1


def test_acceptance_subset(capsys):
    code, out, _ = call(capsys, "--format", "text", "acceptance", "2", "9")
    assert code == 0
    assert out.splitlines()[0].startswith("[PASS] criterion 2:")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "lltlab.cli", "parking", "--m", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"count": 3, "functions": [[1, 1], [1, 2], [2, 1]]}
