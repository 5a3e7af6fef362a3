import json

import pytest

from redwords import Filling, Permutation, super_tableau
from redwords.cli import main

from conftest import WORD_GRID_42153


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_enumerate_words(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "-w", "4,2,1,5,3")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 11
    assert set(lines) == {
        ",".join(map(str, letters)) for letters in WORD_GRID_42153.values()
    }


def test_enumerate_json_matches_plain(capsys):
    code, plain, _ = run_cli(capsys, "enumerate", "-w", "4,2,1,5,3")
    code2, as_json, _ = run_cli(capsys, "enumerate", "--json", "-w", "4,2,1,5,3")
    assert code == code2 == 0
    payload = json.loads(as_json)
    assert payload["elements"] == plain.splitlines()
    assert payload["w"] == "4,2,1,5,3"
    assert payload["model"] == "words"
    # the global flag also works ahead of the subcommand
    _, early_flag, _ = run_cli(capsys, "--json", "enumerate", "-w", "4,2,1,5,3")
    assert json.loads(early_flag) == payload


def test_enumerate_tableaux(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "-w", "4,2,1,5,3", "--model", "tableaux")
    assert code == 0
    assert len(out.splitlines()) == 11
    assert "1,1,3;1,2,2;1,3,1;2,1,4;4,3,5" in out.splitlines()


def test_super_word(capsys):
    code, out, _ = run_cli(capsys, "super", "-w", "4,1,7,5,8,2,3,6")
    assert code == 0
    assert out.strip() == "5,6,7,4,5,3,4,5,6,1,2,3"


def test_super_tableau_shows_rendering(capsys):
    code, out, _ = run_cli(capsys, "super", "-w", "4,2,1,5,3", "--model", "tableaux")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "1,1,3;1,2,2;1,3,1;2,1,4;4,3,5"
    assert lines[1:] == ["    5", "", "4", "3 2 1"]
    _, as_json, _ = run_cli(
        capsys, "super", "--json", "-w", "4,2,1,5,3", "--model", "tableaux"
    )
    payload = json.loads(as_json)
    assert payload["element"] == lines[0]
    assert payload["display"].splitlines() == lines[1:]


def test_inv_word(capsys):
    code, out, _ = run_cli(capsys, "inv", "--word", "5,6,3,4,5,7,3,1,4,2,3,6")
    assert code == 0
    assert out.splitlines() == [
        "inversions: 11",
        "permutation: 2,3,5,1,8,9,10,4,6,7,11,12",
        "yang_baxter: 2",
    ]
    _, as_json, _ = run_cli(
        capsys, "inv", "--json", "--word", "5,6,3,4,5,7,3,1,4,2,3,6"
    )
    payload = json.loads(as_json)
    assert payload == {
        "inversions": 11,
        "permutation": "2,3,5,1,8,9,10,4,6,7,11,12",
        "yang_baxter": 2,
    }


def test_inv_tableau(tmp_path, capsys):
    path = tmp_path / "tableau.txt"
    path.write_text(
        "1,1,5;1,2,3;1,3,2;3,2,9;3,3,8;3,5,10;3,6,1;4,2,6;4,3,4;5,2,12;5,3,11;5,6,7\n"
    )
    code, out, _ = run_cli(capsys, "inv", "--tableau", str(path))
    assert code == 0
    assert out.splitlines() == [
        "inversions: 11",
        "permutation: 2,3,5,1,8,9,10,4,6,7,11,12",
        "yang_baxter: 2",
    ]


def test_inv_rejects_unbalanced_tableau(tmp_path, capsys):
    path = tmp_path / "tableau.txt"
    path.write_text("1,1,5;1,2,3;1,3,2;2,1,1;4,3,4\n")
    code, _, err = run_cli(capsys, "inv", "--tableau", str(path))
    assert code == 1
    assert "not balanced" in err


def test_dist(capsys):
    code, out, _ = run_cli(
        capsys,
        "dist",
        "-w", "4,3,2,1",
        "--from", "1,2,1,3,2,1",
        "--to", "1,3,2,1,3,2",
    )
    assert code == 0
    assert out.splitlines() == ["distance: 4", "min_braids: 2"]
    _, as_json, _ = run_cli(
        capsys,
        "dist", "--json",
        "-w", "4,3,2,1",
        "--from", "1,2,1,3,2,1",
        "--to", "1,3,2,1,3,2",
    )
    assert json.loads(as_json) == {"distance": 4, "min_braids": 2}


def test_dist_tableau_model(capsys):
    top = super_tableau(Permutation([4, 3, 2, 1]))
    from redwords import psi

    bottom = psi(top)
    code, out, _ = run_cli(
        capsys,
        "dist",
        "-w", "4,3,2,1",
        "--model", "tableaux",
        "--from", top.to_text(),
        "--to", bottom.to_text(),
    )
    assert code == 0
    assert out.splitlines()[0] == "distance: 7"


def test_diameter_exact_and_formula_agree(capsys):
    code, exact, _ = run_cli(capsys, "diameter", "-n", "4", "--exact")
    code2, formula, _ = run_cli(capsys, "diameter", "-n", "4", "--formula")
    assert code == code2 == 0
    assert exact == formula == "7\n"
    _, shortcut, _ = run_cli(capsys, "diameter", "-n", "4", "--shortcut")
    assert shortcut == "7\n"
    _, as_json, _ = run_cli(capsys, "diameter", "--json", "-n", "4")
    assert json.loads(as_json) == {"diameter": 7}


def test_biject_round_trip(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "biject", "--word", "5,6,3,4,5,7,3,1,4,2,3,6")
    assert code == 0
    tableau_text = out.splitlines()[0]
    path = tmp_path / "t.txt"
    path.write_text(tableau_text + "\n")
    code, word_out, _ = run_cli(capsys, "biject", "--tableau", str(path))
    assert code == 0
    assert word_out.strip() == "5,6,3,4,5,7,3,1,4,2,3,6"


def test_flip_and_psi(tmp_path, capsys):
    top = super_tableau(Permutation([4, 3, 2, 1]))
    path = tmp_path / "top.txt"
    path.write_text(top.to_text() + "\n")

    code, out, _ = run_cli(capsys, "psi", "--tableau", str(path))
    assert code == 0
    assert out.splitlines()[0] == "1,1,4;1,2,5;1,3,6;2,1,2;2,2,3;3,1,1"

    code, out, _ = run_cli(capsys, "flip", "--tableau", str(path))
    assert code == 0
    assert Filling.from_text(out.splitlines()[0]) == Filling(
        {(1, 1): 4, (1, 2): 2, (1, 3): 1, (2, 1): 5, (2, 2): 3, (3, 1): 6}
    )


def test_tableau_commands_json_matches_plain(tmp_path, capsys):
    top = super_tableau(Permutation([4, 3, 2, 1]))
    path = tmp_path / "top.txt"
    path.write_text(top.to_text() + "\n")
    for command in ("flip", "psi"):
        _, plain, _ = run_cli(capsys, command, "--tableau", str(path))
        _, as_json, _ = run_cli(capsys, command, "--json", "--tableau", str(path))
        payload = json.loads(as_json)
        assert plain.splitlines() == [payload["tableau"]] + payload[
            "display"
        ].splitlines()
    _, plain, _ = run_cli(capsys, "biject", "--tableau", str(path))
    _, as_json, _ = run_cli(capsys, "biject", "--json", "--tableau", str(path))
    assert plain.splitlines() == [json.loads(as_json)["word"]]


def test_psi_rejects_non_staircase(tmp_path, capsys):
    path = tmp_path / "t.txt"
    path.write_text(super_tableau(Permutation([4, 2, 1, 5, 3])).to_text())
    code, _, err = run_cli(capsys, "psi", "--tableau", str(path))
    assert code == 1
    assert "longest" in err


def test_graph_dot(capsys):
    code, out, _ = run_cli(capsys, "graph", "-w", "4,3,2,1", "--format", "dot")
    assert code == 0
    assert out.splitlines()[0] == "graph {"
    assert out.count(" -- ") == 18


def test_graph_json_to_file(tmp_path, capsys):
    target = tmp_path / "graph.json"
    code, out, _ = run_cli(
        capsys, "graph", "-w", "4,3,2,1", "--format", "json", "-o", str(target)
    )
    assert code == 0
    assert out == ""
    payload = json.loads(target.read_text())
    assert len(payload["vertices"]) == 16
    assert len(payload["edges"]) == 18
    assert {"u", "v", "move"} <= set(payload["edges"][0])


def test_graph_budget_exceeded(capsys):
    code, _, err = run_cli(capsys, "graph", "-w", "4,3,2,1", "--budget", "3")
    assert code == 1
    assert "budget" in err


def test_verify_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "-n", "2")
    assert code == 0
    lines = out.splitlines()
    assert all(line.startswith("CHECK ") for line in lines[:-1])
    assert all(": PASS" in line for line in lines[:-1])
    assert lines[-1].startswith("RESULT: PASS")


def test_verify_json(capsys):
    code, out, _ = run_cli(capsys, "verify", "--json", "-n", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["n"] == 2
    assert payload["passed"] is True
    assert all(check["passed"] for check in payload["checks"])


def test_malformed_input_exits_one(capsys):
    code, _, err = run_cli(capsys, "enumerate", "-w", "4,2")
    assert code == 1
    assert "error" in err

    code, _, err = run_cli(capsys, "inv", "--word", "1,x")
    assert code == 1

    code, _, err = run_cli(capsys, "inv", "--tableau", "/nonexistent/file.txt")
    assert code == 1


def test_usage_error_exits_one():
    with pytest.raises(SystemExit) as exc:
        main(["enumerate"])  # missing -w
    assert exc.value.code == 1
