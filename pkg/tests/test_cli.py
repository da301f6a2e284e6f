import io
import json

import pytest

from spohncurves import cli

PD = '{"A": [[2,0],[3,1]], "B": [[2,3],[0,1]]}'
G44 = '{"A": [[1,2],[0,3]], "B": [[6,1],[4,0]]}'
PAIR = json.dumps({
    "A": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]],
    "B": [[0, 0, "1/2", 0], [0, 0, "-1/2", "1/2"],
          ["1/2", "-1/2", 0, "-1/2"], [0, "1/2", "-1/2", 0]],
    "point": [1, 1, 1, 1],
})


def run_ok(capsys, argv, code=0):
    assert cli.run(argv) == code
    out, err = capsys.readouterr()
    return out, err


def no_floats(node):
    if isinstance(node, float):
        return False
    if isinstance(node, dict):
        return all(no_floats(v) for v in node.values())
    if isinstance(node, list):
        return all(no_floats(v) for v in node)
    return True


# --- golden output bytes ----------------------------------------------------------------

def test_j_golden_bytes(capsys):
    out, _ = run_ok(capsys, ["j", "--game", G44])
    assert out == '{"j": "2810381476/227025"}\n'


def test_approx_golden_bytes(capsys):
    out, _ = run_ok(capsys, ["approx", "--value",
                             "1.202056903159594285399738161511",
                             "--convergents", "15"])
    assert out == '{"approx": "1479821/1231074"}\n'


def test_classify_golden_bytes(capsys):
    out, _ = run_ok(capsys, ["classify", "--game", PD])
    assert out == '{"cases": [9, 10], "kind": "Reducible"}\n'


def test_nash_pd(capsys):
    out, _ = run_ok(capsys, ["nash", "--game", PD])
    assert json.loads(out) == {"pure": [[2, 2]], "totally_mixed": "degenerate"}


def test_konstanz_det(capsys):
    out, _ = run_ok(capsys, ["konstanz", "--game", PD, "--payoffs", "9/4,7/3"])
    data = json.loads(out)
    assert data["det"] == "-19/72"
    assert data["pi1"] == "9/4" and data["pi2"] == "7/3"


def test_reduce_with_weierstrass_model(capsys):
    out, _ = run_ok(capsys, ["reduce", "--pair", PAIR, "--point", "1,1,1"])
    data = json.loads(out)
    assert data["j"] == "65536/37"
    assert data["weierstrass"]["j"] == "65536/37"


def test_equiv_coordination_games(capsys):
    g1 = '{"A": [[3,0],[0,2]], "B": [[2,1],[0,3]]}'
    g2 = '{"A": [[3,1],[0,2]], "B": [[2,0],[0,3]]}'
    out, _ = run_ok(capsys, ["equiv", "--game", g1, "--game2", g2])
    data = json.loads(out)
    assert data["fully_equivalent"] is True
    assert data["j1"] == data["j2"] == "365986170577/44976384"


# --- input channels ---------------------------------------------------------------------

def test_game_from_file(tmp_path, capsys):
    path = tmp_path / "game.json"
    path.write_text(G44)
    out, _ = run_ok(capsys, ["j", "--game", str(path)])
    assert out == '{"j": "2810381476/227025"}\n'


def test_game_from_stdin(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO(G44))
    out, _ = run_ok(capsys, ["j", "--game", "-"])
    assert out == '{"j": "2810381476/227025"}\n'


def test_game_from_bimatrix(capsys):
    out, _ = run_ok(capsys, ["classify", "--bimatrix", "2,2 0,3; 3,0 1,1"])
    assert out == '{"cases": [9, 10], "kind": "Reducible"}\n'


def test_identical_bytes_on_repeat(capsys):
    first, _ = run_ok(capsys, ["decompose", "--game", PD])
    second, _ = run_ok(capsys, ["decompose", "--game", PD])
    assert first == second


def test_text_format(capsys):
    out, _ = run_ok(capsys, ["j", "--game", G44, "--format", "text"])
    assert out == "j = 2810381476/227025\n"


# --- exit codes -------------------------------------------------------------------------

def test_zero_cubic_j_is_domain_error(capsys):
    flat = '{"A": [[1,1],[1,1]], "B": [[0,1],[2,3]]}'
    out, err = run_ok(capsys, ["j", "--game", flat], code=1)
    assert out == ""
    assert "domain error" in err


def test_singular_nonzero_cubic_j_succeeds(capsys):
    g = '{"A": [[1,1],[2,0]], "B": [[3,-2],[-1,4]]}'
    out, _ = run_ok(capsys, ["j", "--game", g])
    assert out == '{"j": "singular"}\n'


def test_equiv_singular_game_is_domain_error(capsys):
    _, err = run_ok(capsys, ["equiv", "--game", PD, "--game2", G44], code=1)
    assert "domain error" in err and "singular" in err


def test_malformed_json_is_usage_error(capsys):
    _, err = run_ok(capsys, ["classify", "--game", '{"A": [[1,2],'], code=2)
    assert "usage error" in err


def test_unreadable_file_is_usage_error(capsys):
    _, err = run_ok(capsys, ["classify", "--game", "/nonexistent/game.json"], code=2)
    assert "usage error" in err


def test_missing_game_is_usage_error(capsys):
    _, err = run_ok(capsys, ["classify"], code=2)
    assert "usage error" in err


def test_both_game_and_bimatrix_rejected(capsys):
    _, err = run_ok(capsys, ["classify", "--game", PD,
                             "--bimatrix", "2,2 0,3; 3,0 1,1"], code=2)
    assert "exactly one" in err


def test_no_subcommand_prints_usage(capsys):
    assert cli.run([]) == 2
    _, err = capsys.readouterr()
    assert "usage" in err


def test_unknown_subcommand_exits_two():
    with pytest.raises(SystemExit) as exc:
        cli.run(["frobnicate"])
    assert exc.value.code == 2


def test_witness_flag_conflicts(capsys):
    _, err = run_ok(capsys, ["witness", "--game", PD], code=2)
    assert "usage error" in err
    _, err = run_ok(capsys, ["witness", "--game", PD, "--ne", "0,0",
                             "--cooperation"], code=2)
    assert "usage error" in err


def test_de_check_rejects_non_distribution(capsys):
    _, err = run_ok(capsys, ["de-check", "--game", PD,
                             "--point", "1,1,1,1"], code=2)
    assert "usage error" in err


# --- payload hygiene --------------------------------------------------------------------

def test_exact_commands_never_emit_floats(capsys):
    for argv in (["cubic", "--game", PD],
                 ["classify", "--game", PD],
                 ["decompose", "--game", PD],
                 ["nash", "--game", PD],
                 ["konstanz", "--game", PD, "--payoffs", "9/4,7/3"],
                 ["de-check", "--game", PD, "--point", "1/4,1/4,1/4,1/4"],
                 ["equiv", "--game", G44, "--game2", G44],
                 ["reduce", "--pair", PAIR],
                 ["approx", "--value", "3.14159265", "--convergents", "4"]):
        out, _ = run_ok(capsys, argv)
        assert no_floats(json.loads(out)), argv


def test_numeric_commands_are_marked(capsys):
    out, _ = run_ok(capsys, ["witness", "--game", PD, "--ne", "0,0"])
    data = json.loads(out)
    assert data["numeric"] is True
    out, _ = run_ok(capsys, ["witness", "--game", PD, "--cooperation"])
    data = json.loads(out)
    assert data["numeric"] is True and data["lambda"] == "1/2"
    out, _ = run_ok(capsys, ["pareto", "--game", PD, "--grid", "30", "--seed", "1"])
    data = json.loads(out)
    assert data["numeric"] is True
    assert data["reference"]["kind"] == "pure (2,2)"


def test_de_check_interior_point(capsys):
    out, _ = run_ok(capsys, ["de-check", "--game", PD,
                             "--point", "1/4,1/4,1/4,1/4"])
    data = json.loads(out)
    assert data["verdict"] == "notDE"
    assert data["conditional_payoffs"]["E_2^(1)"] == "2"


def test_de_check_boundary_point(capsys):
    out, _ = run_ok(capsys, ["de-check", "--game", PD, "--point", "0,0,0,1"])
    data = json.loads(out)
    assert data["verdict"] == "boundary-undecided"
    assert "conditional_payoffs" not in data
