import json

from toricnef import cli, report
from toricnef.fan import fan_from_dict


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_nef_trivial_example1(capsys):
    code, out, _ = run_cli(capsys, "nef-trivial", "catalog:example1")
    assert (code, out) == (0, "true\n")


def test_nef_check_anticanonical_on_lemma_b(capsys):
    code, out, _ = run_cli(capsys, "nef-check", "catalog:lemma-b", "-d", "-K")
    assert (code, out) == (0, "true\n")


def test_nef_check_anticanonical_on_example1(capsys):
    code, out, _ = run_cli(capsys, "nef-check", "catalog:example1", "-d", "-K")
    assert (code, out) == (0, "false\n")


def test_picard_of_extended_example(capsys):
    code, out, _ = run_cli(capsys, "picard", "catalog:example1-extended", "--param", "k=2")
    assert (code, out) == (0, "7\n")


def test_assert_flag_turns_false_into_exit_2(capsys):
    code, out, _ = run_cli(capsys, "nef-check", "catalog:example1", "-d", "-K", "--assert")
    assert code == 2
    assert out == "false\n"


def test_json_output_schema(capsys):
    code, out, _ = run_cli(capsys, "smooth", "catalog:example1", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj == {"schema": 1, "command": "smooth", "value": True}


def test_validate_good_and_bad_files(tmp_path, capsys):
    good = tmp_path / "good.json"
    good.write_text(json.dumps({
        "dim": 2,
        "rays": [[1, 0], [0, 1], [-1, -1]],
        "max_cones": [[0, 1], [1, 2], [0, 2]],
    }))
    code, out, _ = run_cli(capsys, "validate", str(good))
    assert (code, out) == (0, "true\n")

    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({
        "dim": 2,
        "rays": [[2, 0], [0, 1], [-1, -1]],
        "max_cones": [[0, 1], [1, 2], [0, 2]],
    }))
    code, _, err = run_cli(capsys, "validate", str(bad))
    assert code == 1
    assert "not primitive" in err


def test_float_in_fan_file_rejected(tmp_path, capsys):
    path = tmp_path / "f.json"
    path.write_text('{"dim": 2, "rays": [[1.0, 0], [0, 1], [-1, -1]], '
                    '"max_cones": [[0, 1], [1, 2], [0, 2]]}')
    code, _, err = run_cli(capsys, "validate", str(path))
    assert code == 1
    assert "exact integers" in err


def test_param_with_file_source_is_an_error(tmp_path, capsys):
    path = tmp_path / "f.json"
    path.write_text("{}")
    code, _, err = run_cli(capsys, "smooth", str(path), "--param", "a=1")
    assert code == 1
    assert "--param is only valid with catalog: sources" in err


def test_catalog_get_round_trips(capsys):
    code, out, _ = run_cli(capsys, "catalog", "get", "example2", "--param", "a=3")
    assert code == 0
    fan = fan_from_dict(json.loads(out))
    assert fan.rays[3] == (0, -1, -3)


def test_catalog_list_contains_entries(capsys):
    code, out, _ = run_cli(capsys, "catalog", "list")
    assert code == 0
    assert "example1" in out
    assert "example3 [a, b]" in out


def test_walls_output(capsys):
    code, out, _ = run_cli(capsys, "walls", "catalog:p1", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["walls"] == [{"shared": [], "opposite": [0, 1], "relation": [1, 1]}]


def test_subdivide_emits_fan_file(capsys):
    code, out, _ = run_cli(capsys, "subdivide", "catalog:p2", "-w", "1,1")
    assert code == 0
    fan = fan_from_dict(json.loads(out))
    assert len(fan.max_cones) == 4


def test_subdivide_negative_coordinates(capsys):
    code, out, _ = run_cli(capsys, "subdivide", "catalog:p2", "-w", "-1,0")
    assert code == 0
    fan = fan_from_dict(json.loads(out))
    assert (-1, 0) in fan.rays


def test_map_check_and_refines(capsys):
    code, out, _ = run_cli(
        capsys, "map-check", "-m", "[[1,0,0],[0,1,0]]", "catalog:8-14p", "catalog:p2"
    )
    assert (code, out) == (0, "true\n")
    code, out, _ = run_cli(capsys, "refines", "catalog:example1", "catalog:example1-sigma")
    assert (code, out) == (0, "true\n")
    code, out, _ = run_cli(capsys, "refines", "catalog:example1-sigma", "catalog:example1",
                           "--assert")
    assert (code, out) == (2, "false\n")


def test_pullback_output(capsys):
    code, out, _ = run_cli(
        capsys, "pullback", "-m", "[[1,0,0],[0,1,0]]",
        "catalog:8-14p", "catalog:p2", "-d", "1,0,0",
    )
    assert code == 0
    assert json.loads(out) == [0, 1, 0, 0, 0, 1, 0, 0]


def test_polytope_output(capsys):
    code, out, _ = run_cli(capsys, "polytope", "catalog:p1", "-d", "1,1")
    assert code == 0
    assert out.splitlines() == ["vertex: -1", "vertex: 1"]


def test_sweep_is_sorted_and_deterministic(capsys):
    args = ["nef-trivial", "catalog:example2", "--sweep", "a=1..3"]
    code, out1, _ = run_cli(capsys, *args)
    assert code == 0
    assert out1 == "a=1: true\na=2: true\na=3: true\n"
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2


def test_sweep_requires_catalog_source(tmp_path, capsys):
    path = tmp_path / "f.json"
    path.write_text("{}")
    code, _, err = run_cli(capsys, "smooth", str(path), "--sweep", "a=0..1")
    assert code == 1
    assert "catalog" in err


def test_bad_divisor_exits_1(capsys):
    code, _, err = run_cli(capsys, "nef-check", "catalog:example1", "-d", "1,2")
    assert code == 1
    assert "coefficients" in err


def test_report_exit_code_follows_results(capsys, monkeypatch):
    stub = [report.CheckResult("1", "stub ok")]
    monkeypatch.setattr(report, "run_all", lambda: stub)
    code, out, _ = run_cli(capsys, "report", "paper")
    assert code == 0
    assert "[1] pass  stub ok" in out
    assert "1/1 criteria passed" in out

    failing = [report.CheckResult("1", "stub bad", passed=False, details=["boom"])]
    monkeypatch.setattr(report, "run_all", lambda: failing)
    code, out, _ = run_cli(capsys, "report", "paper", "--json")
    assert code == 2
    obj = json.loads(out)
    assert obj["passed"] is False
    assert obj["checks"][0]["details"] == ["boom"]
