import json
import math

import pytest

from acutesphere import fixtures
from acutesphere.cli import main


def fixture_file(name):
    return str(fixtures.fixture_path(name))


def run(capsys, argv):
    code = main(argv)
    out, err = capsys.readouterr()
    report = json.loads(out) if out.strip() else None
    return code, report, err


def test_check_icosahedron(capsys):
    code, report, err = run(capsys, ["check", fixture_file("icosahedron")])
    assert code == 0
    assert report["verdicts"]["acute_realizable"]
    assert report["verdicts"]["flag_no_square"]
    assert report["verdicts"]["itoh_face_count"]
    assert "acute-realizable" in err


def test_check_obstructed_double(capsys):
    code, report, err = run(capsys, ["check", fixture_file("square_disk_a_double")])
    assert code == 1
    assert not report["verdicts"]["acute_realizable"]
    kinds = {w["kind"] for w in report["witnesses"]}
    assert "separating-4-cycle" in kinds


def test_check_malformed_file(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{broken")
    with pytest.raises(SystemExit) as exc:
        run(capsys, ["check", str(bad)])
    assert exc.value.code == 2


def test_check_labeled(capsys):
    code, report, _ = run(capsys, ["check", fixture_file("icosahedron"), "--labels"])
    assert code == 0
    assert report["verdicts"]["coxeter_one_ended"]
    assert report["verdicts"]["faces_induce_finite_groups"]


def test_realize_writes_outputs(tmp_path, capsys):
    code, report, err = run(capsys, [
        "realize", fixture_file("icosahedron"), "--out", str(tmp_path), "--seed", "0"])
    assert code == 0
    assert report["verdicts"]["acute"]
    assert report["metrics"]["edge_residual"] < 1e-9
    stem = "icosahedron"
    assert (tmp_path / f"{stem}.off").exists()
    assert (tmp_path / f"{stem}.svg").exists()
    data = json.loads((tmp_path / f"{stem}.realization.json").read_text())
    assert set(data["vertices"]) == set(fixtures.load("icosahedron").vertices)
    off = (tmp_path / f"{stem}.off").read_text().splitlines()
    assert off[0] == "OFF" and off[1].split()[0] == "12"


def test_realize_refusal_exit_code(capsys):
    code, report, err = run(capsys, ["realize", fixture_file("square_disk_a_double")])
    assert code == 1
    assert not report["verdicts"]["realized"]
    assert report["witnesses"]


def test_realize_planar_euclidean_export(tmp_path, capsys):
    code, report, _ = run(capsys, [
        "realize", fixture_file("maehara_cap_5"), "--out", str(tmp_path)])
    assert code == 0
    assert (tmp_path / "maehara_cap_5.euclidean.svg").exists()


def test_dual_absence(capsys):
    code, report, err = run(capsys, ["dual", "--triangle", "1,0.5,0.6",
                                     "--target", "2,3,5"])
    assert code == 1
    assert report["absence"]["reason"] == "sign-constant"
    assert report["absence"]["grid_step"] <= 1e-4


def test_dual_witness(capsys):
    code, report, err = run(capsys, ["dual", "--triangle", "1.1,1.1,1.1",
                                     "--target", "2,2,2", "--samples", "20000"])
    assert code == 0
    w = report["witness"]
    assert 0 < w["x"] < 1
    assert report["cube"]["vertices"]["O'"]
    assert report["cube"]["volume"]["value"] > 0
    assert report["metrics"]["cube_volume_stderr"] > 0


def test_dual_invalid_sides(capsys):
    code, _, err = run(capsys, ["dual", "--triangle", "0.9,0.9,2.0",
                                "--target", "2,2,2"])
    assert code == 2
    assert "input error" in err


def test_dual_target_triangle(capsys):
    code, report, _ = run(capsys, ["dual", "--triangle", "1.1,1.1,1.1",
                                   "--target-triangle",
                                   f"{math.pi/2},{math.pi/2},{math.pi/2}"])
    assert code == 0


def test_invariants_icosahedron(capsys):
    code, report, err = run(capsys, [
        "invariants", fixture_file("icosahedron"), "--samples", "20000", "--seed", "1"])
    assert code == 0
    assert abs(report["metrics"]["alpha"] - 2 * math.pi / 5) < 1e-3
    assert abs(report["metrics"]["beta"] - 4.3062076) < 0.15
    assert report["metrics"]["beta_stderr"] > 0


def test_invariants_beta_refused_when_obstructed(capsys):
    code, report, err = run(capsys, [
        "invariants", fixture_file("square_disk_a_double"), "--samples", "2000"])
    assert code == 0
    assert "beta" not in report["metrics"]
    assert any("beta refused" in n for n in report["notes"])
    assert report["metrics"]["alpha"] >= math.pi / 2


def test_invariants_deterministic(capsys):
    _, r1, _ = run(capsys, ["invariants", fixture_file("icosahedron"),
                            "--samples", "5000", "--seed", "3"])
    _, r2, _ = run(capsys, ["invariants", fixture_file("icosahedron"),
                            "--samples", "5000", "--seed", "3"])
    assert r1["metrics"] == r2["metrics"]


def test_construct_cap_and_double(tmp_path, capsys):
    out = tmp_path / "cap5.json"
    code, _, err = run(capsys, ["construct", "cap", "5", "--out", str(out)])
    assert code == 0
    doc = json.loads(out.read_text())
    assert len(doc["faces"]) == 45
    code2, _, err2 = run(capsys, ["construct", "double", str(out)])
    assert code2 == 0


def test_construct_flip_boundary_edge_fails(tmp_path, capsys):
    out = tmp_path / "cap5.json"
    run(capsys, ["construct", "cap", "5", "--out", str(out)])
    code, _, err = run(capsys, ["construct", "flip", str(out), "--edge", "b0,b1"])
    assert code == 2
    assert "input error" in err


def test_construct_cap_too_small(capsys):
    code, _, err = run(capsys, ["construct", "cap", "4"])
    assert code == 2


def test_check_and_realize_agree_on_verdicts(capsys):
    # the combinatorial checker and the realizer never disagree, over the
    # whole shipped corpus
    for name in fixtures.FIXTURE_NAMES:
        path = fixture_file(name)
        check_code, _, _ = run(capsys, ["check", path])
        realize_code, _, _ = run(capsys, ["realize", path, "--seed", "0"])
        assert (check_code == 0) == (realize_code == 0), name
