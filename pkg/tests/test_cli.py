import json

import pytest

from almostflat.bundle import identity_bundle
from almostflat.cli import CHECK_FAILED, INPUT_ERROR, PASS, _settings, build_parser, main
from almostflat.fixtures import torus_complex
from almostflat.quasirep import clock_shift
from almostflat.simplicial import skeleton
from almostflat.utils import SCHEMA_VERSION, bundle_to_dict, complex_to_dict, dump_json, rep_to_dict, transition_key


def run(capsys, *argv):
    code = main(list(argv))
    return code, json.loads(capsys.readouterr().out)


@pytest.fixture
def flat_bundle_file(tmp_path, capsys):
    path = str(tmp_path / "flat.json")
    code, _ = run(capsys, "--output", path, "fixture", "random-flat", "--rank", "2", "--eps", "0.02")
    assert code == PASS
    return path


def test_every_report_carries_the_schema_version(capsys):
    code, report = run(capsys, "fixture", "torus")
    assert code == PASS
    assert report["schema"] == SCHEMA_VERSION
    assert report["command"] == "fixture"
    assert len(report["document"]["faces"]) == 14


def test_validate_the_torus(tmp_path, capsys):
    path = str(tmp_path / "torus.json")
    run(capsys, "--output", path, "fixture", "torus")
    code, report = run(capsys, "validate", path)
    assert code == PASS
    assert report["euler_characteristic"] == 0
    assert report["closed_oriented_surface"] is True
    assert report["orientation_consistent"] is True


def test_chern_number_of_a_monopole(tmp_path, capsys):
    path = str(tmp_path / "monopole.json")
    run(capsys, "--lattice-depth", "2", "--output", path, "fixture", "monopole", "--q", "2", "--depth", "1")
    code, report = run(capsys, "chern", path)
    assert code == PASS
    assert report["chern"] == 2


def test_audit_of_a_flat_bundle(flat_bundle_file, capsys):
    code, report = run(capsys, "audit", flat_bundle_file)
    assert code == PASS
    assert 0.0 < report["flatness"] <= 0.02 + 1e-12
    assert report["cocycle"]["passed"] is True


def test_audit_of_a_corrupted_bundle_fails(flat_bundle_file, tmp_path, capsys):
    with open(flat_bundle_file, encoding="utf-8") as file:
        document = json.load(file)
    key = transition_key((0,), (0, 1, 2))
    document["transitions"][key] = [[[[-x for x in z] for z in row] for row in m] for m in document["transitions"][key]]
    corrupted = str(tmp_path / "corrupted.json")
    dump_json(document, corrupted)

    code, report = run(capsys, "audit", corrupted)
    assert code == CHECK_FAILED
    assert report["passed"] is False
    assert report["cocycle"]["violation"]["sigma"] == [0, 1, 2]


def test_trivialize_and_bundle2rep(flat_bundle_file, capsys):
    code, report = run(capsys, "trivialize", flat_bundle_file)
    assert code == PASS
    assert len(report["certificates"]) == 2
    assert report["compatibility_residual"] < 1e-9

    code, report = run(capsys, "bundle2rep", flat_bundle_file, "--witness")
    assert code == PASS
    assert report["generators"] == 2
    assert all(row["pass"] for row in report["relation_bounds"])


def test_extend_a_one_skeleton_bundle(tmp_path, capsys, square):
    bundle_path, complex_path = str(tmp_path / "edges.json"), str(tmp_path / "square.json")
    dump_json(bundle_to_dict(identity_bundle(skeleton(square, 1))), bundle_path)
    dump_json(complex_to_dict(square), complex_path)

    code, report = run(capsys, "extend", bundle_path, "--to-skeleton", "2", "--complex", complex_path)
    assert code == PASS
    assert report["dimension"] == 2
    assert report["flatness"] == 0.0


def test_rep2bundle_from_a_clock_shift_pair(tmp_path, capsys):
    path = str(tmp_path / "rep.json")
    dump_json(rep_to_dict(clock_shift(24)), path)
    code, report = run(capsys, "--lattice-depth", "3", "rep2bundle", path)
    assert code == PASS
    assert report["chern"] == 1


def test_probe(capsys):
    code, report = run(capsys, "--lattice-depth", "3", "probe", "--clock-shift", "12,24")
    assert code == PASS
    assert report["witness"] is True
    assert report["ks"] == [12, 24]


def test_rank_two_pair_is_refused(tmp_path, capsys):
    path = str(tmp_path / "rep.json")
    dump_json(rep_to_dict(clock_shift(2)), path)
    code, report = run(capsys, "--lattice-depth", "2", "rep2bundle", path)
    assert code == CHECK_FAILED
    assert report["precondition"] == "ThresholdError"


def test_malformed_json_is_an_input_error(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{", encoding="utf-8")
    code, report = run(capsys, "audit", str(path))
    assert code == INPUT_ERROR
    assert report["passed"] is False


def test_missing_file_is_an_input_error(tmp_path, capsys):
    code, _ = run(capsys, "chern", str(tmp_path / "missing.json"))
    assert code == INPUT_ERROR


def test_a_flipped_triangle_fails_validation(tmp_path, capsys):
    document = complex_to_dict(torus_complex())
    document["orientation"]["0"] = -document["orientation"]["0"]
    path = str(tmp_path / "flipped.json")
    dump_json(document, path)

    code, report = run(capsys, "validate", path)
    assert code == CHECK_FAILED
    assert report["orientation_consistent"] is False
    assert report["closed_oriented_surface"] is False
    assert report["error"].startswith("Edge")
    assert report["euler_characteristic"] == 0


def test_tol_also_sets_the_audit_tolerance():
    settings = _settings(build_parser().parse_args(["--tol", "1e-3", "validate", "torus.json"]))
    assert settings.tol == 1e-3
    assert settings.audit_tol == 1e-3

    args = ["--tol", "1e-3", "--audit-tol", "1e-5", "validate", "torus.json"]
    settings = _settings(build_parser().parse_args(args))
    assert settings.tol == 1e-3
    assert settings.audit_tol == 1e-5
