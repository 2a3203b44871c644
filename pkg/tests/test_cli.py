import json
import subprocess
import sys

import pytest

from takiff import cli
from takiff.liealg import build_algebra, dumps, to_json
from takiff.rational import q, qstr


def run(tmp_path, *args):
    out = tmp_path / "report.json"
    code = cli.main([*args, "--output", str(out)])
    return code, json.loads(out.read_text()), out.read_bytes()


def test_central_example(tmp_path):
    code, report, _ = run(tmp_path, "central", "--type", "A1", "--ell", "1", "--m", "2")
    assert code == 0 and report["passed"]
    rows = {r["label"]: r for r in report["results"][0]["elements"]}
    assert rows["theta_2^(1)"]["central"] and rows["theta_2^(2)"]["central"]
    assert not rows["theta_2^(0)"]["central"]
    assert rows["theta_2^(0)"]["witness"]["residual"]["terms"] > 0


def test_band_sharpness_expectation(tmp_path):
    code, report, _ = run(tmp_path, "central", "--type", "A2", "--ell", "1", "--m", "3",
                          "--expect", "band-sharpness")
    assert code == 0
    assert "central.band-sharpness" in report["checks"]
    assert [r["central"] for r in report["results"][0]["elements"]] == [False, False, True, True]


def test_sugawara_d3(tmp_path):
    code, report, _ = run(tmp_path, "sugawara", "--type", "D3", "--ell", "1", "--m", "2", "--level", "critical")
    assert code == 0
    assert report["level"] == report["critical_level"] == "-8/1"
    labels = [v["label"] for v in report["vectors"]]
    assert labels == ["Theta_2^(1)", "Theta_2^(2)", "Pi^(2)", "Pi^(3)"]
    assert all(v["annihilated"] for v in report["vectors"])
    assert all(set(v["residual_norms"].values()) == {0} for v in report["vectors"])


def test_sugawara_off_critical_fails(tmp_path):
    code, report, _ = run(tmp_path, "sugawara", "--type", "A1", "--m", "2", "--level", "0")
    assert code == 1
    bottom = report["vectors"][0]
    assert not bottom["annihilated"]
    assert bottom["witness"]["family"] == "F0[1]"
    assert bottom["level_fit_F0[1]"]["root"] == "-4/1"


def test_ell_zero_quadratic_is_annihilated(tmp_path):
    # the classical Sugawara vector passes at the critical level, so
    # expecting a failure for it does not hold
    code, report, _ = run(tmp_path, "sugawara", "--type", "A1", "--ell", "0", "--m", "2",
                          "--expect", "ell-zero-failure")
    assert code == 1
    assert report["verdict"] == "Segal-Sugawara"


def test_ell_zero_quartic_failure_expected(tmp_path):
    code, report, _ = run(tmp_path, "sugawara", "--type", "A1", "--ell", "0", "--m", "4",
                          "--expect", "ell-zero-failure")
    assert code == 0
    assert report["verdict"] == "not annihilated"


def test_other_commands(tmp_path):
    for args in (["build", "--type", "C2"], ["verify-presentation", "--type", "B2"],
                 ["pfaffian", "--type", "D3"], ["independence", "--type", "A2", "--seed", "12"],
                 ["completeness", "--type", "A1", "--max-s", "1"], ["chevalley", "--type", "A2"]):
        code, report, _ = run(tmp_path, *args)
        assert code == 0, args
        assert report["passed"]
    code, report, _ = run(tmp_path, "independence", "--type", "A2", "--seed", "12")
    assert report["rank"]["seeds"] == [12]


def test_reports_are_byte_identical(tmp_path):
    args = ["central", "--type", "A2", "--ell", "1", "--m", "2", "3"]
    assert run(tmp_path, *args)[2] == run(tmp_path, *args)[2]
    args = ["sugawara", "--type", "A1", "--m", "2", "--level", "1/3"]
    assert run(tmp_path, *args)[2] == run(tmp_path, *args)[2]


def test_numbers_are_rational_strings(tmp_path):
    _, report, _ = run(tmp_path, "build", "--type", "A1")
    assert report["adjoint_casimir_eigenvalue"] == "4/1"
    assert report["dual_coxeter"] == "2/1"


def test_timings_only_on_request(tmp_path):
    _, report, _ = run(tmp_path, "build", "--type", "A1")
    assert "timings" not in report
    _, report, _ = run(tmp_path, "build", "--type", "A1", "--timings")
    assert set(report["timings"]) >= {"load", "invariants"}


@pytest.mark.parametrize("args", [
    ["central"],
    ["central", "--type", "A1", "--algebra", "x.json"],
    ["central", "--type", "A1", "--ell", "-1"],
    ["central", "--type", "A1", "--m", "0"],
    ["sugawara", "--type", "A1", "--level", "one"],
    ["completeness", "--type", "A1", "--max-s", "5"],
    ["central", "--type", "A1", "--expect", "ell-zero-failure"],
    ["central", "--type", "E8"],
    ["pfaffian", "--type", "A3"],
    ["chevalley", "--type", "B2"],
    ["sugawara", "--type", "gl2", "--m", "2"],
    ["central", "--type", "A1", "--seed", str(2 ** 64)],
])
def test_usage_errors(tmp_path, args):
    code, report, _ = run(tmp_path, *args)
    assert code == 2
    assert report["error"]["class"] == "usage"


def test_argparse_usage_error():
    with pytest.raises(SystemExit) as info:
        cli.main(["frobnicate"])
    assert info.value.code == 2


def test_internal_error_exit_code(tmp_path, monkeypatch):
    def boom(*_):
        raise RuntimeError("simulated")

    monkeypatch.setitem(cli.PIPELINES, "build", boom)
    code, report, _ = run(tmp_path, "build", "--type", "A1")
    assert code == 3
    assert report["error"]["type"] == "RuntimeError"


def test_ingest_round_trip(tmp_path):
    alg, rep = build_algebra("A2")
    path = tmp_path / "a2.json"
    path.write_text(dumps(alg, rep))
    alg2, rep2 = cli.ingest_algebra(path)
    assert alg2.structure_constants == alg.structure_constants
    code, report, _ = run(tmp_path, "central", "--algebra", str(path), "--m", "2")
    assert code == 0 and report["inputs"]["type"] == "A2"


def test_ingest_corrupted_constant(tmp_path):
    alg, rep = build_algebra("A2")
    doc = to_json(alg, rep)
    i, j, k, c = doc["structure_constants"][0]
    doc["structure_constants"][0] = [i, j, k, qstr(q(c) + 1)]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, report, _ = run(tmp_path, "build", "--algebra", str(path))
    assert code == 1
    assert report["error"]["class"] == "invariant"


def test_ingest_schema_error(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"label": "x"}')
    code, report, _ = run(tmp_path, "build", "--algebra", str(path))
    assert code == 2


def test_custom_algebra_usable(tmp_path):
    alg, rep = build_algebra("A1")
    doc = to_json(alg, rep)
    doc["label"] = "custom-sl2"
    path = tmp_path / "custom.json"
    path.write_text(json.dumps(doc))
    assert run(tmp_path, "verify-presentation", "--algebra", str(path))[0] == 0
    assert run(tmp_path, "central", "--algebra", str(path), "--m", "2")[0] == 0
    assert run(tmp_path, "sugawara", "--algebra", str(path), "--m", "2")[0] == 0


def test_console_script_stdout():
    proc = subprocess.run([sys.executable, "-m", "takiff.cli", "central", "--type", "A1", "--m", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["passed"] is True
