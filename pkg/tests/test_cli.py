import csv
import io
import json
import subprocess
import sys

import pytest

from bidisc.cli import RunConfig, UsageError, main, sweep_rows, verify_report
from bidisc.dual import upper_ratio_bound


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_all_passes(capsys):
    code, out, _ = run(["verify-all"], capsys)
    assert code == 0
    assert out.count("PASS") >= 10
    assert "FAIL" not in out


def test_verify_all_fault_injection(capsys):
    code, out, err = run(["verify-all", "--inject-fault", "F"], capsys)
    assert code == 1
    assert "verify_R1" in err or "verify_R2" in err


def test_verify_all_json_round_trip(tmp_path, capsys):
    path = tmp_path / "report.json"
    assert main(["verify-all", "--json", "--out", str(path)]) == 0
    text = path.read_text()
    report = json.loads(text)
    assert json.loads(json.dumps(report)) == report
    assert report["schema"] == "bidisc.verify/1"
    assert report["passed"] is True
    assert len(report["checks"]) >= 10
    for c in report["checks"]:
        assert set(c) == {"name", "claim", "passed", "details"}
    names = {c["name"] for c in report["checks"]}
    assert {"verify_R1", "verify_R2", "verify_sigma_identity", "verify_c_threshold"} <= names


def test_json_exact_values_are_strings():
    report = verify_report()
    r1 = next(c for c in report["checks"] if c["name"] == "verify_R1")
    assert "/" in r1["details"]["R1(0)"]


def test_classify_outputs(capsys):
    code, out, _ = run(["classify", "--alpha", "0.6366,0", "--beta", "0.6366,0"], capsys)
    assert code == 0 and "ADMISSIBLE" in out and "NOT_ADMISSIBLE" not in out
    code, out, _ = run(["classify", "--alpha", "0,0", "--beta", "0,0", "--format", "json"], capsys)
    assert json.loads(out)["verdict"] == "ADMISSIBLE_BY_SUFFICIENT"
    # (0.9, 0.2) passes both closed-form tests
    code, out, _ = run(["classify", "--alpha", "0.9,0", "--beta", "0.2,0", "--resolve", "--format", "json"], capsys)
    d = json.loads(out)
    assert d["verdict"] == "ADMISSIBLE_BY_SUFFICIENT"
    assert d["sufficient_margin"] < 0
    code, out, _ = run(["classify", "--alpha", "1,0", "--beta", "0.2,0", "--resolve"], capsys)
    assert "NOT_ADMISSIBLE_BY_EXACT" in out and "(H^1)* norm" in out


def test_classify_borderline_and_tolerance(monkeypatch, capsys):
    code, out, _ = run(["classify", "--alpha", "0.99999,0", "--beta", "0.1,0", "--resolve", "--format", "json"], capsys)
    assert code == 0
    assert json.loads(out)["borderline"] is False
    monkeypatch.setenv("HARDY_TOL", "0.5")
    code, out, _ = run(["classify", "--alpha", "0.99999,0", "--beta", "0.1,0", "--resolve", "--format", "json"], capsys)
    assert json.loads(out)["borderline"] is True
    monkeypatch.setenv("HARDY_TOL", "-1")
    code, _, err = run(["classify", "--alpha", "1,0", "--beta", "0,0"], capsys)
    assert code == 2 and "HARDY_TOL" in err


@pytest.mark.parametrize(
    "args",
    [
        ["classify", "--alpha", "abc", "--beta", "0"],
        ["classify", "--alpha", "1,2,3", "--beta", "0"],
        ["sweep", "--what", "ratio", "--n", "1"],
        ["sweep", "--what", "nothing"],
        ["dual", "--q", "3", "--y", "0.5"],
        ["norm", "--c1", "1", "--c2", "1", "--p", "0.5"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_2(args, capsys):
    try:
        code = main(args)
    except SystemExit as e:
        code = e.code
    assert code == 2


def test_run_config_invariants():
    with pytest.raises(UsageError):
        RunConfig("classify", {"alpha": 1, "gamma": 2})
    with pytest.raises(UsageError):
        RunConfig("norm", {}, tolerance=0)
    with pytest.raises(UsageError):
        RunConfig("launch")


def _read_csv(path):
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


def test_ratio_sweep(tmp_path):
    out = tmp_path / "ratio.csv"
    assert main(["sweep", "--what", "ratio", "--n", "5", "--out", str(out)]) == 0
    rows = _read_csv(out)
    assert list(rows[0]) == ["y", "dual_h1", "h4_norm", "ratio"]
    assert float(rows[0]["ratio"]) == pytest.approx(1, abs=1e-12)
    assert float(rows[-1]["y"]) == 1
    assert float(rows[-1]["ratio"]) == pytest.approx(upper_ratio_bound(), abs=1e-6)


def test_question_sweep(tmp_path):
    out = tmp_path / "q.csv"
    assert main(["sweep", "--what", "question", "--n", "4", "--out", str(out)]) == 0
    rows = _read_csv(out)
    assert list(rows[0]) == ["q", "y", "ratio", "conjectured_bound"]
    assert len(rows) == 5 * 4
    for r in rows:
        if float(r["q"]) == 2:
            assert float(r["ratio"]) == pytest.approx(1, abs=1e-9)
            assert float(r["conjectured_bound"]) == pytest.approx(1, abs=1e-12)
        assert float(r["ratio"]) <= float(r["conjectured_bound"]) + 1e-9


def test_region_sweep_stdout(capsys):
    assert main(["sweep", "--what", "region", "--n", "4"]) == 0
    rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    assert len(rows) == 16
    assert {"alpha_abs", "beta_abs", "verdict", "dual_norm"} <= set(rows[0])


def test_sweep_is_deterministic():
    assert sweep_rows("ratio", 3) == sweep_rows("ratio", 3)


def test_sweep_io_error(capsys):
    code = main(["sweep", "--what", "ratio", "--n", "2", "--out", "/nonexistent/dir/x.csv"])
    assert code == 1


def test_norm_and_dual_commands(capsys):
    code, out, _ = run(["norm", "--c1", "1", "--c2", "1", "--p", "1", "--format", "json"], capsys)
    assert json.loads(out)["value"] == pytest.approx(1.2732395447351628)
    code, out, _ = run(["dual", "--q", "4", "--y", "1", "--format", "json"], capsys)
    assert json.loads(out)["value"] == pytest.approx(6 ** 0.75 / 3, abs=1e-12)


def test_search_command(capsys):
    code, out, _ = run(["search", "--p", "5", "--format", "json"], capsys)
    assert code == 0 and json.loads(out)["norm"] > 1
    code, out, _ = run(["search", "--p", "4"], capsys)
    assert code == 1


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "bidisc", "classify", "--alpha", "0.7,0", "--beta", "0.7,0"],
                       capture_output=True, text=True)
    assert r.returncode == 0
    assert "NOT_ADMISSIBLE" in r.stdout
