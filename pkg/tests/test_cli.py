import json
import subprocess
import sys

import pytest

from engelcheck import cli
from engelcheck import claims as catalog
from engelcheck.report import ReportInvariantError


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_lie_engel(capsys):
    code, out, _ = run(capsys, "verify", "--lie-engel", "5")
    assert code == 0
    assert "1/1 claims as expected" in out


def test_group_engel_expect_fail_has_witness(capsys):
    code, out, _ = run(capsys, "verify", "--group-engel", "5", "--expect", "fail", "--format", "structured")
    assert code == 0
    claim = json.loads(out)["claims"][0]
    assert claim["status"] == "fail"
    assert (claim["witness"]["u_text"], claim["witness"]["v_text"]) == ("x", "y")


def test_unexpected_outcome_exits_one(capsys):
    code, out, _ = run(capsys, "verify", "--group-engel", "5")
    assert code == 1
    assert "[BAD]" in out


def test_char_scan(capsys):
    code, out, err = run(capsys, "char-scan", "2,3,5,7")
    assert code == 0
    lines = out.splitlines()
    assert "[zero]" in lines[1] and "[zero]" in lines[2]
    assert "[nonzero]" in lines[3] and "[nonzero]" in lines[4]
    assert lines[-1] == "as expected"


def test_build_summary(capsys):
    code, out, _ = run(capsys, "build", "--format", "structured")
    assert code == 0
    assert json.loads(out)["dimension"] == 26


def test_witness_command(capsys):
    code, out, _ = run(capsys, "witness", "--kind", "lie", "-n", "4")
    assert code == 0
    assert "witness." in out


def test_small_characteristic_note(capsys):
    code, _, err = run(capsys, "verify", "--lie-engel", "5", "--char", "3")
    assert code == 0
    assert "exploratory" in err


@pytest.mark.parametrize("argv", [
    ["verify", "--star-engel", "5", "--char", "5"],
    ["verify", "--char", "5"],
    ["verify", "--lie-engel", "0"],
    ["verify", "--jobs", "0", "--only", "basis.dimension"],
    ["char-scan", "0,5"],
    ["char-scan", "two"],
    ["frobnicate"],
    ["verify", "--only", "no.such.claim"],
])
def test_usage_errors_exit_two(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_bad_presentation_exit_two(capsys, tmp_path):
    spec = tmp_path / "bad.yaml"
    spec.write_text(catalog.DEFAULT_SPEC.read_text().replace("x*y", "x*+y", 1))
    code, _, err = run(capsys, "build", "--spec", str(spec))
    assert code == 2
    assert "error" in err
    missing = run(capsys, "build", "--spec", str(tmp_path / "missing.yaml"))
    assert missing[0] == 2


def test_bad_catalog_exit_two(capsys, tmp_path):
    bad = tmp_path / "claims.yaml"
    bad.write_text("suites:\n  - number: 1\n    name: x\n    claims: [not.registered]\n")
    assert run(capsys, "verify", "--catalog", str(bad))[0] == 2


def test_flipped_expectation_exits_one(capsys, tmp_path):
    flipped = tmp_path / "claims.yaml"
    flipped.write_text("suites:\n  - number: 1\n    name: x\n    claims:\n"
                       "      - {id: basis.dimension, expected: fail}\n")
    assert run(capsys, "verify", "--catalog", str(flipped))[0] == 1


def test_invariant_breach_exits_three(capsys, monkeypatch):
    def broken(self):
        raise ReportInvariantError("forced")
    monkeypatch.setattr(cli.VerificationReport, "validate", broken)
    code, _, err = run(capsys, "verify", "--lie-engel", "5")
    assert code == 3
    assert "invariant" in err


def test_jobs_environment(monkeypatch, capsys):
    monkeypatch.setenv(cli.JOBS_ENV, "many")
    assert run(capsys, "verify", "--only", "basis.dimension")[0] == 2
    monkeypatch.setenv(cli.JOBS_ENV, "1")
    assert run(capsys, "verify", "--only", "basis.dimension")[0] == 0


def test_verify_output_deterministic_across_jobs(capsys):
    argv = ["verify", "--suite", "1", "--suite", "5", "--format", "structured"]
    first = run(capsys, *argv, "-j", "1")
    second = run(capsys, *argv, "-j", "1")
    parallel = run(capsys, *argv, "-j", "2")
    assert first[0] == 0
    assert first[1] == second[1] == parallel[1]
    ids = [c["id"] for c in json.loads(first[1])["claims"]]
    wanted = [e.id for e in catalog.load_catalog() if e.suite in (1, 5)]
    assert ids == wanted


def test_report_writes_both_forms(capsys, tmp_path):
    code, out, _ = run(capsys, "report", "--output-dir", str(tmp_path))
    assert code == 0
    text = (tmp_path / "report.txt").read_text()
    data = json.loads((tmp_path / "report.json").read_text())
    assert data["ok"] and len(data["claims"]) == len(catalog.load_catalog())
    assert text.rstrip().endswith(f"{len(data['claims'])}/{len(data['claims'])} claims as expected")
    assert "seconds" not in data["claims"][0]


def test_output_file(capsys, tmp_path):
    target = tmp_path / "sub" / "out.txt"
    assert run(capsys, "bch", "-o", str(target))[0] == 0
    assert "bch.star-engel-5" in target.read_text()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "engelcheck", "verify", "--only", "basis.dimension"],
                          capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert "basis.dimension" in proc.stdout
