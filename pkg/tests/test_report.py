import json

import pytest

from engelcheck.report import (EXPLORATORY, FAIL, PASS, Claim, ReportInvariantError, VerificationReport,
                               check, render_report)


def _claim(id="c.one", status=PASS, expected=PASS, witness=None):
    return Claim(id, "something holds", "descriptive anchor", status, expected, witness)


def test_empty_report_renders_summary_only():
    report = VerificationReport(summary={"dimension": 26})
    text = render_report(report).decode()
    assert "dimension: 26" in text
    assert text.rstrip().endswith("0/0 claims as expected")
    assert report.ok
    assert json.loads(render_report(report, "structured")) == {"summary": {"dimension": 26}, "claims": [], "ok": True}


def test_fail_claim_shows_witness():
    report = VerificationReport()
    report.add(_claim(status=FAIL, expected=FAIL, witness={"u": "x", "v": "y"}))
    text = render_report(report).decode()
    assert "witness.u: x" in text and "witness.v: y" in text
    assert "(expected fail)" in text
    assert report.ok


@pytest.mark.parametrize("status,expected,matches", [
    (PASS, PASS, True), (FAIL, FAIL, True), (PASS, FAIL, False), (FAIL, PASS, False),
    (EXPLORATORY, PASS, True), (PASS, EXPLORATORY, True),
])
def test_matches(status, expected, matches):
    witness = {"w": 1} if status == FAIL else None
    assert _claim(status=status, expected=expected, witness=witness).matches is matches


def test_mismatch_marked_bad():
    report = VerificationReport()
    report.add(_claim(status=PASS, expected=FAIL))
    assert not report.ok
    assert "[BAD]" in render_report(report).decode()


def test_duplicate_ids_rejected():
    report = VerificationReport()
    report.add(_claim())
    with pytest.raises(ReportInvariantError):
        report.add(_claim())
    report.claims.append(_claim())
    with pytest.raises(ReportInvariantError):
        report.validate()


def test_fail_without_witness_rejected():
    report = VerificationReport()
    report.add(_claim(status=FAIL, expected=FAIL))
    with pytest.raises(ReportInvariantError, match="witness"):
        report.validate()


def test_unknown_status_and_format():
    with pytest.raises(ValueError):
        _claim(status="maybe")
    with pytest.raises(ValueError):
        render_report(VerificationReport(), "yaml")


def test_check_helper():
    assert check("a", "s", "t", True).status == PASS
    assert check("a", "s", "t", False, witness={"k": 1}).status == FAIL


@pytest.mark.parametrize("fmt", ["text", "structured"])
def test_rendering_is_deterministic_and_hides_timings(fmt):
    def make(seconds):
        r = VerificationReport(summary={"b": [1, 2], "a": {"z": 1, "y": 2}})
        c = _claim(status=FAIL, expected=FAIL, witness={"v": "y", "u": "x"})
        c.seconds = seconds
        r.add(c)
        return r
    assert render_report(make(0.1), fmt) == render_report(make(9.0), fmt)
    assert render_report(make(0.1), fmt, timings=True) != render_report(make(9.0), fmt, timings=True)
