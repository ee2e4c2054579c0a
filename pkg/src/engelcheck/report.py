"""Verification reports: claims, algebra summary and their renderings."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

PASS = "pass"
FAIL = "fail"
EXPLORATORY = "exploratory"
STATUSES = (PASS, FAIL, EXPLORATORY)


class ReportInvariantError(ValueError):
    """A report violates its own contract (duplicate ids, fail without witness)."""


@dataclass
class Claim:
    id: str
    statement: str
    anchor: str
    status: str
    expected: str = PASS
    witness: Optional[Dict[str, Any]] = None
    details: List[str] = field(default_factory=list)
    seconds: float = 0.0

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    @property
    def matches(self) -> bool:
        """True when the observed status is what the catalog expects."""
        if self.status == EXPLORATORY or self.expected == EXPLORATORY:
            return True
        return self.status == self.expected

    def to_dict(self, timings: bool = False) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "id": self.id,
            "statement": self.statement,
            "anchor": self.anchor,
            "status": self.status,
            "expected": self.expected,
            "matches": self.matches,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if self.details:
            out["details"] = list(self.details)
        if timings:
            out["seconds"] = round(self.seconds, 3)
        return out


def check(id: str, statement: str, anchor: str, ok: bool, *, expected: str = PASS,
          witness=None, details=None) -> Claim:
    return Claim(id, statement, anchor, PASS if ok else FAIL, expected,
                 witness, list(details or []))


@dataclass
class VerificationReport:
    summary: Dict[str, Any] = field(default_factory=dict)
    claims: List[Claim] = field(default_factory=list)

    def add(self, *claims: Claim):
        for c in claims:
            if any(c.id == old.id for old in self.claims):
                raise ReportInvariantError(f"duplicate claim id {c.id!r}")
            self.claims.append(c)

    def extend(self, claims):
        self.add(*claims)

    @property
    def ok(self) -> bool:
        return all(c.matches for c in self.claims)

    def validate(self):
        ids = [c.id for c in self.claims]
        if len(ids) != len(set(ids)):
            raise ReportInvariantError("claim ids are not unique")
        for c in self.claims:
            if c.status == FAIL and c.witness is None:
                raise ReportInvariantError(f"failed claim {c.id!r} carries no witness")

    def to_dict(self, timings: bool = False) -> Dict[str, Any]:
        return {
            "summary": self.summary,
            "claims": [c.to_dict(timings) for c in self.claims],
            "ok": self.ok,
        }


def render_report(report: VerificationReport, format: str = "text", timings: bool = False) -> bytes:
    """Serialize a report; output is deterministic for identical reports.

    Timings are left out unless asked for, since they differ between runs.
    """
    if format in ("structured", "json"):
        text = json.dumps(report.to_dict(timings), indent=2, sort_keys=True, ensure_ascii=False)
        return (text + "\n").encode("utf-8")
    if format != "text":
        raise ValueError(f"unknown report format {format!r}")
    lines = []
    s = report.summary
    if s:
        lines.append("# algebra")
        for key in sorted(s):
            lines.append(f"{key}: {_plain(s[key])}")
        lines.append("")
    lines.append("# claims")
    for c in report.claims:
        verdict = "OK " if c.matches else "BAD"
        extra = "" if c.expected == PASS or c.status == EXPLORATORY else f" (expected {c.expected})"
        line = f"[{verdict}] {c.status.upper():<11} {c.id}: {c.statement}{extra}"
        if timings:
            line += f"  [{c.seconds:.3f}s]"
        lines.append(line)
        lines.append(f"      anchor: {c.anchor}")
        for d in c.details:
            lines.append(f"      {d}")
        if c.witness is not None:
            for key in sorted(c.witness):
                lines.append(f"      witness.{key}: {_plain(c.witness[key])}")
    matched = sum(c.matches for c in report.claims)
    lines.append("")
    lines.append(f"{matched}/{len(report.claims)} claims as expected")
    return ("\n".join(lines) + "\n").encode("utf-8")


def _plain(value) -> str:
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_plain(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {_plain(value[k])}" for k in sorted(value)) + "}"
    return str(value)
