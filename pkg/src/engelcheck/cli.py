"""Command-line driver.

Exit status: 0 when every claim matches its expected status, 1 when some
claim does not, 2 on unreadable or malformed input (presentation, catalog,
options), 3 when an internal invariant is violated.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings
from pathlib import Path
from typing import List, Optional

import yaml

from . import claims as catalog
from .bch import CharacteristicError, star_engel_check
from .group import char_scan, group_engel_check
from .lie import lie_engel_check
from .parse import OutsideHypothesesWarning, ParseError, load_presentation
from .presentation import PresentationError, enumerate_survivors
from .quotient import build_quotient
from .report import EXPLORATORY, FAIL, PASS, ReportInvariantError, VerificationReport, render_report

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3
JOBS_ENV = "ENGELCHECK_JOBS"


class UsageError(Exception):
    pass


def _default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError(f"{JOBS_ENV} must be an integer, got {raw!r}")


def _prime_list(text: str) -> List[int]:
    try:
        primes = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated primes, got {text!r}")
    if not primes:
        raise argparse.ArgumentTypeError("no primes given")
    return primes


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--spec", type=Path, default=catalog.DEFAULT_SPEC,
                        help="presentation file (default: the shipped fixture)")
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--output", "-o", type=Path, help="write to this file instead of stdout")

    checks = argparse.ArgumentParser(add_help=False)
    checks.add_argument("--seed", type=int, default=0, help="seed for randomized claims")
    checks.add_argument("--jobs", "-j", type=int, default=None,
                        help=f"worker processes (default: ${JOBS_ENV} or 1)")
    checks.add_argument("--timings", action="store_true", help="include per-claim timings")

    p = argparse.ArgumentParser(prog="engelcheck", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", parents=[common], help="build the quotient algebra and print its summary")
    b.add_argument("--char", type=int, help="override the characteristic")
    b.add_argument("--table", action="store_true", help="dump basis and structure constants")

    s = sub.add_parser("basis", parents=[common], help="list surviving words, basis words and rewrite rules")
    s.add_argument("--char", type=int, help="override the characteristic")

    v = sub.add_parser("verify", parents=[common, checks],
                       help="run the claim catalog, or ad-hoc Engel checks")
    v.add_argument("--catalog", type=Path, default=catalog.DEFAULT_CATALOG)
    v.add_argument("--only", action="append", default=[], metavar="ID", help="run only these claim ids")
    v.add_argument("--suite", action="append", type=int, default=[], metavar="N", help="run only suite N")
    v.add_argument("--lie-engel", type=int, metavar="N")
    v.add_argument("--group-engel", type=int, metavar="N")
    v.add_argument("--star-engel", type=int, metavar="N")
    v.add_argument("--strategy", choices=("symbolic", "symmetrized"), default="symbolic")
    v.add_argument("--expect", choices=(PASS, FAIL), default=PASS)
    v.add_argument("--char", type=int, help="characteristic for ad-hoc checks")

    w = sub.add_parser("witness", parents=[common], help="search for a witness to a failing Engel identity")
    w.add_argument("--kind", choices=("lie", "group", "star"), default="group")
    w.add_argument("-n", type=int, default=5)
    w.add_argument("--strategy", choices=("symbolic", "symmetrized"), default="symbolic")
    w.add_argument("--char", type=int)

    sub.add_parser("bch", parents=[common, checks], help="run the BCH suite")

    c = sub.add_parser("char-scan", parents=[common],
                       help="evaluate ((1+x), (5) (1+y)) over prime fields")
    c.add_argument("primes", nargs="?", type=_prime_list, default=[2, 3, 5, 7])

    r = sub.add_parser("report", parents=[checks], help="run the full catalog and write both report forms")
    r.add_argument("--spec", type=Path, default=catalog.DEFAULT_SPEC)
    r.add_argument("--catalog", type=Path, default=catalog.DEFAULT_CATALOG)
    r.add_argument("--output-dir", type=Path, default=Path("report"))
    return p


def _emit(data: bytes, output: Optional[Path]):
    if output is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        output.parent.mkdir(parents=True, exist_ok=True)
        output.write_bytes(data)


def _load(path: Path, char: Optional[int] = None):
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", OutsideHypothesesWarning)
        spec = load_presentation(path)
        if char is not None:
            spec = spec.with_characteristic(char)
    if spec.outside_hypotheses or caught:
        print(f"note: characteristic {spec.characteristic} is outside the supported characteristics; "
              "results are exploratory", file=sys.stderr)
    return spec


def _jobs(args) -> int:
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    if jobs < 1:
        raise UsageError("--jobs must be at least 1")
    return jobs


def _finish(report: VerificationReport, args, output: Optional[Path] = None) -> int:
    report.validate()
    _emit(render_report(report, args.format, timings=getattr(args, "timings", False)), output)
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_build(args) -> int:
    alg = build_quotient(_load(args.spec, args.char))
    if args.table:
        _emit(alg.structure_table_text().encode("utf-8"), args.output)
        return EXIT_OK
    summary = alg.summary()
    if args.format == "structured":
        data = json.dumps(summary, indent=2, sort_keys=True) + "\n"
    else:
        data = "".join(f"{k}: {summary[k]}\n" for k in sorted(summary))
    _emit(data.encode("utf-8"), args.output)
    return EXIT_OK


def cmd_basis(args) -> int:
    spec = _load(args.spec, args.char)
    alg = build_quotient(spec)
    survivors = enumerate_survivors(spec, by_degree=True)
    doc = {
        "survivors": {d: [spec.render_word(w) for w in ws] for d, ws in sorted(survivors.items())},
        "basis": {d: [alg.render_word(alg.basis[i]) for i in r] for d, r in sorted(alg.grading.items())},
        "rewrites": {alg.render_word(w): str(alg.word_image(w)) for w in sorted(alg.rewrite_rows)},
    }
    if args.format == "structured":
        data = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    else:
        lines = []
        for key in ("survivors", "basis"):
            lines.append(f"# {key}")
            for d, ws in doc[key].items():
                lines.append(f"{d}: {', '.join(ws)}")
            lines.append("")
        lines.append("# rewrites")
        lines.extend(f"{w} -> {v}" for w, v in doc["rewrites"].items())
        data = "\n".join(lines) + "\n"
    _emit(data.encode("utf-8"), args.output)
    return EXIT_OK


def _ad_hoc(args, spec) -> VerificationReport:
    alg = build_quotient(spec)
    report = VerificationReport(summary=alg.summary())
    if args.lie_engel is not None:
        report.add(lie_engel_check(alg, args.lie_engel, args.strategy, expected=args.expect))
    if args.group_engel is not None:
        report.add(group_engel_check(alg, args.group_engel, expected=args.expect))
    if args.star_engel is not None:
        report.add(star_engel_check(alg, args.star_engel, expected=args.expect))
    return report


def _select(entries, args):
    if args.only:
        unknown = set(args.only) - {e.id for e in entries}
        if unknown:
            raise UsageError(f"unknown claim ids: {', '.join(sorted(unknown))}")
        entries = [e for e in entries if e.id in args.only]
    if args.suite:
        entries = [e for e in entries if e.suite in args.suite]
    return entries


def _run_catalog(args, entries) -> VerificationReport:
    spec = _load(args.spec)
    results = catalog.run_catalog(spec, entries, seed=args.seed, jobs=_jobs(args))
    return catalog.build_report(spec, results)


def cmd_verify(args) -> int:
    ad_hoc = any(x is not None for x in (args.lie_engel, args.group_engel, args.star_engel))
    for n in (args.lie_engel, args.group_engel, args.star_engel):
        if n is not None and n < 1:
            raise UsageError("Engel orders start at 1")
    if ad_hoc:
        report = _ad_hoc(args, _load(args.spec, args.char))
        return _finish(report, args, args.output)
    if args.char is not None:
        raise UsageError("--char applies to ad-hoc checks (--lie-engel/--group-engel/--star-engel) only")
    entries = _select(catalog.load_catalog(args.catalog), args)
    return _finish(_run_catalog(args, entries), args, args.output)


def cmd_witness(args) -> int:
    if args.n < 1:
        raise UsageError("Engel orders start at 1")
    alg = build_quotient(_load(args.spec, args.char))
    if args.kind == "lie":
        claim = lie_engel_check(alg, args.n, args.strategy, expected=FAIL)
    elif args.kind == "group":
        claim = group_engel_check(alg, args.n, expected=FAIL)
    else:
        claim = star_engel_check(alg, args.n, expected=FAIL)
    report = VerificationReport(summary=alg.summary())
    report.add(claim)
    if claim.status == EXPLORATORY:
        print("note: exploratory result; the witness search still ran", file=sys.stderr)
    return _finish(report, args, args.output)


def cmd_bch(args) -> int:
    args.catalog, args.only, args.suite = catalog.DEFAULT_CATALOG, [], [8]
    entries = _select(catalog.load_catalog(), args)
    return _finish(_run_catalog(args, entries), args, args.output)


def cmd_char_scan(args) -> int:
    spec = load_presentation(args.spec)
    for p in args.primes:
        if p == 0:
            raise UsageError("char-scan takes primes; use 'verify' for characteristic 0")
    rows = char_scan(spec, args.primes)
    # the part 6*y^2*x*y*x*y^2 vanishes exactly when p divides 6
    ok = all(r["matches_target"] and r["witness_zero"] == (6 % r["characteristic"] == 0) for r in rows)
    if args.format == "structured":
        data = json.dumps({"rows": rows, "ok": ok}, indent=2, sort_keys=True) + "\n"
    else:
        lines = ["# ((1+x), (5) (1+y)) - 1 by characteristic"]
        for r in rows:
            flag = " (outside hypotheses)" if r["outside_hypotheses"] else ""
            state = "zero" if r["witness_zero"] else "nonzero"
            lines.append(f"char {r['characteristic']}: {r['engel5_part'] or '0'} [{state}]{flag}")
        lines.append("as expected" if ok else "UNEXPECTED")
        data = "\n".join(lines) + "\n"
    _emit(data.encode("utf-8"), args.output)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_report(args) -> int:
    entries = catalog.load_catalog(args.catalog)
    report = _run_catalog(args, entries)
    report.validate()
    args.output_dir.mkdir(parents=True, exist_ok=True)
    for fmt, name in (("text", "report.txt"), ("structured", "report.json")):
        (args.output_dir / name).write_bytes(render_report(report, fmt, timings=args.timings))
    matched = sum(c.matches for c in report.claims)
    print(f"{matched}/{len(report.claims)} claims as expected; written to {args.output_dir}")
    return EXIT_OK if report.ok else EXIT_MISMATCH


COMMANDS = {
    "build": cmd_build, "basis": cmd_basis, "verify": cmd_verify, "witness": cmd_witness,
    "bch": cmd_bch, "char-scan": cmd_char_scan, "report": cmd_report,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"error: {exc}\n{exc.pointer()}", file=sys.stderr)
        return EXIT_INPUT
    except (PresentationError, CharacteristicError, UsageError, yaml.YAMLError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (AssertionError, RuntimeError, ReportInvariantError) as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ValueError as exc:
        # malformed catalog files and option values
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
