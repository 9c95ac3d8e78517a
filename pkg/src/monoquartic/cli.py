"""Command-line entry point: classify, scan, family, verify.

Exit codes: 0 success, 2 invalid input, 3 factorization timeout or skipped
cells, 4 a mathematical claim failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .errors import FactorizationTimeout, InvalidTrinomial
from .galois import GaloisGroup, cycle_label
from .quartic import Trinomial
from .theorems import (
    LISTED_CURVE_POINTS,
    LISTED_D2_CANDIDATES,
    RECORD_FIELDS,
    REFERENCE_GROUPS,
    classify,
    curve_candidates,
    disc_agreement,
    family_checks,
    frobenius_consistency,
    scan,
    verify_curve_points,
    verify_theorem_main2,
)

EXIT_OK, EXIT_USAGE, EXIT_RESOURCE, EXIT_VIOLATION = 0, 2, 3, 4

_JSON_SAFE = 2**53


def _jsonable(value):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value) if abs(value) >= _JSON_SAFE else value
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def dumps(obj) -> str:
    return json.dumps(_jsonable(obj), separators=(",", ":"))


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return " ".join(str(v) for v in value)
    return str(value)


def csv_lines(records) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(RECORD_FIELDS)
    for rec in records:
        w.writerow([_csv_cell(rec[k]) for k in RECORD_FIELDS])
    return buf.getvalue()


def _human(rec: dict, extra: dict | None = None) -> str:
    lines = [f"{k}: {_csv_cell(v) if v is not None else '-'}" for k, v in rec.items()]
    for k, v in (extra or {}).items():
        lines.append(f"{k}: {v}")
    return "\n".join(lines)


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


# --- commands ------------------------------------------------------------------


def cmd_classify(args) -> int:
    try:
        t = Trinomial(args.a, args.d)
    except InvalidTrinomial:
        _err("a and d must be nonzero")
        return EXIT_USAGE
    c = classify(t)
    rec = c.to_record()
    if args.format == "json":
        print(dumps(rec))
    else:
        extra = {"f": str(t)}
        if c.reducibility_witness is not None:
            extra["witness"] = c.reducibility_witness.describe()
        if c.monogenicity is not None:
            extra["disc_factorization"] = str(c.monogenicity.delta_factorization)
            for v in c.monogenicity.trace:
                extra[f"prime {v.q}"] = f"{v.branch.value} {'pass' if v.passed else 'FAIL'}"
        print(_human(rec, extra))
    if c.timeouts:
        _err(f"factorization timed out in: {', '.join(c.timeouts)}")
        return EXIT_RESOURCE
    return EXIT_OK


def _write_records(records, fmt: str, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        if fmt == "csv":
            fh.write(csv_lines(records))
        else:
            for rec in records:
                fh.write(dumps(rec) + "\n")


def _scan_exit(summary) -> int:
    if summary.violations:
        return EXIT_VIOLATION
    if summary.skipped:
        _err(f"WARNING: {len(summary.skipped)} cells skipped after factorization timeout")
        return EXIT_RESOURCE
    return EXIT_OK


def cmd_scan(args) -> int:
    if args.a_bound < 1 or args.d_bound < 1 or args.jobs < 1:
        _err("bounds and jobs must be >= 1")
        return EXIT_USAGE
    summary, records = scan(args.a_bound, args.d_bound, args.jobs, oracle=not args.no_oracle)
    if args.out:
        _write_records(records, args.format, args.out)
    print(dumps(summary.to_dict()))
    for a, d, claim in summary.violations:
        _err(f"violation {claim} at (a, d) = ({a}, {d})")
    return _scan_exit(summary)


def cmd_family(args) -> int:
    if args.k_min > args.k_max:
        _err("k-min must not exceed k-max")
        return EXIT_USAGE
    status = EXIT_OK
    for fc in family_checks(args.k_min, args.k_max):
        row = {"k": fc.k, "accepted": fc.trinomial is not None, "reason": fc.reason}
        if fc.classification is not None:
            row.update(fc.classification.to_record())
        if not fc.ok:
            status = EXIT_VIOLATION
            _err(f"k = {fc.k}: accepted but not monogenic A4")
        if args.format == "json":
            print(dumps(row))
        elif fc.trinomial is None:
            print(f"k={fc.k} rejected: {fc.reason}")
        else:
            c = fc.classification
            mono = "monogenic" if c.monogenic else "not monogenic"
            print(f"k={fc.k} accepted: (a, d) = ({fc.trinomial.a}, {fc.trinomial.d}) {mono} {c.group.value}")
    return status


# --- verify suites -------------------------------------------------------------


def _line(ok: bool, text: str) -> bool:
    print(f"[{'PASS' if ok else 'FAIL'}] {text}")
    return ok


def _counterexample(a: int, d: int) -> None:
    print(dumps(classify(Trinomial(a, d)).to_record()))


def _monogenic_groups(summary, *groups: GaloisGroup) -> int:
    return sum(summary.counts.get(f"{g.value}/monogenic", 0) for g in groups)


def _suite_thm11(args) -> int:
    summary, _ = scan(args.a_bound, args.d_bound, args.jobs, oracle=False)
    ok = _line(not summary.violations, f"violations: {len(summary.violations)}")
    ok &= _line(
        _monogenic_groups(summary, GaloisGroup.C4, GaloisGroup.V4) == 0,
        f"monogenic C4/V4: {_monogenic_groups(summary, GaloisGroup.C4, GaloisGroup.V4)}",
    )
    d4 = sorted(summary.monogenic_d4)
    ok &= _line(set(d4) == {(2, 2), (-2, 2)}, f"monogenic D4: {d4}")
    print(f"counts: {dumps(dict(sorted(summary.counts.items())))}")
    if summary.violations:
        a, d, claim = summary.violations[0]
        print(f"first counterexample ({claim}):")
        _counterexample(a, d)
        return EXIT_VIOLATION
    if not ok:
        return EXIT_VIOLATION
    return _scan_exit(summary)


def _suite_thm13(args) -> int:
    summary = verify_theorem_main2(args.a_bound, args.d_bound, args.k_bound, args.jobs)
    fwd = [v for v in summary.violations if v[2] == "a4-family-forward"]
    conv = [v for v in summary.violations if v[2] == "a4-family-converse"]
    checks = family_checks(-args.k_bound, args.k_bound)
    accepted = [fc.k for fc in checks if fc.trinomial is not None]
    _line(not fwd, f"forward: {len(accepted)} admitted k in 0 < |k| <= {args.k_bound}, failures {len(fwd)}")
    _line(not conv, f"converse: {len(summary.family_hits)} monogenic A4 hits in scan, exceptions {len(conv)}")
    if summary.violations:
        a, d, claim = summary.violations[0]
        print(f"first counterexample ({claim}):")
        _counterexample(a, d)
        return EXIT_VIOLATION
    return _scan_exit(summary)


def _suite_disc(args) -> int:
    bad = disc_agreement(args.samples, args.coeff_bound, args.seed)
    _line(not bad, f"closed form = resultant for f and r: {args.samples - len(bad)}/{args.samples}")
    if bad:
        print("first counterexample:")
        _counterexample(*bad[0])
        return EXIT_VIOLATION
    return EXIT_OK


def _suite_dedekind(args) -> int:
    summary, _ = scan(args.a_bound, args.d_bound, args.jobs, oracle=True)
    bad = [v for v in summary.violations if v[2] == "dedekind-agreement"]
    _line(not bad, f"jks_check = Dedekind oracle on {summary.oracle_checks} irreducible trinomials, disagreements {len(bad)}")
    if bad:
        print("first counterexample:")
        _counterexample(bad[0][0], bad[0][1])
        return EXIT_VIOLATION
    return EXIT_RESOURCE if summary.skipped else EXIT_OK


def _suite_frobenius(args) -> int:
    results = frobenius_consistency(REFERENCE_GROUPS, args.primes)
    status = EXIT_OK
    for t, (g, seen, consistent) in results.items():
        labels = ", ".join(sorted(cycle_label(ct) for ct in seen))
        ok = consistent and g is REFERENCE_GROUPS[t]
        if not _line(ok, f"({t.a}, {t.d}) {g.value}: observed {{{labels}}}"):
            status = EXIT_VIOLATION
            _counterexample(t.a, t.d)
    sets = [seen for _, seen, _ in results.values()]
    distinct = len(set(sets)) == len(sets)
    if not _line(distinct, "observed cycle-type sets pairwise distinct"):
        status = EXIT_VIOLATION
    return status


def _suite_curve(args) -> int:
    status = EXIT_OK
    for d, points in LISTED_CURVE_POINTS.items():
        for (x, y), ok in zip(points, verify_curve_points(d, points)):
            if not _line(ok, f"d={d} point ({x}, {y}) on Y^2 = X^3 - {4 * d**3}X"):
                status = EXIT_VIOLATION
    found = curve_candidates(2, LISTED_CURVE_POINTS[2])
    if not _line(found == LISTED_D2_CANDIDATES, f"d=2 candidates recovered: {sorted(found)}"):
        status = EXIT_VIOLATION
    return status


SUITES = {
    "thm11": _suite_thm11,
    "thm13": _suite_thm13,
    "disc": _suite_disc,
    "dedekind": _suite_dedekind,
    "frobenius": _suite_frobenius,
    "curve": _suite_curve,
}


def cmd_verify(args) -> int:
    return SUITES[args.suite](args)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="monoquartic", description="Monogenicity and Galois groups of x^4 + a x^3 + d.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify one trinomial")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--format", choices=("human", "json"), default="human")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("scan", help="classify and check a grid of trinomials")
    p.add_argument("--a-bound", type=int, required=True)
    p.add_argument("--d-bound", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", help="write per-cell records here")
    p.add_argument("--no-oracle", action="store_true", help="skip the Dedekind cross-check")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("family", help="list (4k, 27k^4+1) for k in a range")
    p.add_argument("--k-min", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--format", choices=("human", "json"), default="human")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--a-bound", type=int, default=30)
    p.add_argument("--d-bound", type=int, default=200)
    p.add_argument("--k-bound", type=int, default=50)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--coeff-bound", type=int, default=10**9)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--primes", type=int, default=200)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except FactorizationTimeout as exc:
        _err(f"factorization timeout: {exc}")
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
