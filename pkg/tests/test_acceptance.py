"""Exit criteria. Each test records one PASS/FAIL line, printed in the
terminal summary under "acceptance criteria".
"""

import time

import pytest

from monoquartic.cli import dumps
from monoquartic.galois import THREE_CYCLE, TRANSPOSITION, GaloisGroup
from monoquartic.quartic import Trinomial
from monoquartic.theorems import (
    LISTED_CURVE_POINTS,
    LISTED_D2_CANDIDATES,
    REFERENCE_GROUPS,
    classify,
    curve_candidates,
    disc_agreement,
    family_checks,
    frobenius_consistency,
    rejected_not_monogenic_a4,
    scan,
    verify_curve_points,
)

A_BOUND, D_BOUND, K_BOUND = 30, 200, 50


def _timed(fn, *args, **kwargs):
    start = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - start


def _serialize(summary, records) -> bytes:
    lines = [dumps(r) for r in records] + [dumps(summary.to_dict())]
    return "\n".join(lines).encode()


@pytest.fixture(scope="module")
def full_scan():
    """Single-worker scan over |a| <= 30, 0 < |d| <= 200 with the Dedekind cross-check."""
    (summary, records), elapsed = _timed(scan, A_BOUND, D_BOUND, 1, True)
    return summary, records, elapsed


def test_c01_reference_endpoints(report):
    expected = {
        (2, 2): (True, GaloisGroup.D4),
        (-2, 2): (True, GaloisGroup.D4),
        (4, -1): (False, GaloisGroup.D4),
        (-4, -1): (False, GaloisGroup.D4),
        (4, 2): (False, None),
        (-4, 2): (False, None),
        (12428, 2): (False, None),
        (-12428, 2): (False, None),
    }
    start = time.perf_counter()
    got = {ad: classify(Trinomial(*ad)) for ad in expected}
    elapsed = time.perf_counter() - start
    ok = elapsed < 1.0
    for ad, (mono, group) in expected.items():
        c = got[ad]
        ok &= c.monogenic is mono and (group is None or c.group is group)
    assert report("C1 reference endpoints", ok, f"{len(expected)} trinomials in {elapsed:.3f}s")


def test_c02_group_scan(report, full_scan):
    summary, _, elapsed = full_scan
    c4v4 = summary.counts.get("C4/monogenic", 0) + summary.counts.get("V4/monogenic", 0)
    d4 = set(summary.monogenic_d4)
    ok = not summary.violations and not summary.skipped and c4v4 == 0 and d4 == {(2, 2), (-2, 2)} and elapsed < 300
    assert report(
        "C2 monogenic group scan",
        ok,
        f"violations={len(summary.violations)} skipped={len(summary.skipped)} monogenic C4/V4={c4v4} "
        f"monogenic D4={sorted(d4)} time={elapsed:.1f}s",
    )


def test_c03_family_forward(report):
    start = time.perf_counter()
    checks = family_checks(-K_BOUND, K_BOUND)
    accepted = [fc for fc in checks if fc.trinomial is not None]
    rejected = [fc.k for fc in checks if fc.trinomial is None and fc.k != 0]
    fwd_ok = all(fc.ok for fc in accepted)
    rej_ok = all(rejected_not_monogenic_a4(k) for k in rejected)
    odd_rejected = all(fc.trinomial is None for fc in checks if fc.k % 2)
    elapsed = time.perf_counter() - start
    ok = fwd_ok and rej_ok and odd_rejected and bool(accepted) and elapsed < 30
    assert report(
        "C3 A4 family forward",
        ok,
        f"{len(accepted)} admitted k all monogenic A4 with delta 256={fwd_ok}; "
        f"{len(rejected)} rejected k not monogenic A4={rej_ok}; time={elapsed:.1f}s",
    )


def test_c04_family_converse(report, full_scan):
    summary, _, _ = full_scan
    exceptions = [v for v in summary.violations if v[2] == "a4-family-converse"]
    ok = not exceptions
    assert report(
        "C4 A4 family converse", ok, f"monogenic A4 hits={len(summary.family_hits)} exceptions={len(exceptions)}"
    )


def test_c05_discriminant_identity(report):
    bad, elapsed = _timed(disc_agreement, 1000, 10**9, 0)
    ok = not bad and elapsed < 10
    assert report("C5 disc closed form = resultant", ok, f"{1000 - len(bad)}/1000 in {elapsed:.2f}s")


def test_c06_oracle_agreement(report, full_scan):
    summary, _, _ = full_scan
    bad = [v for v in summary.violations if v[2] == "dedekind-agreement"]
    ok = not bad and summary.oracle_checks > 0
    assert report("C6 JKS = Dedekind oracle", ok, f"checked={summary.oracle_checks} disagreements={len(bad)}")


def test_c07_resolvent_identity(report, full_scan):
    summary, _, _ = full_scan
    bad = [v for v in summary.violations if v[2] == "resolvent-identity"]
    ok = not bad and summary.identity_checks > 0
    assert report("C7 resolvent identity", ok, f"checked={summary.identity_checks} exceptions={len(bad)}")


def test_c08_curve_points(report):
    start = time.perf_counter()
    verdicts = {d: verify_curve_points(d, pts) for d, pts in LISTED_CURVE_POINTS.items()}
    found = curve_candidates(2, LISTED_CURVE_POINTS[2])
    elapsed = time.perf_counter() - start
    off = [(d, p) for d, pts in LISTED_CURVE_POINTS.items() for p, ok in zip(pts, verdicts[d]) if not ok]
    ok = not off and found == LISTED_D2_CANDIDATES and elapsed < 1.0
    assert report(
        "C8 curve points",
        ok,
        f"off-curve listed points={off}; recovered d=2 candidates={sorted(found)}",
    )


def test_c09_frobenius_consistency(report):
    results, elapsed = _timed(frobenius_consistency, REFERENCE_GROUPS, 200)
    ok = elapsed < 30
    for t, (g, seen, consistent) in results.items():
        ok &= consistent and g is REFERENCE_GROUPS[t]
    sets = [seen for _, seen, _ in results.values()]
    ok &= len(set(sets)) == 3
    for t, (g, seen, _) in results.items():
        if THREE_CYCLE in seen:
            ok &= g in (GaloisGroup.A4, GaloisGroup.S4)
        if TRANSPOSITION in seen:
            ok &= g in (GaloisGroup.S4, GaloisGroup.D4)
    assert report("C9 Frobenius consistency", ok, f"3 reference trinomials x 200 primes in {elapsed:.1f}s")


def test_c10_determinism(report, full_scan):
    summary, records, _ = full_scan
    (par_summary, par_records), elapsed = _timed(scan, A_BOUND, D_BOUND, 8, True)
    same = _serialize(summary, records) == _serialize(par_summary, par_records)
    assert report("C10 1 vs 8 workers byte-identical", same, f"{len(records)} records; 8-worker time={elapsed:.1f}s")
