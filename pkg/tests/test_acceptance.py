"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

The lines are collected in RESULTS and printed in the terminal summary by
conftest.py; `-s` also shows them inline.
"""

import subprocess
import sys
import time
from fractions import Fraction

import pytest

from isogeny_descent.elliptic_curves import Curve, TorsionMatrix, count_points, count_points_over
from isogeny_descent.experiment_harness import (
    EXPERIMENTS,
    SweepConfig,
    curve_family,
    emit_report,
    run_experiment,
)
from isogeny_descent.finite_fields import GF, is_prime
from isogeny_descent.quaternions import QuadraticSubfield, Quaternion, conjugation_map, torsion_representation

RESULTS: dict = {}


def report(num: int, ok: bool, detail: str) -> None:
    line = f"criterion {num}: {'PASS' if ok else 'FAIL'} - {detail}"
    RESULTS[num] = line
    print("\n" + line)


@pytest.fixture(scope="module")
def full_run(tmp_path_factory):
    cfg = SweepConfig()
    records, timings = {}, {}
    for name in EXPERIMENTS:
        t0 = time.perf_counter()
        records[name] = run_experiment(name, cfg)
        timings[name] = time.perf_counter() - t0
    path = tmp_path_factory.mktemp("reports") / "run1.jsonl"
    emit_report([r for name in EXPERIMENTS for r in records[name]], str(path))
    return records, timings, path


def test_criterion_1_quaternion_closed_form():
    t0 = time.perf_counter()
    bad = []
    for p in (7, 11, 19, 23):
        one, i, j, ij = Quaternion.basis(p)
        for n in range(1, 8):
            phi = conjugation_map(one + i * n, j)
            closed = Quaternion.of(p, 0, 0, Fraction(1 - n * n, n * n + 1), Fraction(-2 * n, n * n + 1))
            if phi != closed or phi * phi != one * (-p) or QuadraticSubfield(phi) == QuadraticSubfield(j):
                bad.append((p, n))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 1
    report(1, ok, f"28 (p, n) cases exact, failures {bad}, {elapsed:.3f}s")
    assert ok


def test_criterion_2_endomorphism_relations():
    t0 = time.perf_counter()
    bad = []
    for p in (7, 11, 19, 23):
        one, i, j, _ = Quaternion.basis(p)
        for n in (3, 5):
            Mi, Mj = torsion_representation(p, n, i), torsion_representation(p, n, j)
            I = TorsionMatrix.identity(n)
            if not (Mi * Mi == -I and Mj * Mj == TorsionMatrix.scalar(n, -p) and Mj * Mi == -(Mi * Mj)):
                bad.append((p, n))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 5
    report(2, ok, f"8 (p, n) cases mod n, failures {bad}, {elapsed:.2f}s")
    assert ok


def test_criterion_3_point_counts():
    t0 = time.perf_counter()
    bad = []
    supersingular = 0
    for p in range(7, 200):
        if is_prime(p) and p % 4 == 3:
            E = Curve.from_ints(p, 1, 0)
            supersingular += 1
            if not count_points(E) == count_points(E, mode="exhaustive") == p + 1:
                bad.append(("supersingular", p))
    extension = 0
    for p in range(5, 101):
        if not is_prime(p):
            continue
        m = 2
        while p**m <= 10**4:
            for E in curve_family(p, 2, 1):
                extension += 1
                if count_points(E.over(GF(p, m)), mode="exhaustive") != count_points_over(E, m):
                    bad.append((p, m, str(E)))
            m += 1
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 30
    report(3, ok, f"{supersingular} supersingular counts, {extension} extension counts, "
                  f"failures {bad[:3]}, {elapsed:.1f}s")
    assert ok


def test_criterion_4_oracle_agreement(full_run):
    records, timings, _ = full_run
    fod = [r for r in records["lemma-defined"] if r.kind == "field-of-definition"]
    isogenies = {r.key.rsplit("/j", 1)[0] for r in fod}
    agree = sum(1 for r in fod if r.conclusion)
    fatal = sum(1 for r in fod if r.fatal)
    elapsed = timings["lemma-defined"]
    ok = len(isogenies) >= 500 and agree == len(fod) and not fatal and elapsed < 120
    report(4, ok, f"{len(isogenies)} isogenies, {agree}/{len(fod)} level checks agree, "
                  f"{fatal} fatal, {elapsed:.1f}s")
    assert ok


def test_criterion_5_pairing_axioms(full_run):
    records, timings, _ = full_run
    recs = [r for r in records["lemma-defined"] if r.kind == "pairing"]
    maps = {r.key.rsplit("/j", 1)[0] for r in records["lemma-defined"]
            if r.kind == "field-of-definition" and r.instance.get("kind") != "identity"}
    failed = [r.key for r in recs if not r.conclusion]
    elapsed = timings["lemma-defined"]
    ok = len(recs) > 0 and not failed and elapsed < 60
    report(5, ok, f"{len(recs)} of {len(maps)} sweep maps paired on a torsion basis, failures {failed[:3]}, "
                  f"{elapsed:.1f}s including the field-of-definition sweep")
    assert ok


def test_criterion_6_rigidity_and_sharpness(full_run):
    records, timings, _ = full_run
    recs = records["mink"]
    rigidity = [r for r in recs if r.kind == "rigidity"]
    counter = [r.key for r in rigidity if r.fatal]
    sharp = [r for r in recs if r.kind == "sharpness"]
    sharp_ok = bool(sharp) and all(r.hypotheses["hypotheses_hold"] and r.hypotheses["B_tilde_exponent_2"]
                                   for r in sharp)
    ns = sorted({r.instance["n"] for r in rigidity})
    elapsed = timings["mink"]
    ok = not counter and sharp_ok and ns == list(range(5, 14)) and elapsed < 60
    report(6, ok, f"{len(rigidity)} automorphism/level records, counterexamples {counter[:3]}, "
                  f"{len(sharp)} sharpness witnesses, {elapsed:.1f}s")
    assert ok


def test_criterion_7_descent(full_run):
    records, timings, _ = full_run
    recs = records["descent"]
    passing = [r for r in recs if r.hypotheses.get("phi") and r.instance["n"] >= 5 and r.instance["m"] in (2, 3)]
    trace_fail = [r.key for r in passing if not r.conclusion]
    violated = [r.key for r in recs if r.fatal]
    distinct = sum(1 for r in passing if r.instance["A"] != r.instance["B"])
    elapsed = timings["descent"]
    ok = len(passing) >= 100 and distinct >= 100 and not trace_fail and not violated and elapsed < 180
    report(7, ok, f"{len(passing)} passing instances ({distinct} with A != B), "
                  f"trace failures {trace_fail[:3]}, stream violations {violated[:3]}, {elapsed:.1f}s")
    assert ok


def test_criterion_8_isotypic_laws(full_run):
    records, timings, _ = full_run
    parts = [r for r in records["isotypic"] if r.kind == "partition"]
    failed = [r.key for r in records["isotypic"] if r.fatal]
    elapsed = timings["isotypic"]
    ok = len(parts) >= 200 and not failed and elapsed < 60
    report(8, ok, f"{len(parts)} products, failures {failed[:3]}, {elapsed:.1f}s")
    assert ok


def test_criterion_9_determinism(full_run, tmp_path):
    records, timings, first = full_run
    second = tmp_path / "run2.jsonl"
    t0 = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "isogeny_descent", "experiment", "--name", "all",
                           "--out", str(second)], capture_output=True, text=True)
    rerun = time.perf_counter() - t0
    total = sum(timings.values()) + rerun
    same = first.read_bytes() == second.read_bytes()
    ok = proc.returncode == 0 and same and total < 600
    report(9, ok, f"byte-identical {same}, second run exit {proc.returncode}, "
                  f"two full runs {total:.1f}s")
    assert ok
