"""Acceptance gate: one PASS/FAIL line per criterion, each at its stated tolerance.

Run with ``pytest tests/test_acceptance.py -v``. Two sub-criteria are known to
fail against the exact evaluators (the printed two-step threshold column and
the b ~ 0.417 asymptote, plus the printed QAOA_2 entry at D = 4); see the
README section on reference-table discrepancies.
"""

import itertools
import math
import time

import numpy as np
import pytest

from qaoa_threshold.graphs import cycle_graph, girth, heawood_graph
from qaoa_threshold.optimize import SweepConfig, compare_sweep, optimize_qaoa1, optimize_qaoa2, optimize_threshold
from qaoa_threshold.oracle import enumerate_threshold_exact, mc_threshold, qaoa_statevector_cut_fraction
from qaoa_threshold.qaoa import Qaoa2Angles, f1, f2, f2_ring
from qaoa_threshold.threshold import ThresholdParams, threshold2_improvement
from reference import QAOA1, QAOA2, THR2, THR2_TAUS, TABLE

pytestmark = pytest.mark.acceptance
PI = math.pi


def verdict(capsys, label, ok, detail=""):
    with capsys.disabled():
        print(f"\n[{'PASS' if ok else 'FAIL'}] {label}" + (f" :: {detail}" if detail else ""))
    assert ok, f"{label}: {detail}"


def misses(rows, tol):
    return {D: round(got - want, 6) for D, (got, want) in rows.items() if abs(got - want) > tol}


@pytest.fixture(scope="module")
def table_run():
    start = time.perf_counter()
    out = {}
    for D in TABLE:
        out[D] = (
            optimize_qaoa1(D).stats.improvement,
            optimize_qaoa2(D, starts=64, seed=0).stats.improvement,
            optimize_threshold(D, steps=2, equal_taus=False),
        )
    return out, time.perf_counter() - start


class TestC1GoldenTable:
    def test_qaoa1_column(self, capsys, table_run):
        res, _ = table_run
        bad = misses({D: (r[0], TABLE[D][QAOA1]) for D, r in res.items()}, 5e-5)
        verdict(capsys, "C1a QAOA_1 column D=2..19 within 5e-5", not bad, f"misses {bad}" if bad else "18/18")

    def test_qaoa2_column(self, capsys, table_run):
        res, _ = table_run
        bad = misses({D: (r[1], TABLE[D][QAOA2]) for D, r in res.items()}, 5e-4)
        verdict(capsys, "C1b QAOA_2 column D=2..19 within 5e-4", not bad, f"misses {bad}" if bad else "18/18")

    def test_threshold2_values(self, capsys, table_run):
        res, _ = table_run
        bad = misses({D: (r[2].stats.improvement, TABLE[D][THR2]) for D, r in res.items()}, 5e-5)
        verdict(capsys, "C1c Threshold_2 values D=2..19 within 5e-5", not bad, f"misses {bad}" if bad else "18/18")

    def test_threshold2_pairs(self, capsys, table_run):
        res, _ = table_run
        bad = {D: r[2].best_params.taus() for D, r in res.items() if r[2].best_params.taus() != TABLE[D][THR2_TAUS]}
        verdict(capsys, "C1d Threshold_2 (tau1, tau2) pairs D=2..19", not bad, f"differs {bad}" if bad else "18/18")

    def test_runtime(self, capsys, table_run):
        _, elapsed = table_run
        verdict(capsys, "C1e table reproduction under 2 minutes", elapsed < 120, f"{elapsed:.1f} s")


def test_c2_headline_values(capsys):
    ring = optimize_qaoa2(2).stats.improvement
    cubic = optimize_qaoa2(3).stats.cut_fraction
    ok = abs(ring - 1 / 3) <= 5e-4 and abs(cubic - 0.7559) <= 5e-4
    verdict(capsys, "C2 QAOA_2 D=2 improvement 1/3 and D=3 cut 0.7559 (5e-4)", ok, f"{ring:.6f}, {cubic:.6f}")


def test_c3_quantum_oracle(capsys):
    start = time.perf_counter()
    rng = np.random.default_rng(2024)
    worst = 0.0
    for g, D in ((heawood_graph(), 3), (cycle_graph(8), 2)):
        assert girth(g) > 5
        for vals in rng.uniform(-PI, PI, (20, 4)):
            a = Qaoa2Angles(*vals)
            worst = max(worst, abs(f2(D, a).cut_fraction - qaoa_statevector_cut_fraction(g, a, 2)))
    elapsed = time.perf_counter() - start
    verdict(capsys, "C3 f2 vs statevector, Heawood and C8, max delta <= 1e-9, < 30 s",
            worst <= 1e-9 and elapsed < 30, f"max delta {worst:.2e}, {elapsed:.1f} s")


def test_c4_classical_oracle(capsys):
    start = time.perf_counter()
    worst = 0.0
    for g, D in ((heawood_graph(), 3), (cycle_graph(8), 2)):
        for t1, t2 in itertools.product(range(D + 2), repeat=2):
            exact = enumerate_threshold_exact(g, ThresholdParams(2, t1, t2)) - 0.5
            worst = max(worst, abs(threshold2_improvement(D, t1, t2).improvement - exact))
    elapsed = time.perf_counter() - start
    verdict(capsys, "C4 threshold_2 vs enumeration, Heawood [0,4]^2 and C8 [0,3]^2, <= 1e-12, < 60 s",
            worst <= 1e-12 and elapsed < 60, f"max delta {worst:.2e}, {elapsed:.1f} s")


def test_c5_reductions(capsys):
    rng = np.random.default_rng(5)
    worst = 0.0
    for D in (2, 3, 5, 17, 100):
        for g, b in rng.uniform(-PI, PI, (1000, 2)):
            ref = f1(D, g, b).cut_fraction
            worst = max(worst, abs(f2(D, Qaoa2Angles(0, 0, g, b)).cut_fraction - ref))
            worst = max(worst, abs(f2(D, Qaoa2Angles(g, b, 0, 0)).cut_fraction - ref))
    ring = max(
        abs(f2_ring(a).cut_fraction - f2(2, a).cut_fraction)
        for a in (Qaoa2Angles(*v) for v in rng.uniform(-PI, PI, (10_000, 4)))
    )
    verdict(capsys, "C5 one-stage reductions and ring form, <= 1e-12",
            worst <= 1e-12 and ring <= 1e-12, f"reductions {worst:.2e}, ring {ring:.2e}")


@pytest.fixture(scope="module")
def timer():
    return {"start": time.perf_counter()}


class TestC6Asymptotics:
    def test_threshold_b_at_499(self, capsys, timer):
        b = optimize_threshold(499, steps=2, equal_taus=True).stats.scaled_b
        verdict(capsys, "C6a equal-tau threshold_2 b at D=499 in 0.417 +- 0.005", abs(b - 0.417) <= 0.005, f"b = {b:.4f}")

    def test_qaoa2_b_at_499(self, capsys, timer):
        b = optimize_qaoa2(499).stats.scaled_b
        verdict(capsys, "C6b QAOA_2 b at D=499 in 0.407 +- 0.005", abs(b - 0.407) <= 0.005, f"b = {b:.4f}")

    def test_sampled_sweep(self, capsys, timer):
        recs = compare_sweep(50, 499, SweepConfig(), degrees=[50, 100, 200, 350, 499])
        losers = [r.D for r in recs if not r.thr2_impr > r.qaoa2_impr]
        detail = ", ".join(f"D={r.D}: {r.b_thr2:.4f} vs {r.b_qaoa2:.4f}" for r in recs)
        verdict(capsys, "C6c threshold_2 > QAOA_2 at D in {50,100,200,350,499}", not losers, detail)

    def test_free_tau_sweep(self, capsys, timer):
        recs = compare_sweep(6, 49, SweepConfig(free_taus=True), degrees=[6, 10, 20, 49])
        losers = [r.D for r in recs if not r.thr2_impr > r.qaoa2_impr]
        detail = ", ".join(f"D={r.D}: {r.thr2_impr:.4f} vs {r.qaoa2_impr:.4f}" for r in recs)
        verdict(capsys, "C6d free-tau threshold_2 > QAOA_2 at D in {6,10,20,49}", not losers, detail)

    def test_runtime(self, capsys, timer):
        elapsed = time.perf_counter() - timer["start"]
        verdict(capsys, "C6e asymptotic checks under 10 minutes", elapsed < 600, f"{elapsed:.1f} s")


def test_c7_monte_carlo(capsys):
    start = time.perf_counter()
    est = mc_threshold(heawood_graph(), ThresholdParams(2, 2, 3), 1_000_000, seed=0)
    closed = 0.5 + threshold2_improvement(3, 2, 3).improvement
    z = abs(est.mean - closed) / est.stderr
    elapsed = time.perf_counter() - start
    verdict(capsys, "C7 Monte Carlo (1e6 trials) within 4 standard errors, < 30 s",
            z <= 4 and elapsed < 30, f"mean {est.mean:.6f} vs {closed:.6f}, {z:.2f} sigma, {elapsed:.1f} s")


def test_c8_out_of_scope(capsys):
    with capsys.disabled():
        print("\n[N/A ] C8 full per-integer D<500 sweep, D>=500 behaviour, modified-threshold columns: "
              "not reproduced at desk scale (sampled by C6)")
    pytest.skip("declared not reproducible at desk scale")
