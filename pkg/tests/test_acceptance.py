"""Exit criteria for the solver, one test per criterion.

Each test appends a PASS/FAIL line that is printed in the terminal summary.
Run alone with ``pytest tests/test_acceptance.py``.
"""

from __future__ import annotations

import math
import time

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES, DATA, GOLDEN, random_instance
from waterfill import (
    AptitudeProfile,
    activation_breakpoints,
    brute_force_oracle,
    budget_sweep,
    solve_bisection,
    solve_exact,
    total_result,
    verify_kkt,
)
from waterfill.cli import main


def record(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def structure_violations(profile: AptitudeProfile, sol) -> list[str]:
    apt = profile.aptitudes
    t = np.asarray(sol.times)
    problems = []
    on = t > 0
    if np.any(np.abs(t[on] + 1.0 / apt[on] - sol.water_level) > 1e-10):
        problems.append("water level")
    if np.any(apt[~on] > sol.dual + 1e-10):
        problems.append("abandonment")
    order = np.argsort(apt, kind="stable")
    if np.any(np.diff(t[order]) < -1e-10):
        problems.append("monotonicity")
    return problems


def test_1_oracle_equivalence():
    rng = np.random.default_rng(20100501)
    worst_gap, worst_dist, fails = -math.inf, 0.0, 0
    for _ in range(200):
        profile, budget = random_instance(rng, 4)
        sol = solve_exact(profile, budget)
        grid = brute_force_oracle(profile, budget, 201)
        gap = grid.total_result - sol.total_result
        dist = np.max(np.abs(np.subtract(grid.times, sol.times))) / (budget / 200)
        worst_gap, worst_dist = max(worst_gap, gap), max(worst_dist, dist)
        if gap > 1e-6 or dist > 2.0:
            fails += 1
    record(
        1, "oracle equivalence", fails == 0,
        f"200 instances, max oracle-solver gap {worst_gap:.2e}, max distance {worst_dist:.2f} grid steps",
    )


def test_2_kkt_closure():
    rng = np.random.default_rng(2)
    fails, worst_cons = 0, 0.0
    for _ in range(1000):
        profile, budget = random_instance(rng, 1000)
        sol = solve_exact(profile, budget)
        report = verify_kkt(profile, budget, sol.allocation, 1e-9)
        cons = abs(math.fsum(sol.times) - budget) / max(1.0, budget)
        worst_cons = max(worst_cons, cons)
        if not report.passed or cons > 1e-12:
            fails += 1
    record(2, "KKT closure", fails == 0, f"1000 instances, N<=1000, worst relative budget error {worst_cons:.1e}")


def test_3_solver_cross_validation():
    rng = np.random.default_rng(3)
    worst_t, worst_dual = 0.0, 0.0
    for _ in range(500):
        profile, budget = random_instance(rng, 100)
        exact = solve_exact(profile, budget)
        bis = solve_bisection(profile, budget, 1e-12)
        worst_t = max(worst_t, float(np.max(np.abs(np.subtract(exact.times, bis.times)))))
        worst_dual = max(worst_dual, abs(exact.dual - bis.dual))
    record(
        3, "solver cross-validation", worst_t <= 1e-8 and worst_dual <= 1e-10,
        f"500 instances, max time diff {worst_t:.1e}, max dual diff {worst_dual:.1e}",
    )


def test_4_water_filling_structure():
    rng = np.random.default_rng(4)
    bad = []
    count = 0
    for _ in range(1000):
        profile, budget = random_instance(rng, 200, budget_lo=0.0)
        for b in (budget, 0.0):
            count += 1
            for solver in (solve_exact,) if b == 0 else (solve_exact, solve_bisection):
                problems = structure_violations(profile, solver(profile, b))
                if problems:
                    bad.append(problems)
    record(4, "water-filling structure", not bad, f"{count} budgets, {len(bad)} violations")


def test_5_small_budget_regime():
    rng = np.random.default_rng(5)
    checked, fails = 0, 0
    while checked < 300:
        profile, _ = random_instance(rng, 50)
        apt = profile.aptitudes
        if len(apt) < 2 or np.count_nonzero(apt == apt.max()) > 1:
            continue
        checked += 1
        second = activation_breakpoints(profile)[1][1]
        below = solve_exact(profile, 0.9 * second)
        above = solve_exact(profile, 1.1 * second)
        if below.active_indices != (int(np.argmax(apt)),) or above.active_count < 2:
            fails += 1
    record(5, "small budget goes to the best activity", fails == 0, f"{checked} profiles, {fails} failures")


def test_6_marginal_value():
    rng = np.random.default_rng(6)
    h = 1e-6
    worst, done = 0.0, 0
    while done < 20:
        profile, budget = random_instance(rng, 10)
        entries = np.array([b for _, b in activation_breakpoints(profile)])
        if np.min(np.abs(entries - budget)) < 1e-3:
            continue
        done += 1
        sol = solve_exact(profile, budget)
        fd = (total_result(profile, solve_exact(profile, budget + h).times) - sol.total_result) / h
        worst = max(worst, abs(fd - sol.dual) / sol.dual)
    record(6, "marginal value equals the multiplier", worst <= 1e-4, f"20 budgets, worst relative error {worst:.1e}")


def test_7_value_function_shape():
    rng = np.random.default_rng(7)
    worst_second, fails = -math.inf, 0
    for _ in range(10):
        profile, top = random_instance(rng, 10, budget_lo=1.0)
        curve = budget_sweep(profile, 0.0, top, 200)
        values = curve.total_results
        second = float(np.max(np.diff(values, 2)))
        worst_second = max(worst_second, second)
        if np.any(np.diff(values) < -1e-8) or second > 1e-8 or np.any(np.diff(curve.duals) > 0):
            fails += 1
    record(
        7, "value function increasing and concave", fails == 0,
        f"10 sweeps x 200 points, max second difference {worst_second:.1e}",
    )


GOLDEN_CASES = [
    ("chart_two.txt", ["chart", "--input", "two.csv", "--budget", "1"]),
    ("chart_dropout.txt", ["chart", "--input", "dropout.csv", "--budget", "0.1"]),
    ("chart_single.txt", ["chart", "--input", "one.csv", "--budget", "1"]),
    ("solve_two.json", ["solve", "--input", "two.csv", "--budget", "1", "--format", "json"]),
]


def test_8_cli_golden_files(capsys):
    mismatched = []
    for golden, argv in GOLDEN_CASES:
        argv = [str(DATA / a) if a.endswith(".csv") else a for a in argv]
        code = main(argv)
        out = capsys.readouterr().out
        if code != 0 or out.encode("utf-8") != (GOLDEN / golden).read_bytes():
            mismatched.append(golden)
    record(8, "CLI golden files", not mismatched, f"{len(GOLDEN_CASES)} files, mismatched: {mismatched or 'none'}")


@pytest.fixture(scope="module", autouse=True)
def _time_budget():
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    ACCEPTANCE_LINES.append(f"acceptance suite wall time {elapsed:.1f}s (limit 60s)")
