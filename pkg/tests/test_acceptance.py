"""Acceptance criteria: one test per criterion, each printing a PASS/FAIL line."""

from __future__ import annotations

from fractions import Fraction

import pytest

from plgroups.gammaq import is_special, xi_build
from plgroups.gammaq.special import slopes_between
from plgroups.suites import SuiteReport, run_suite

TIME_LIMIT = 300.0  # seconds per suite


def _report(capsys, label: str, reports: list[SuiteReport], extra_ok: bool = True, min_cases: int = 1):
    ok = extra_ok and all(
        r.passed and r.cases >= min_cases and r.elapsed < TIME_LIMIT for r in reports
    )
    detail = "; ".join(r.summary() for r in reports)
    with capsys.disabled():
        print(f"\n{'PASS' if ok else 'FAIL'} {label}: {detail}")
    for r in reports:
        assert r.passed, r.notes
        assert r.cases >= min_cases
        assert r.elapsed < TIME_LIMIT
    assert extra_ok


def test_01_algebra(capsys):
    reps = [run_suite("axioms", n=n, count=1000) for n in (2, 3)]
    _report(capsys, "01 algebra", reps, min_cases=1000 * 6)


def test_02_breakpoints_mod(capsys):
    reps = [run_suite("breakpoints-mod", n=n, depth=3) for n in (2, 3)]
    _report(capsys, "02 breakpoints-mod", reps, min_cases=100)


def test_03_orbits(capsys):
    reps = [run_suite("orbits", n=n, depth=4, count=500) for n in (2, 3)]
    _report(capsys, "03 orbits", reps, min_cases=500 * 20)


def test_04_transport(capsys):
    reps = [run_suite("transport", n=n, depth=4, count=200) for n in (2, 3)]
    _report(capsys, "04 transport", reps, min_cases=200)


def test_05_gamma_membership(capsys):
    reps = [run_suite("gamma-membership", n=n, count=500) for n in (2, 3)]
    xi = xi_build(2, 2).map
    exact = xi.evaluate(0) == Fraction(5, 18) and slopes_between(
        xi, Fraction(-1, 6), Fraction(1, 3)
    ) == [6, 2, Fraction(1, 6)]
    _report(capsys, "05 gamma-membership", reps, extra_ok=exact, min_cases=500)


def test_06_special(capsys):
    reps = [run_suite("special", n=n, count=200) for n in (2, 3)]
    xi_ok = all(is_special(xi_build(m), m) for m in (2, 3, 4))
    _report(capsys, "06 special", reps, extra_ok=xi_ok, min_cases=200)


def test_07_factorization(capsys):
    reps = [run_suite("factorization", n=n, count=500) for n in (2, 3)]
    _report(capsys, "07 factorization", reps, min_cases=500)


def test_08_relations(capsys):
    reps = [run_suite("relations", n=n, max_index=6) for n in (2, 3)]
    # 21 pairs 0 <= i < j <= 6 plus the distinctness check
    _report(capsys, "08 relations", reps, min_cases=22)


def test_09_rotnum(capsys):
    reps = [run_suite("rotnum", n=2, count=100)]
    _report(capsys, "09 rotnum", reps, min_cases=2 + 100 * 3)


def test_10_conj_q(capsys):
    reps = [run_suite("conj-q", n=2, count=100)]
    _report(capsys, "10 conj-q", reps, min_cases=100)


def test_11_witness(capsys):
    reps = [run_suite("witness", n=2, count=50)]
    _report(capsys, "11 witness", reps, min_cases=50)


def test_12_belk(capsys):
    reps = [run_suite("belk", n=2, count=20)]
    _report(capsys, "12 belk", reps, min_cases=60)


@pytest.mark.parametrize("n", [2, 3, 6])
def test_13_chain(capsys, n):
    _report(capsys, f"13 chain n={n}", [run_suite("chain", n=n)], min_cases=3)
