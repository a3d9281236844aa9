"""
Acceptance grid.  Each test prints one line, "criterion N: PASS|FAIL ...",
straight to the terminal, then asserts.  Runtime limits are asserted too.
"""

import random
import time

import pytest

from hecketwist.braid import BraidWord, all_words, braid_of_element
from hecketwist.coxeter import A, B, I2, cox_enumerate, cox_w0
from hecketwist.finfield.checks import (
    bruhat_constancy_check, closed_form_check, cor_check, equivariance_check, hecke_count_check,
    kawanaka_check, prop44_check, steinberg_check, vx_bijection_check,
)
from hecketwist.finfield.closed_forms import CASES
from hecketwist.finfield.groups import GroupSpec, weyl_lift
from hecketwist.finfield.varieties import count_Ug
from hecketwist.hecke import eval_braid, tau_minus_braid, tau_minus_oracle, twist_check
from hecketwist.homfly import extreme_coeff, kalman_check
from hecketwist.ring import LaurentPoly

import test_properties


@pytest.fixture
def announce(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'} {detail}")
    return emit


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def _words_plus_sigma_w():
    """(spec, beta) grid shared by criteria 6 and 7."""
    grid = []
    for spec in (GroupSpec.gl(2, 2), GroupSpec.gl(2, 3), GroupSpec.gl(3, 2)):
        grid += [(spec, b) for b in all_words(spec.weyl, 3)]
    gl3 = GroupSpec.gl(3, 2)
    grid += [(gl3, braid_of_element(w)) for w in cox_enumerate(A(2))]
    return grid


def test_criterion_1_twist(announce):
    with Timer() as t:
        checked = failed = 0
        for system in (A(1), A(2), B(2), I2(5)):
            for beta in all_words(system, 6):
                checked += 1
                failed += not twist_check(beta).passed
        rng = random.Random(20261016)
        for _ in range(200):
            letters = tuple(rng.choice((1, 2, 3)) for _ in range(rng.randint(0, 12)))
            checked += 1
            failed += not twist_check(BraidWord(A(3), letters)).passed
    ok = failed == 0 and t.elapsed < 60
    announce(1, ok, f"{checked - failed}/{checked} words, {t.elapsed:.1f}s (limit 60s)")
    assert ok


def test_criterion_2_oracle(announce):
    with Timer() as t:
        checked = failed = 0
        for system in (A(1), A(2), B(2), I2(5)):
            for beta in all_words(system, 6):
                checked += 1
                failed += tau_minus_braid(beta) != tau_minus_oracle(eval_braid(beta))
    ok = failed == 0 and t.elapsed < 60
    announce(2, ok, f"{checked - failed}/{checked} words, {t.elapsed:.1f}s (limit 60s)")
    assert ok


def test_criterion_3_kalman(announce):
    with Timer() as t:
        words = list(all_words(A(2), 5)) + [BraidWord(A(1), (1,) * (2 * k + 1)) for k in range(6)]
        failed = sum(not kalman_check(b).passed for b in words)
        trefoil = extreme_coeff(BraidWord(A(1), (1, 1, 1)), "-").value()
    trefoil_ok = trefoil == LaurentPoly({2: 1, -2: 1})
    ok = failed == 0 and trefoil_ok and t.elapsed < 30
    announce(3, ok, f"{len(words) - failed}/{len(words)} braids, trefoil = {trefoil}, {t.elapsed:.1f}s (limit 30s)")
    assert ok


def test_criterion_4_kawanaka(announce):
    specs = [GroupSpec.sl(2, p) for p in (2, 3, 5, 7)]
    specs += [GroupSpec.sl(3, p) for p in (2, 3)] + [GroupSpec.gl(3, p) for p in (2, 3)]
    specs += [GroupSpec.sp4(3)]
    with Timer() as t:
        reports = [kawanaka_check(s, w) for s in specs for w in cox_enumerate(s.weyl)]
        sl2_w0 = all(count_Ug(weyl_lift(cox_w0(A(1)), GroupSpec.sl(2, p)), GroupSpec.sl(2, p)) == p - 1
                     for p in (2, 3, 5, 7))
        sl3 = GroupSpec.sl(3, 2)
        sl3_w0 = count_Ug(weyl_lift(cox_w0(A(2)), sl3), sl3) == 3
    failed = sum(not r.passed for r in reports)
    ok = failed == 0 and sl2_w0 and sl3_w0 and t.elapsed < 300
    announce(4, ok, f"{len(reports) - failed}/{len(reports)} cosets, SL2 w0 = p-1: {sl2_w0}, "
                    f"SL3 w0 at p=2 is 3: {sl3_w0}, {t.elapsed:.1f}s (limit 300s)")
    assert ok


def test_criterion_5_steinberg(announce):
    with Timer() as t:
        reports = [steinberg_check(GroupSpec.gl(n, p)) for n in (2, 3) for p in (2, 3)]
    ok = all(r.passed and r.lhs == r.params["expected"] for r in reports) and t.elapsed < 30
    detail = ", ".join(f"GL{r.params['n']}(F{r.params['p']}) {r.lhs}={r.rhs}" for r in reports)
    announce(5, ok, f"{detail}, {t.elapsed:.1f}s (limit 30s)")
    assert ok


def test_criterion_6_corollary(announce):
    with Timer() as t:
        reports = [cor_check(b, s) for s, b in _words_plus_sigma_w()]
    failed = sum(not r.passed for r in reports)
    ok = failed == 0 and t.elapsed < 600
    announce(6, ok, f"{len(reports) - failed}/{len(reports)} braids, {t.elapsed:.1f}s (limit 600s)")
    assert ok


def test_criterion_7_hecke_counts(announce):
    with Timer() as t:
        grid = _words_plus_sigma_w()
        u_side = [hecke_count_check(b, s, "-") for s, b in grid]
        x_side = [hecke_count_check(b, s, "+") for s, b in grid]
    u_ok = sum(r.passed for r in u_side)
    x_ok = sum(r.passed for r in x_side)
    example = hecke_count_check(BraidWord(A(1), (1,)), GroupSpec.gl(2, 2), "-")
    ok = u_ok == len(grid) and x_ok == len(grid) and example.lhs == example.rhs == 6
    first_bad = next((r.to_json() for r in x_side if not r.passed), None)
    announce(7, ok, f"U side {u_ok}/{len(grid)}, X side {x_ok}/{len(grid)}, GL2 sigma_1 p=2: "
                    f"{example.lhs}={example.rhs}, {t.elapsed:.1f}s; first X mismatch: {first_bad}")
    assert ok


def test_criterion_7_x_side_with_w0_shift(announce):
    """Supplementary: the X-side formula with q^-l(w0) inserted."""
    grid = _words_plus_sigma_w()
    reports = [hecke_count_check(b, s, "+", shift_by_w0=True) for s, b in grid]
    ok = all(r.passed for r in reports)
    announce("7 (supplementary, X side times q^-l(w0))", ok, f"{sum(r.passed for r in reports)}/{len(grid)}")
    assert ok


def test_criterion_8_prop44(announce):
    specs = [GroupSpec.gl(2, 2), GroupSpec.sl(2, 2), GroupSpec.gl(3, 2), GroupSpec.sl(3, 2)]
    with Timer() as t:
        reports = [prop44_check(w, s, v) for s in specs for w in cox_enumerate(s.weyl) for v in ("U", "X")]
    failed = sum(not r.passed for r in reports)
    ok = failed == 0 and t.elapsed < 300
    announce(8, ok, f"{len(reports) - failed}/{len(reports)} identities, {t.elapsed:.1f}s (limit 300s)")
    assert ok


def test_criterion_9_vx_bijection(announce):
    specs = [GroupSpec.sl(2, p) for p in (2, 3, 5)] + [GroupSpec.sl(3, 2), GroupSpec.gl(3, 2)]
    equiv_specs = [GroupSpec.sl(2, 2), GroupSpec.gl(2, 2), GroupSpec.sl(3, 2), GroupSpec.gl(3, 2)]
    with Timer() as t:
        bij = [vx_bijection_check(w, s) for s in specs for w in cox_enumerate(s.weyl)]
        eq = [equivariance_check(w, s) for s in equiv_specs for w in cox_enumerate(s.weyl)]
    ok = all(r.passed for r in bij + eq) and t.elapsed < 300
    announce(9, ok, f"bijection {sum(r.passed for r in bij)}/{len(bij)}, "
                    f"equivariance {sum(r.passed for r in eq)}/{len(eq)}, {t.elapsed:.1f}s (limit 300s)")
    assert ok


def test_criterion_10_closed_forms(announce):
    with Timer() as t:
        reports = [closed_form_check(case, 101, 1000, seed=10) for case in CASES]
    bad = sum(r.lhs for r in reports)
    ok = bad == 0 and t.elapsed < 60
    cases = ", ".join(r.params["case"] for r in reports)
    announce(10, ok, f"{bad} mismatched entries over 1000 samples each of {cases}, {t.elapsed:.1f}s (limit 60s)")
    assert ok


def test_criterion_11_constancy(announce):
    specs = [GroupSpec.sl(3, p) for p in (2, 3)] + [GroupSpec.gl(3, p) for p in (2, 3)]
    with Timer() as t:
        reports = [bruhat_constancy_check(w, s, 6, seed=11) for s in specs for w in cox_enumerate(s.weyl)]
    failed = sum(not r.passed for r in reports)
    ok = failed == 0 and t.elapsed < 120
    announce(11, ok, f"{len(reports) - failed}/{len(reports)} cells constant over 6 samples, "
                     f"{t.elapsed:.1f}s (limit 120s)")
    assert ok


def test_criterion_12_properties(announce):
    laws = [getattr(test_properties, n) for n in dir(test_properties) if n.startswith("test_")]
    test_properties.CALLS.clear()
    with Timer() as t:
        for fn in laws:
            fn()
    fewest = min(test_properties.CALLS[fn.__name__] for fn in laws)
    ok = fewest >= 1000 and t.elapsed < 120
    announce(12, ok, f"{len(laws)} laws, at least {fewest} cases each, {t.elapsed:.1f}s (limit 120s)")
    assert ok
