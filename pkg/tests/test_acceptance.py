"""Acceptance criteria, one check per criterion.

Each check prints a single ``[PASS]`` / ``[FAIL]`` line. Run directly for a
summary table::

    python3 tests/test_acceptance.py

or through pytest (``pytest tests/test_acceptance.py -v``), where each line is
printed with output capture disabled.
"""

import sys
import time

import pytest

from nfakit import families
from nfakit.experiments import RunConfig, run_experiment
from nfakit.subset import determinize, enumerate_max_blowup, minimize, state_complexity


def _rows_pass(name: str, **cfg) -> tuple:
    report = run_experiment(name, RunConfig(**cfg))
    bad = [r for r in report.rows if r.verdict != "pass"]
    detail = f"{len(report.rows)} rows" + (f", first non-pass: {bad[0]}" if bad else "")
    return not bad, detail


def criterion_1():
    ok, detail = _rows_pass("blowup-asf", n_range=(1, 3, 4, 5, 6, 7, 8))
    t0 = time.perf_counter()
    size = minimize(determinize(families.witness_all_final(8)).dfa).n
    elapsed = time.perf_counter() - t0
    ok = ok and size == 256 and elapsed < 10.0
    return ok, f"all-final witness sc = 2^n for n in 1,3..8; n=8 determinize+minimize {elapsed:.3f}s"


def criterion_2():
    ok, detail = _rows_pass("blowup-asif", n_range=tuple(range(1, 9)))
    return ok, "asif witness sc = 2^n for n=1..8; " + detail


def criterion_3():
    ok, detail = _rows_pass("blowup-asi", n_range=tuple(range(1, 9)))
    finals = {n: sorted(families.witness_asi(n).final) for n in range(1, 9)}
    fallback = [n for n, f in finals.items() if f != [n - 1]]
    note = "F={n-1} for every n" if not fallback else f"fallback F={{0}} used for n={fallback}"
    return ok, f"asi witness sc = 2^n for n=1..8 ({note})"


def criterion_4():
    binary = enumerate_max_blowup(2, 2, "asf-single-initial")
    ternary = enumerate_max_blowup(2, 3, "asf-single-initial")
    ok = binary.max_complexity < 4 and ternary.max_complexity == 4
    return ok, (f"n=2 all-final single-initial: binary max {binary.max_complexity} (required < 4), "
                f"ternary max {ternary.max_complexity} (required 4)")


def criterion_5():
    values = {n: enumerate_max_blowup(n, 1, "unary-asf").max_complexity for n in (1, 2, 3)}
    return all(v == n + 1 for n, v in values.items()), f"unary all-final max sc by n: {values}"


def criterion_6():
    ok, detail = _rows_pass("suff-bound", n_range=tuple(range(2, 9)), samples=200)
    return ok, "suff witness sc = 2^n - 1 (n=2..8) and bound on 200 random DFAs; " + detail


def criterion_7():
    ok, detail = _rows_pass("fact-bound", n_range=tuple(range(3, 10)), samples=200)
    return ok, "fact witness sc = 2^(n-1) (n=3..9) and bound on 200 random DFAs; " + detail


def criterion_8():
    ok, detail = _rows_pass("pref-bound", samples=500)
    return ok, "sc(pref) <= n on 500 random DFAs; " + detail


def criterion_9():
    ok, detail = _rows_pass("reductions-iff")
    return ok, "universality iff for asf/asif (500), recode4to2 (200), asf3-asif2 (200); " + detail


def criterion_10():
    ok1, d1 = _rows_pass("closedness-oracle", samples=500)
    ok2, d2 = _rows_pass("characterization-roundtrip", samples=500)
    return ok1 and ok2, f"closedness vs oracle on 500 DFAs ({d1}); round-trips ({d2})"


def criterion_11():
    ok, detail = _rows_pass("complement-fooling", n_range=(2, 3))
    return ok, "fooling sets of size 4 (n=2) and 8 (n=3) for the complement; " + detail


def criterion_12():
    ok, detail = _rows_pass("shortest-augment", samples=300)
    return ok, "augment-asf / augment-asif monotonicity and w#, #w# rejection on 300 NFAs; " + detail


def criterion_13():
    ok9, _ = criterion_9()
    ok11, _ = criterion_11()
    return ok9 and ok11, "not empirically verifiable; constructive content covered by criteria 9 and 11"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7,
            criterion_8, criterion_9, criterion_10, criterion_11, criterion_12, criterion_13]


def _line(num: int, ok: bool, detail: str) -> str:
    return f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {detail}"


@pytest.mark.parametrize("num", range(1, len(CRITERIA) + 1))
def test_criterion(num, capsys):
    ok, detail = CRITERIA[num - 1]()
    with capsys.disabled():
        print("\n" + _line(num, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    failures = 0
    for i, fn in enumerate(CRITERIA, 1):
        ok, detail = fn()
        failures += not ok
        print(_line(i, ok, detail))
    sys.exit(1 if failures else 0)
