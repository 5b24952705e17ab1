"""Experiment suites that measure the blow-up and closure bounds and check the
reductions, closedness tests and fooling-set lower bounds.

Each experiment produces :class:`Row` objects; a row passes iff ``measured ==
expected``. Sampled experiments report, per (family, n), the number of
instances satisfying the property against the number drawn.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from nfakit import closure, families, reductions, sampling
from nfakit.core import accepts, complement, difference_witness
from nfakit.oracles import factorial_by_words, prefix_closed_by_words, suffix_closed_by_words
from nfakit.subset import (
    DEFAULT_ENUM_BUDGET,
    BudgetExceeded,
    determinize,
    enumerate_class,
    enumeration_size,
    enumerate_max_blowup,
    equivalent,
    minimize,
    shortest_rejected,
    state_complexity,
    universal,
)

__all__ = ["RunConfig", "Row", "Report", "EXPERIMENTS", "run_experiment", "parse_range"]

COLUMNS = ("experiment", "family", "n", "measured", "expected", "verdict", "runtime_ms")
PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


def parse_range(text: str) -> tuple:
    """``"3..8"`` -> (3, 4, ..., 8); ``"1,3..5"`` -> (1, 3, 4, 5); ``"4"`` -> (4,)."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise ValueError(f"empty range {text!r}")
    return tuple(out)


@dataclass
class RunConfig:
    n_range: Optional[tuple] = None  # None: each experiment's default range
    samples: Optional[int] = None  # None: each experiment's default sample count
    seed: int = 0
    enum_budget: int = DEFAULT_ENUM_BUDGET
    fooling_budget: int = families.DEFAULT_FOOLING_BUDGET
    timing: bool = False  # off keeps reports byte-identical across runs


@dataclass
class Row:
    experiment: str
    family: str
    n: int
    measured: Optional[int]
    expected: int
    verdict: str
    runtime_ms: int = 0
    witness: Optional[str] = None


@dataclass
class Report:
    rows: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.verdict == PASS for r in self.rows)

    def exit_code(self) -> int:
        verdicts = {r.verdict for r in self.rows}
        if FAIL in verdicts:
            return 1
        if SKIPPED in verdicts:
            return 3
        return 0

    def render(self, fmt: str = "md") -> str:
        if fmt == "json":
            docs = []
            for r in self.rows:
                d = {c: getattr(r, c) for c in COLUMNS}
                if r.witness is not None:
                    d["witness"] = r.witness
                docs.append(d)
            return json.dumps({"rows": docs}, indent=2) + "\n"
        cells = [[("" if getattr(r, c) is None else str(getattr(r, c))) for c in COLUMNS] for r in self.rows]
        if fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(COLUMNS)
            w.writerows(cells)
            return buf.getvalue()
        if fmt == "md":
            lines = ["| " + " | ".join(COLUMNS) + " |", "|" + "---|" * len(COLUMNS)]
            lines += ["| " + " | ".join(c) + " |" for c in cells]
            return "\n".join(lines) + "\n"
        raise ValueError(f"unknown format {fmt!r}")


def _timed(cfg: RunConfig, fn: Callable):
    t0 = time.perf_counter()
    value = fn()
    ms = int((time.perf_counter() - t0) * 1000) if cfg.timing else 0
    return value, ms


def _row(exp: str, family: str, n: int, measured, expected: int, ms: int = 0, witness=None) -> Row:
    verdict = PASS if measured == expected else FAIL
    return Row(exp, family, n, measured, expected, verdict, ms, witness)


# -- witness blow-ups -------------------------------------------------------


def _family_rows(exp: str, family: str, ns, expected: Callable, measure: Callable, cfg: RunConfig):
    for n in ns:
        try:
            m = families.generate(family, n)
        except ValueError as exc:
            yield Row(exp, family, n, None, expected(n), SKIPPED, 0, str(exc))
            continue
        sc, ms = _timed(cfg, lambda: measure(m))
        yield _row(exp, family, n, sc, expected(n), ms)


def blowup_asf(cfg: RunConfig):
    ns = cfg.n_range or (1, 3, 4, 5, 6, 7, 8)
    return _family_rows("blowup-asf", "all-final", ns, lambda n: 1 << n, state_complexity, cfg)


def blowup_asif(cfg: RunConfig):
    ns = cfg.n_range or tuple(range(1, 9))
    return _family_rows("blowup-asif", "asif", ns, lambda n: 1 << n, state_complexity, cfg)


def blowup_asi(cfg: RunConfig):
    ns = cfg.n_range or tuple(range(1, 9))
    return _family_rows("blowup-asi", "asi", ns, lambda n: 1 << n, state_complexity, cfg)


def _random_dfas(cfg: RunConfig, count: int, max_n: int, k: int = 2, salt: int = 0) -> Iterator:
    rng = sampling.make_rng(cfg.seed * 1_000_003 + salt)
    for _ in range(count):
        yield sampling.random_dfa(rng, rng.randint(1, max_n), k)


def _aggregate(exp: str, family: str, results) -> list:
    """Rows per n of (satisfied, total) from (n, ok) pairs."""
    tally: dict = {}
    for n, ok in results:
        good, total = tally.get(n, (0, 0))
        tally[n] = (good + bool(ok), total + 1)
    return [_row(exp, family, n, good, total) for n, (good, total) in sorted(tally.items())]


def suff_bound(cfg: RunConfig):
    ns = cfg.n_range or tuple(range(2, 9))
    yield from _family_rows("suff-bound", "suff", ns, lambda n: (1 << n) - 1,
                            lambda d: state_complexity(closure.suff_nfa(d)), cfg)
    samples = cfg.samples or 200
    checks = ((d.n, state_complexity(closure.suff_nfa(d)) <= (1 << d.n) - 1)
              for d in _random_dfas(cfg, samples, 8, salt=1))
    yield from _aggregate("suff-bound", "random-dfa", checks)


def fact_bound(cfg: RunConfig):
    ns = cfg.n_range or tuple(range(3, 10))
    yield from _family_rows("fact-bound", "fact", ns, lambda n: 1 << (n - 1),
                            lambda d: state_complexity(closure.fact_nfa(d)), cfg)
    samples = cfg.samples or 200
    checks = ((d.n, state_complexity(closure.fact_nfa(d)) <= 1 << (d.n - 1))
              for d in _random_dfas(cfg, samples, 8, salt=2))
    yield from _aggregate("fact-bound", "random-dfa", checks)


def pref_bound(cfg: RunConfig):
    samples = cfg.samples or 500
    checks = ((d.n, state_complexity(closure.pref_dfa(d)) <= d.n)
              for d in _random_dfas(cfg, samples, 8, salt=3))
    return _aggregate("pref-bound", "random-dfa", checks)


# -- exhaustive enumeration -------------------------------------------------


def _guarded(exp: str, family: str, n: int, expected: int, fn: Callable, cfg: RunConfig) -> Row:
    try:
        value, ms = _timed(cfg, fn)
    except BudgetExceeded as exc:
        return Row(exp, family, n, None, expected, SKIPPED, 0, str(exc))
    return _row(exp, family, n, value, expected, ms)


def unary_blowup(cfg: RunConfig):
    ns = cfg.n_range or (1, 2, 3)
    for n in ns:
        yield _guarded("unary-blowup", "unary-asf", n, n + 1,
                       lambda: enumerate_max_blowup(n, 1, "unary-asf", cfg.enum_budget).max_complexity, cfg)


def _count_reaching(n: int, k: int, mode: str, level: int, budget: int) -> int:
    total = enumeration_size(n, k, mode)
    if total > budget:
        raise BudgetExceeded(f"class has {total} automata, budget is {budget}")
    return sum(1 for m in enumerate_class(n, k, mode) if state_complexity(m) >= level)


def n2_enumeration(cfg: RunConfig):
    """Binary: how many 2-state all-final NFAs reach 4 states (claimed: none).
    Ternary: the maximum over the class (claimed: 4)."""
    yield _guarded("n2-enumeration", "asf-binary-reaching-4", 2, 0,
                   lambda: _count_reaching(2, 2, "asf-single-initial", 4, cfg.enum_budget), cfg)
    yield _guarded("n2-enumeration", "asf-ternary-max", 2, 4,
                   lambda: enumerate_max_blowup(2, 3, "asf-single-initial", cfg.enum_budget).max_complexity, cfg)


# -- reductions -------------------------------------------------------------


def reductions_iff(cfg: RunConfig):
    rng = sampling.make_rng(cfg.seed * 1_000_003 + 4)
    single = cfg.samples or 500
    small = cfg.samples or 200
    plan = [
        (("asf", "asif"), single, 4, 2, False),
        (("recode4to2",), small, 3, 4, True),
        (("asf3-asif2",), small, 3, 3, True),
    ]
    for names, count, max_n, k, all_final in plan:
        results: dict = {name: [] for name in names}
        for _ in range(count):
            m = sampling.random_nfa(rng, rng.randint(1, max_n), k, all_final=all_final)
            for name in names:
                results[name].append((m.n, reductions.certify(name, m).holds))
        for name in names:
            yield from _aggregate("reductions-iff", name, results[name])


# -- closedness -------------------------------------------------------------


def closedness_oracle(cfg: RunConfig):
    samples = cfg.samples or 500
    checks: dict = {"prefix": [], "suffix": [], "factor": []}
    for d in _random_dfas(cfg, samples, 6, salt=5):
        checks["prefix"].append((d.n, closure.is_prefix_closed(d) == prefix_closed_by_words(d)))
        checks["suffix"].append((d.n, closure.is_suffix_closed(d) == suffix_closed_by_words(d)))
        checks["factor"].append((d.n, closure.is_factorial(d) == factorial_by_words(d)))
    for kind, results in checks.items():
        yield from _aggregate("closedness-oracle", kind, results)


def _closed_instances(d):
    """(kind, closed DFA, characterization) built from an arbitrary DFA."""
    yield "prefix", closure.pref_dfa(d), closure.to_all_final_nfa
    yield "suffix", minimize(determinize(closure.suff_nfa(d)).dfa), closure.to_all_initial_nfa
    yield "factor", minimize(determinize(closure.fact_nfa(d)).dfa), closure.to_asif_nfa


def characterization_roundtrip(cfg: RunConfig):
    samples = cfg.samples or 500
    checks: dict = {"prefix": [], "suffix": [], "factor": []}
    for d in _random_dfas(cfg, samples, 6, salt=6):
        if difference_witness(d, d.with_final(0)) is None:
            continue  # empty language: outside the characterization
        for kind, closed, build in _closed_instances(d):
            checks[kind].append((d.n, equivalent(build(closed), closed)))
    for kind, results in checks.items():
        yield from _aggregate("characterization-roundtrip", kind, results)


# -- fooling sets -----------------------------------------------------------


def complement_fooling(cfg: RunConfig):
    ns = cfg.n_range or (2, 3)
    for n in ns:
        max_len = n + 2

        def measure(n=n, max_len=max_len) -> int:
            d = complement(minimize(determinize(families.jiraskova_asf_modified(n)).dfa))
            fs = families.find_fooling_set(d, 1 << n, max_len, cfg.fooling_budget)
            if fs is None or not families.check_fooling_set(d, fs):
                return 0
            return len(fs)

        yield _guarded("complement-fooling", "jiraskova-asf", n, 1 << n, measure, cfg)


# -- shortest rejected word -------------------------------------------------


def _augment_ok(m, aug, hash_first: bool) -> bool:
    """Shortest rejected word does not get shorter, and w# (or #w#) is rejected."""
    w = shortest_rejected(m)
    w_aug = shortest_rejected(aug)
    if w_aug is None or len(w_aug) < len(w):
        return False
    h = aug.k - 1
    probe = ((h,) if hash_first else ()) + w + (h,)
    return not accepts(aug, probe)


def shortest_augment(cfg: RunConfig):
    rng = sampling.make_rng(cfg.seed * 1_000_003 + 7)
    samples = cfg.samples or 300
    asf_res, asif_res = [], []
    drawn = 0
    while drawn < samples:
        n = rng.randint(1, 4)
        m = sampling.random_nfa(rng, n, 2)
        if not m.final_mask & 1 or universal(m):
            continue
        drawn += 1
        asf_res.append((n, _augment_ok(m, reductions.augment_hash_asf(m), False)))
        asif_res.append((n, _augment_ok(m, reductions.augment_hash_asif(m), True)))
    yield from _aggregate("shortest-augment", "augment-asf", asf_res)
    yield from _aggregate("shortest-augment", "augment-asif", asif_res)


EXPERIMENTS: dict = {
    "blowup-asf": blowup_asf,
    "blowup-asif": blowup_asif,
    "blowup-asi": blowup_asi,
    "suff-bound": suff_bound,
    "fact-bound": fact_bound,
    "pref-bound": pref_bound,
    "unary-blowup": unary_blowup,
    "n2-enumeration": n2_enumeration,
    "reductions-iff": reductions_iff,
    "closedness-oracle": closedness_oracle,
    "characterization-roundtrip": characterization_roundtrip,
    "complement-fooling": complement_fooling,
    "shortest-augment": shortest_augment,
}


def run_experiment(name: str, cfg: Optional[RunConfig] = None) -> Report:
    if name not in EXPERIMENTS:
        raise KeyError(f"unknown experiment {name!r}; choose from {', '.join(EXPERIMENTS)}")
    return Report(list(EXPERIMENTS[name](cfg or RunConfig())))
