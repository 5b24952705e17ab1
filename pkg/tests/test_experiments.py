import json

import pytest

from nfakit.experiments import COLUMNS, EXPERIMENTS, Report, Row, RunConfig, parse_range, run_experiment


def test_parse_range():
    assert parse_range("3..5") == (3, 4, 5)
    assert parse_range("1,3..4") == (1, 3, 4)
    assert parse_range("7") == (7,)
    with pytest.raises(ValueError):
        parse_range("")


def test_every_experiment_id_registered():
    assert set(EXPERIMENTS) == {
        "blowup-asf", "blowup-asif", "blowup-asi", "suff-bound", "fact-bound", "pref-bound",
        "unary-blowup", "n2-enumeration", "reductions-iff", "closedness-oracle",
        "characterization-roundtrip", "complement-fooling", "shortest-augment",
    }


def test_report_formats():
    rep = Report([Row("x", "fam", 3, 8, 8, "pass"), Row("x", "fam", 4, None, 16, "skipped", 0, "budget")])
    md = rep.render("md").splitlines()
    assert md[0] == "| " + " | ".join(COLUMNS) + " |"
    assert md[3] == "| x | fam | 4 |  | 16 | skipped | 0 |"
    csv_lines = rep.render("csv").splitlines()
    assert csv_lines[0] == ",".join(COLUMNS)
    doc = json.loads(rep.render("json"))
    assert list(doc["rows"][0]) == list(COLUMNS)
    assert doc["rows"][1]["witness"] == "budget"
    assert rep.exit_code() == 3
    with pytest.raises(ValueError):
        rep.render("xml")


def test_exit_codes():
    assert Report([Row("x", "f", 1, 1, 1, "pass")]).exit_code() == 0
    assert Report([Row("x", "f", 1, 1, 2, "fail"), Row("x", "f", 1, None, 2, "skipped")]).exit_code() == 1


def test_blowup_rows():
    rows = run_experiment("blowup-asif", RunConfig(n_range=(1, 2, 3))).rows
    assert [(r.n, r.measured, r.expected, r.verdict) for r in rows] == [
        (1, 2, 2, "pass"), (2, 4, 4, "pass"), (3, 8, 8, "pass")]


def test_out_of_domain_row_is_skipped():
    rows = run_experiment("blowup-asf", RunConfig(n_range=(2, 3))).rows
    assert rows[0].verdict == "skipped" and rows[0].measured is None
    assert rows[1].verdict == "pass"


def test_budget_rows_are_skipped_not_passed():
    rows = run_experiment("n2-enumeration", RunConfig(enum_budget=100)).rows
    assert {r.verdict for r in rows} == {"skipped"}


@pytest.mark.parametrize("name", ["pref-bound", "closedness-oracle", "shortest-augment", "reductions-iff"])
def test_reports_reproducible(name):
    cfg = RunConfig(samples=40, seed=11)
    a = run_experiment(name, cfg).render("json")
    b = run_experiment(name, RunConfig(samples=40, seed=11)).render("json")
    assert a == b
    assert a != run_experiment(name, RunConfig(samples=40, seed=12)).render("json")


def test_sampled_rows_count_instances():
    rows = run_experiment("pref-bound", RunConfig(samples=50)).rows
    assert sum(r.expected for r in rows) == 50
    assert all(r.verdict == "pass" for r in rows)


def test_timing_fills_runtime():
    rows = run_experiment("blowup-asf", RunConfig(n_range=(10,), timing=True)).rows
    assert rows[0].runtime_ms >= 0 and rows[0].verdict == "pass"


def test_unknown_experiment():
    with pytest.raises(KeyError):
        run_experiment("nope")
