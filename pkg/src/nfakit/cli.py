"""``nfakit`` command line.

Exit codes: 0 success (every row passed), 1 some check failed, 2 usage,
parse or precondition error, 3 budget exceeded or rows skipped.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional

from nfakit import closure, families, io as nio, reductions
from nfakit.core import AutomatonError, Dfa, PreconditionError, complement, format_word, unary_asf_analyze
from nfakit.experiments import EXPERIMENTS, Report, RunConfig, parse_range, run_experiment
from nfakit.subset import (
    MODES,
    BudgetExceeded,
    determinize,
    enumerate_max_blowup,
    minimize,
    shortest_rejected,
    state_complexity,
    universal,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

ANALYSES = ("info", "sc", "determinize", "minimize", "complement", "universal", "shortest-rejected",
            "closed", "closure", "characterize", "unary")
KINDS = ("prefix", "suffix", "factor")


class _Usage(Exception):
    pass


def _global_flags() -> argparse.ArgumentParser:
    # SUPPRESS lets the flags appear before or after the subcommand without the
    # subparser defaults clobbering values given to the main parser.
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("md", "csv", "json"), default=argparse.SUPPRESS,
                   help="output format (default md)")
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="random seed (default 0)")
    p.add_argument("--budget", type=int, default=argparse.SUPPRESS,
                   help="cap on enumeration size, fooling-set search steps and subset states")
    return p


def build_parser() -> argparse.ArgumentParser:
    flags = _global_flags()
    parser = argparse.ArgumentParser(prog="nfakit", parents=[flags],
                                     description="Determinization blow-ups, closures and reductions for restricted NFAs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[flags], help="write a witness automaton as JSON")
    p.add_argument("family", choices=sorted(families.FAMILIES))
    p.add_argument("n", type=int)
    p.add_argument("-o", "--output", help="output path (default stdout)")

    p = sub.add_parser("analyze", parents=[flags], help="run an analysis on an automaton file")
    p.add_argument("file")
    p.add_argument("analysis", choices=ANALYSES)
    p.add_argument("--kind", choices=KINDS, default="prefix", help="closure kind for closed/closure/characterize")
    p.add_argument("-o", "--output", help="write automaton-valued results here")

    p = sub.add_parser("verify", parents=[flags], help="run an experiment suite")
    p.add_argument("experiment", choices=sorted(EXPERIMENTS) + ["all"])
    p.add_argument("--n", dest="n_range", help="parameter range, e.g. 3..8 or 1,3..8")
    p.add_argument("--samples", type=int, help="override the number of random instances")
    p.add_argument("--timing", action="store_true", help="fill runtime_ms (output no longer reproducible)")

    p = sub.add_parser("reduce", parents=[flags], help="apply a universality-preserving reduction")
    p.add_argument("reduction", choices=sorted(reductions.REDUCTIONS))
    p.add_argument("file")
    p.add_argument("--check", action="store_true", help="decide universality of input and output")
    p.add_argument("-o", "--output", help="output path for the reduced automaton")

    p = sub.add_parser("enumerate", parents=[flags], help="exhaustive maximum blow-up over a class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True, help="alphabet size")
    p.add_argument("--mode", choices=MODES, default="asf-single-initial")

    p = sub.add_parser("fooling", parents=[flags], help="search for a fooling set")
    p.add_argument("file")
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--max-len", type=int, default=4)
    p.add_argument("--complement", action="store_true", help="use the complement of the language")
    return parser


def _emit(text: str, path: Optional[str] = None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_automaton(m, path: Optional[str]) -> None:
    _emit(nio.dumps(m, indent=2) + "\n", path)


def _emit_record(record: dict, fmt: str) -> None:
    """Scalar results: bare values for md, one header row for csv, an object for json."""
    if fmt == "json":
        _emit(json.dumps(record, indent=2) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(record.keys())
        w.writerow(_plain(v) for v in record.values())
        _emit(buf.getvalue())
    elif len(record) == 1:
        _emit(_plain(next(iter(record.values()))) + "\n")
    else:
        _emit("".join(f"{k}: {_plain(v)}\n" for k, v in record.items()))


def _plain(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return ""
    return str(v)


def _as_dfa(m) -> Dfa:
    return m.to_dfa() if m.is_deterministic else minimize(determinize(m).dfa)


def cmd_gen(args, fmt, seed, budget) -> int:
    m = families.generate(args.family, args.n)
    _emit_automaton(m, args.output)
    return EXIT_OK


def cmd_analyze(args, fmt, seed, budget) -> int:
    m = nio.load(args.file)
    kind, a = args.kind, args.analysis
    if a == "info":
        _emit_record({
            "states": m.n, "alphabet": " ".join(m.alphabet), "initial": len(m.initial),
            "final": len(m.final), "deterministic": m.is_deterministic, "all_final": m.is_all_final,
            "all_initial": m.is_all_initial,
        }, fmt)
    elif a == "sc":
        _emit_record({"sc": state_complexity(m, budget or 0)}, fmt)
    elif a == "determinize":
        _emit(json.dumps(determinize(m, budget or 0).to_dict(), indent=2) + "\n", args.output)
    elif a == "minimize":
        _emit_automaton(minimize(determinize(m, budget or 0).dfa), args.output)
    elif a == "complement":
        _emit_automaton(complement(_as_dfa(m)), args.output)
    elif a == "universal":
        _emit_record({"universal": universal(m)}, fmt)
    elif a == "shortest-rejected":
        w = shortest_rejected(m)
        _emit_record({"shortest_rejected": None if w is None else format_word(m.alphabet, w)}, fmt)
    elif a == "closed":
        d = _as_dfa(m)
        w = closure.closure_violation(d, kind)
        record = {"closed": w is None}
        if w is not None:
            record["witness"] = format_word(d.alphabet, w)
        _emit_record(record, fmt)
    elif a == "closure":
        d = _as_dfa(m)
        build = {"prefix": closure.pref_dfa, "suffix": closure.suff_nfa, "factor": closure.fact_nfa}[kind]
        _emit_automaton(build(d), args.output)
    elif a == "characterize":
        d = _as_dfa(m)
        build = {"prefix": closure.to_all_final_nfa, "suffix": closure.to_all_initial_nfa,
                 "factor": closure.to_asif_nfa}[kind]
        _emit_automaton(build(d), args.output)
    elif a == "unary":
        res = unary_asf_analyze(m)
        _emit_record({"kind": res.kind, "bound": res.bound}, fmt)
    return EXIT_OK


def cmd_verify(args, fmt, seed, budget) -> int:
    cfg = RunConfig(seed=seed, samples=args.samples, timing=args.timing)
    if args.n_range:
        try:
            cfg.n_range = parse_range(args.n_range)
        except ValueError as exc:
            raise _Usage(f"bad --n value {args.n_range!r}: {exc}") from exc
    if budget:
        cfg.enum_budget = cfg.fooling_budget = budget
    names = sorted(EXPERIMENTS) if args.experiment == "all" else [args.experiment]
    rows = []
    for name in names:
        rows.extend(run_experiment(name, cfg).rows)
    report = Report(rows)
    _emit(report.render(fmt))
    return report.exit_code()


def cmd_reduce(args, fmt, seed, budget) -> int:
    m = nio.load(args.file)
    if not args.check:
        _emit_automaton(reductions.REDUCTIONS[args.reduction](m), args.output)
        return EXIT_OK
    cert = reductions.certify(args.reduction, m, budget or (1 << 16))
    if args.output:
        _emit_automaton(cert.output, args.output)
    if fmt == "json":
        _emit(json.dumps(cert.to_dict(), indent=2) + "\n")
    else:
        _emit_record({
            "reduction": cert.name, "input_states": cert.input.n, "output_states": cert.output.n,
            "input_universal": cert.input_universal, "output_universal": cert.output_universal,
            "checked": cert.checked_at_scale, "iff_holds": cert.holds,
        }, fmt)
    if not cert.checked_at_scale:
        return EXIT_BUDGET
    return EXIT_OK if cert.holds else EXIT_FAIL


def cmd_enumerate(args, fmt, seed, budget) -> int:
    kwargs = {"budget": budget} if budget else {}
    res = enumerate_max_blowup(args.n, args.k, args.mode, **kwargs)
    record = {"n": args.n, "k": args.k, "mode": args.mode, "max_complexity": res.max_complexity,
              "total_enumerated": res.total_enumerated}
    if fmt == "json":
        record["witness"] = nio.to_dict(res.witness)
    _emit_record(record, fmt)
    return EXIT_OK


def cmd_fooling(args, fmt, seed, budget) -> int:
    d = _as_dfa(nio.load(args.file))
    if args.complement:
        d = complement(d)
    kwargs = {"budget": budget} if budget else {}
    fs = families.find_fooling_set(d, args.target, args.max_len, **kwargs)
    if fs is None:
        sys.stderr.write(f"no fooling set of size {args.target} with words up to length {args.max_len}\n")
        return EXIT_FAIL
    if fmt == "json":
        _emit(json.dumps(fs.to_json(d.alphabet)) + "\n")
    else:
        valid = families.check_fooling_set(d, fs)
        lines = [f"{x} | {y}" for x, y in fs.format(d.alphabet)]
        _emit("\n".join(lines) + f"\nsize: {len(fs)}\nvalid: {_plain(valid)}\n")
    return EXIT_OK


COMMANDS = {
    "gen": cmd_gen,
    "analyze": cmd_analyze,
    "verify": cmd_verify,
    "reduce": cmd_reduce,
    "enumerate": cmd_enumerate,
    "fooling": cmd_fooling,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "format", "md")
    seed = getattr(args, "seed", 0)
    budget = getattr(args, "budget", None)
    try:
        return COMMANDS[args.command](args, fmt, seed, budget)
    except BudgetExceeded as exc:
        print(f"nfakit: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (_Usage, AutomatonError, PreconditionError, OSError) as exc:
        print(f"nfakit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
