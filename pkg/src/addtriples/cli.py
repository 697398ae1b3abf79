"""Command-line front end with machine-readable JSON and CSV output.

Exit codes: 0 success, 1 usage or domain error, 2 internal verification
failure (methods disagree or a property check fails), 3 budget exceeded.
Output is byte-identical across runs for identical flags and seed; wall
times are only included when --timing is passed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import counting, verify
from .bounds import bounds_for
from .construction import construct
from .residues import DomainError, VerificationError, make_set
from .spectrum import (
    DEFAULT_PAIR_BUDGET,
    BudgetExceededError,
    SpectrumReport,
    exception_scan,
    schur_spectrum,
    spectrum_exhaustive,
    spectrum_fixed_interval,
    spectrum_multiset_dp,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFICATION = 2
EXIT_BUDGET = 3

SPECTRUM_MODES = ("exhaustive", "fixed-interval-B", "multiset-dp")
COUNT_METHODS = {
    "naive": counting.count_naive,
    "shift": counting.count_shift,
    "layers": counting.count_layers,
    "convolution": counting.count_convolution,
    "auto": counting.count_triples,
}


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on usage errors; we reserve 2 for math failures."""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _residue_list(text: str) -> list[int]:
    """Parse a comma-separated residue list; the empty string is the empty set."""
    text = text.strip()
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def _mode(text: str) -> str:
    canon = {m.lower(): m for m in SPECTRUM_MODES}
    if text.lower() not in canon:
        raise argparse.ArgumentTypeError(f"mode must be one of {', '.join(SPECTRUM_MODES)}")
    return canon[text.lower()]


def _int_list(text: str) -> list[int]:
    values = _residue_list(text)
    if not values:
        raise argparse.ArgumentTypeError("need at least one modulus")
    return values


def build_parser() -> _Parser:
    parser = _Parser(prog="addtriples", description="Additive triples (a, b, a+b) in Z_p.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--output", default=None, help="write to this path instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("bounds", parents=[common], help="closed-form interval [f, g]")
    b.add_argument("--p", type=int, required=True)
    b.add_argument("--s", type=int, required=True)
    b.add_argument("--t", type=int, required=True)

    c = sub.add_parser("count", parents=[common], help="count triples for explicit sets")
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--set-a", type=_residue_list, required=True)
    c.add_argument("--set-b", type=_residue_list, required=True)
    c.add_argument("--method", choices=[*COUNT_METHODS, "all"], default="auto")

    k = sub.add_parser("construct", parents=[common], help="build A achieving a target count")
    k.add_argument("--p", type=int, required=True)
    k.add_argument("--s", type=int, required=True)
    k.add_argument("--t", type=int, required=True)
    k.add_argument("--r", type=int, required=True)

    sp = sub.add_parser("spectrum", parents=[common], help="attained values for (p, s, t)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--mode", type=_mode, default="exhaustive",
                    help="exhaustive, fixed-interval-B or multiset-dp")
    sp.add_argument("--witnesses", action="store_true", help="record one witness per value")
    sp.add_argument("--jobs", type=int, default=1, help="worker processes (exhaustive mode)")
    sp.add_argument("--budget", type=int, default=DEFAULT_PAIR_BUDGET)
    sp.add_argument("--timing", action="store_true", help="include wall time in the report")

    sc = sub.add_parser("schur", parents=[common], help="Schur-triple spectrum for (p, s)")
    sc.add_argument("--p", type=int, required=True)
    sc.add_argument("--s", type=int, required=True)
    sc.add_argument("--witnesses", action="store_true")
    sc.add_argument("--budget", type=int, default=DEFAULT_PAIR_BUDGET)
    sc.add_argument("--timing", action="store_true")

    sn = sub.add_parser("scan", parents=[common], help="hunt composite moduli for exceptions")
    sn.add_argument("--p-min", type=int, required=True)
    sn.add_argument("--p-max", type=int, required=True)
    sn.add_argument("--budget", type=int, default=DEFAULT_PAIR_BUDGET)

    v = sub.add_parser("verify", parents=[common], help="seeded randomized property checks")
    v.add_argument("--p", type=_int_list, required=True, help="comma-separated moduli")
    v.add_argument("--trials", type=int, required=True)
    v.add_argument("--seed", type=int, default=0)

    return parser


def _witness_rows(report: SpectrumReport) -> list[dict]:
    if not report.witnesses:
        return []
    return [
        {"value": value, "witness_a": list(a), "witness_b": list(b)}
        for value, (a, b) in sorted(report.witnesses.items())
    ]


def _spectrum_payload(report: SpectrumReport, timing: bool) -> dict:
    payload = {
        "p": report.p,
        "s": report.s,
        "t": report.t,
        "mode": report.mode,
        "f": report.f,
        "g": report.g,
        "prime": report.prime,
        "attained": list(report.attained),
        "gaps": list(report.gaps),
        "exceptions": list(report.exceptions),
    }
    if report.witnesses is not None:
        payload["witnesses"] = _witness_rows(report)
    if timing:
        payload["elapsed"] = report.elapsed
    return payload


def _spectrum_csv_row(report: SpectrumReport) -> dict:
    return {
        "p": report.p,
        "s": report.s,
        "t": report.t,
        "mode": report.mode,
        "f": report.f,
        "g": report.g,
        "prime": report.prime,
        "attained": ";".join(map(str, report.attained)),
        "gaps": ";".join(map(str, report.gaps)),
        "exceptions": ";".join(map(str, report.exceptions)),
    }


def _run_bounds(args):
    result = bounds_for(args.p, args.s, args.t)
    payload = {
        "p": result.p, "s": result.s, "t": result.t,
        "f": result.f, "g": result.g,
        "prime": result.guaranteed, "guaranteed": result.guaranteed,
    }
    return payload, [payload], EXIT_OK


def _run_count(args):
    a = make_set(args.p, args.set_a)
    b = make_set(args.p, args.set_b)
    base = {"p": args.p, "set_a": list(a), "set_b": list(b)}
    if args.method == "all":
        results = {name: fn(a, b) for name, fn in COUNT_METHODS.items() if name != "auto"}
        agree = len(set(results.values())) == 1
        payload = {**base, "method": "all", "counts": results,
                   "count": next(iter(results.values())), "agree": agree}
        rows = [{"p": args.p, "method": name, "count": value} for name, value in results.items()]
        return payload, rows, EXIT_OK if agree else EXIT_VERIFICATION
    value = COUNT_METHODS[args.method](a, b)
    payload = {**base, "method": args.method, "count": value}
    return payload, [{"p": args.p, "method": args.method, "count": value}], EXIT_OK


def _run_construct(args):
    witness = construct(args.p, args.s, args.t, args.r)
    payload = {
        "p": witness.p, "s": witness.s, "t": witness.t,
        "target_r": witness.target_r, "achieved_r": witness.achieved_r,
        "witness_a": list(witness.a_set), "witness_b": list(witness.b_set),
        "selection": [[v, c] for v, c in sorted(witness.selection.items(), reverse=True)],
    }
    row = {
        "p": witness.p, "s": witness.s, "t": witness.t,
        "target_r": witness.target_r, "achieved_r": witness.achieved_r,
        "witness_a": " ".join(map(str, witness.a_set)),
        "witness_b": " ".join(map(str, witness.b_set)),
    }
    return payload, [row], EXIT_OK


def _run_spectrum(args):
    if args.mode == "exhaustive":
        report = spectrum_exhaustive(args.p, args.s, args.t, want_witnesses=args.witnesses,
                                     jobs=args.jobs, budget=args.budget)
    elif args.mode == "fixed-interval-B":
        report = spectrum_fixed_interval(args.p, args.s, args.t,
                                         want_witnesses=args.witnesses, budget=args.budget)
    else:
        report = spectrum_multiset_dp(args.p, args.s, args.t)
    return _spectrum_payload(report, args.timing), [_spectrum_csv_row(report)], EXIT_OK


def _run_schur(args):
    report = schur_spectrum(args.p, args.s, want_witnesses=args.witnesses, budget=args.budget)
    return _spectrum_payload(report, args.timing), [_spectrum_csv_row(report)], EXIT_OK


def _run_scan(args):
    result = exception_scan(args.p_min, args.p_max, budget=args.budget)
    records = []
    rows = []
    for rec in result.records:
        witnesses = [
            {"value": value, "witness_a": list(a), "witness_b": list(b)}
            for value, (a, b) in sorted(rec.witnesses.items())
        ]
        records.append({
            "p": rec.p, "s": rec.s, "t": rec.t, "f": rec.f, "g": rec.g,
            "exceptions": list(rec.values), "witnesses": witnesses,
        })
        rows.append({
            "p": rec.p, "s": rec.s, "t": rec.t, "f": rec.f, "g": rec.g,
            "exceptions": ";".join(map(str, rec.values)),
        })
    payload = {
        "p_min": result.p_min, "p_max": result.p_max, "budget": result.budget,
        "instances_run": result.instances_run,
        "skipped": [list(item) for item in result.skipped],
        "records": records,
    }
    return payload, rows, EXIT_OK


def _run_verify(args):
    report = verify.run_verification(args.p, args.trials, args.seed)
    moduli = []
    rows = []
    for summary in report.moduli:
        failures = [
            {"trial": v.trial, "check": v.check, "detail": v.detail,
             "set_a": list(v.set_a), "set_b": list(v.set_b)}
            for v in summary.violations
        ]
        moduli.append({
            "p": summary.p, "prime": summary.prime, "trials": summary.trials,
            "checks": summary.checks, "skipped_checks": list(summary.skipped),
            "failures": failures,
        })
        rows.append({
            "p": summary.p, "prime": summary.prime, "trials": summary.trials,
            "violations": len(summary.violations),
        })
    payload = {"seed": report.seed, "trials": report.trials, "ok": report.ok, "moduli": moduli}
    return payload, rows, EXIT_OK if report.ok else EXIT_VERIFICATION


_RUNNERS = {
    "bounds": _run_bounds,
    "count": _run_count,
    "construct": _run_construct,
    "spectrum": _run_spectrum,
    "schur": _run_schur,
    "scan": _run_scan,
    "verify": _run_verify,
}


def render_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def render_csv(rows: list[dict]) -> str:
    if not rows:
        return "\n"
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # usage error or --help; keep main() total
        return int(exc.code or 0)
    try:
        payload, rows, code = _RUNNERS[args.command](args)
    except BudgetExceededError as exc:
        print(f"addtriples: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except DomainError as exc:
        print(f"addtriples: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationError as exc:
        print(f"addtriples: internal verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION
    text = render_json(payload) if args.format == "json" else render_csv(rows)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
