"""``antiseq`` command line: expansions, exact probabilities, verification, oracles.

Exit codes: 0 success, 1 computation or verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Optional

from .algebra import format_rational
from .engine import DecompositionError
from .expansion import (
    EvaluationError,
    convergence_report,
    exact_distribution,
    exact_probability,
    expansion_terms,
    render_decimal,
)
from .models import ModelError, gargantuan_probe, get_model, list_models
from .oracle import OracleError, enumerate_graph_components, enumerate_tournament_components
from .series import SeriesError
from .verify import SUITES, run_suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- argument parsing -----------------------------------------------------------


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None


def _size_range(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
            if lo > hi:
                raise ValueError
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}") from None


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=("json", "csv", "text"), default=default("json"))
    parser.add_argument("--digits", type=int, default=default(None),
                        help="render values as decimals with this many significant digits")
    parser.add_argument("--threads", type=int, default=default(1), help="worker processes for enumeration")


def _model_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--model", required=True)
    weight = parser.add_mutually_exclusive_group()
    weight.add_argument("--rho", type=_rational, help="edge weight rho, exact rational")
    weight.add_argument("--p", type=_rational, help="edge probability p, exact rational; rho = p/(1-p)")
    weight.add_argument("--p-decimal", dest="p_decimal", help="edge probability as a terminating decimal")
    parser.add_argument("--P", dest="P", type=int, help="polygon perimeter for p_angulations")
    parser.add_argument("--D", dest="D", type=int, help="dimension for gem")
    parser.add_argument("--d", dest="d", type=int, help="edge multiplicity for multigraphs")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="antiseq", description=__doc__.splitlines()[0])
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        _global_flags(p, suppress=True)
        return p

    p = add("expand", "asymptotic expansion terms at a size (or a size range)")
    _model_flags(p)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--n", "--size", dest="n", type=_size_range, required=True, help="raw size N or range A..B")
    p.add_argument("--order", type=int, default=4)
    p.add_argument("--bound", type=_rational, default=Fraction(10), help="residual ratio bound for ranges")
    p.add_argument("--probe-nmax", type=int, default=24, help="window of the growth probe run before expanding")

    p = add("exact", "exact probability of m components")
    _model_flags(p)
    p.add_argument("--m", type=int, help="component count; omit for the whole distribution")
    p.add_argument("--n", "--size", dest="n", type=_size_range, required=True)

    p = add("verify", "recompute reference tables and cross-checks")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--kmax", type=int, default=4)
    p.add_argument("--order", type=int, default=30)

    p = add("oracle", "brute-force component histograms")
    p.add_argument("family", choices=("graphs", "ties"))
    p.add_argument("--k", type=int, required=True)

    p = add("probe", "finite-window growth diagnostic")
    _model_flags(p)
    p.add_argument("--nmax", type=int, default=40)

    add("models", "list catalog families")
    return parser


def _resolve_model(args):
    rho = args.rho
    if args.p is not None or args.p_decimal is not None:
        p = args.p if args.p is not None else _decimal_probability(args.p_decimal)
        if not 0 < p < 1:
            raise UsageError("p must lie strictly between 0 and 1")
        rho = p / (1 - p)
    if rho is not None and rho <= 0:
        raise UsageError("rho must be positive")
    params = {"P": args.P, "D": args.D, "d": args.d}
    model = get_model(args.model, **params)
    if rho is not None:
        model = model.specialize(rho)
    return model


def _decimal_probability(text: str) -> Fraction:
    if not text.replace(".", "", 1).lstrip("+-").isdigit():
        raise UsageError(f"not a terminating decimal: {text!r}")
    return Fraction(text)


# -- rendering ------------------------------------------------------------------


def _dumps(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2)


def _csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _num(x, digits: Optional[int]) -> str:
    return format_rational(x) if digits is None else render_decimal(x, digits)


# -- subcommands ----------------------------------------------------------------


def cmd_expand(args, out) -> int:
    model = _resolve_model(args)
    if model.symbolic:
        raise UsageError(f"model {model.id!r} needs a numeric weight (--rho, --p or --p-decimal)")
    probe = gargantuan_probe(model, args.probe_nmax)
    if probe.verdict != "pass":
        print(f"warning: growth probe verdict for {model.id!r} is {probe.verdict}; "
              "the expansion may not be asymptotic", file=sys.stderr)
    sizes = args.n
    evals = [expansion_terms(model, args.m, n, args.order) for n in sizes]
    report = convergence_report(model, args.m, sizes, args.order, bound=args.bound) if len(sizes) > 1 else None

    if args.format == "csv":
        rows = []
        for ev in evals:
            for row in ev.rows():
                if args.digits is not None:
                    for key in ("term", "partial_sum", "residual"):
                        row[key] = render_decimal(Fraction(row[key]), args.digits) if row[key] else ""
                rows.append(row)
        print(_csv(rows), file=out)
    elif args.format == "text":
        for ev in evals:
            print(f"{ev.model} m={ev.m} n={ev.n} order={ev.order}", file=out)
            print("  k  coefficient  term  partial_sum", file=out)
            for k, (d, t, s) in enumerate(zip(ev.coefficients, ev.terms, ev.partial_sums)):
                print(f"  {k}  {format_rational(d)}  {_num(t, args.digits)}  {_num(s, args.digits)}", file=out)
            print(f"  exact  {_num(ev.exact_probability, args.digits)}", file=out)
        if report is not None:
            print(f"residual ratio verdict: {report.verdict} (bound {format_rational(report.bound)})", file=out)
    else:
        payload = [ev.to_json(args.digits) for ev in evals]
        if report is None:
            print(_dumps(payload[0]), file=out)
        else:
            print(_dumps({"evaluations": payload, "convergence": report.to_json(args.digits or 12)}), file=out)
    return EXIT_OK


def cmd_exact(args, out) -> int:
    model = _resolve_model(args)
    if model.symbolic:
        raise UsageError(f"model {model.id!r} needs a numeric weight (--rho, --p or --p-decimal)")
    rows = []
    for n in args.n:
        if args.m is None:
            for m, value in exact_distribution(model, n).items():
                rows.append({"model": model.id, "n": n, "m": m, "probability": _num(value, args.digits)})
        else:
            value = exact_probability(model, args.m, n)
            rows.append({"model": model.id, "n": n, "m": args.m, "probability": _num(value, args.digits)})
    if args.format == "csv":
        print(_csv(rows), file=out)
    elif args.format == "text":
        for r in rows:
            print(f"P({r['model']}, n={r['n']}, m={r['m']}) = {r['probability']}", file=out)
    else:
        print(_dumps(rows[0] if len(rows) == 1 else rows), file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    names = SUITES if args.suite == "all" else (args.suite,)
    results = run_suites(names, kmax=args.kmax, order=args.order, workers=args.threads)
    failed = [r for r in results if not r.passed]
    if args.format == "json":
        print(_dumps({
            "checks": [r.to_json() for r in results],
            "passed": len(results) - len(failed),
            "failed": len(failed),
        }), file=out)
    elif args.format == "csv":
        print(_csv([{"suite": r.suite, "name": r.name, "passed": r.passed} for r in results]), file=out)
    else:
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'}  {r.suite}  {r.name}", file=out)
            if not r.passed:
                print(f"    expected: {r.expected}\n    got:      {r.got}", file=out)
        print(f"{len(results) - len(failed)}/{len(results)} checks passed", file=out)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_oracle(args, out) -> int:
    enumerate_fn = enumerate_graph_components if args.family == "graphs" else enumerate_tournament_components
    hist = enumerate_fn(args.k, workers=args.threads)
    data = hist.to_json()
    if args.format == "csv":
        print(_csv([{"k": hist.k, "components": c, "weight": w} for c, w in data["buckets"].items()]), file=out)
    elif args.format == "text":
        for c, w in data["buckets"].items():
            print(f"{c}: {w}", file=out)
    else:
        print(_dumps(data), file=out)
    return EXIT_OK


def cmd_probe(args, out) -> int:
    model = _resolve_model(args)
    report = gargantuan_probe(model, args.nmax)
    data = report.to_json()
    if args.format == "csv":
        print(_csv([{"n": n, "ratio": r} for n, r in data["cond_i_ratios"]]), file=out)
    elif args.format == "text":
        print(f"{report.model}: {report.verdict} (window {report.n_max}; {report.note})", file=out)
        if report.cond_i_flagged:
            print("  ratio n*a_(n-1)/a_n increases in the last quarter of the window", file=out)
        if report.cond_ii_violations:
            print(f"  {len(report.cond_ii_violations)} convolution-tail violations", file=out)
    else:
        print(_dumps(data), file=out)
    return EXIT_OK


def cmd_models(args, out) -> int:
    models = list_models()
    if args.format == "csv":
        print(_csv([{"id": m["id"], "kind": m["kind"], "params": " ".join(m["params"]),
                     "description": m["description"]} for m in models]), file=out)
    elif args.format == "text":
        for m in models:
            params = ", ".join(m["params"]) or "-"
            print(f"{m['id']:<18} {m['kind']}  params: {params}  {m['description']}", file=out)
    else:
        print(_dumps(models), file=out)
    return EXIT_OK


COMMANDS = {
    "expand": cmd_expand,
    "exact": cmd_exact,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
    "probe": cmd_probe,
    "models": cmd_models,
}


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.digits is not None and args.digits < 1:
        print("antiseq: error: --digits must be positive", file=sys.stderr)
        return EXIT_USAGE
    if args.threads < 1:
        print("antiseq: error: --threads must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except (SeriesError, DecompositionError, ArithmeticError) as exc:
        print(f"antiseq: computation error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (UsageError, ModelError, EvaluationError, OracleError, ValueError) as exc:
        print(f"antiseq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
