"""Command-line front end.

One subcommand per capability: exact weighted-sum moment tables, the four
exact identity verifiers, moment recovery with optional identification,
the seeded Monte Carlo harness, and density/CDF tables for plotting.

Exit codes: 0 all checks passed / output produced; 1 a verification,
identification, or simulation check failed (the report is still emitted);
2 usage or parse error.

Output formats: json (versioned with a top-level "schema": 1), csv (exact
values as "p/q" strings alongside 17-significant-digit decimals), and a
human-readable rendering.  The default format comes from the DIRMIX_FORMAT
environment variable when set.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from .catalog import (
    Distribution,
    MomentSequence,
    UnsupportedOperationError,
    moment_sequence,
    parse_distribution,
)
from .characterize import default_candidates, identify, recover_component_moments
from .mixture import (
    DirichletWeights,
    VerificationResult,
    verify_arcsin_semicircle,
    verify_genarcsin_beta,
    verify_vandermonde,
    verify_vandermonde_halves,
    weighted_sum_moment,
    weighted_sum_moment_general,
)
from .montecarlo import simulate
from .rationals import format_rational, parse_rational

FORMATS = ("json", "csv", "human")


def _default_format() -> str:
    env = os.environ.get("DIRMIX_FORMAT", "").strip().lower()
    return env if env in FORMATS else "human"


def _dec(x: float) -> str:
    return f"{float(x):.17g}"


# ---------------------------------------------------------------- arg types


def _arg_rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _arg_rational_list(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(parse_rational(tok) for tok in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _arg_dist(text: str) -> Distribution:
    try:
        return parse_distribution(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _arg_positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def _arg_seed(text: str) -> int:
    try:
        value = int(text, 0)  # decimal or 0x-prefixed hex
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a decimal or hex integer: {text!r}") from exc
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return value


# ------------------------------------------------------------------ output


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")


def _emit_json(payload: dict, path: str | None) -> None:
    _emit(json.dumps(payload, indent=2), path)


def _emit_csv(rows: list[dict], fieldnames: list[str], path: str | None) -> None:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    _emit(buf.getvalue(), path)


def _moment_rows(seq_orders, values) -> list[dict]:
    return [
        {"order": r, "exact": format_rational(v), "decimal": _dec(v)}
        for r, v in zip(seq_orders, values)
    ]


def _render_verification(result: VerificationResult, fmt: str, path: str | None) -> None:
    if fmt == "json":
        _emit_json(result.to_json_dict(), path)
    elif fmt == "csv":
        row = {
            "claim": result.claim,
            "params": ";".join(f"{k}={v}" for k, v in sorted(result.params.items())),
            "orders": f"{result.orders[0]}..{result.orders[1]}",
            "status": result.status,
            "counterexample_order": "",
            "lhs": "",
            "rhs": "",
        }
        if result.counterexample is not None:
            row["counterexample_order"] = result.counterexample.order
            row["lhs"] = format_rational(result.counterexample.lhs)
            row["rhs"] = format_rational(result.counterexample.rhs)
        _emit_csv([row], list(row.keys()), path)
    else:
        detail = ", ".join(f"{k}={v}" for k, v in sorted(result.params.items()))
        lines = [
            f"{result.claim} [{detail}] orders {result.orders[0]}..{result.orders[1]}: "
            f"{result.status.upper()}"
        ]
        if result.counterexample is not None:
            ce = result.counterexample
            lines.append(
                f"  first counterexample at order {ce.order}: "
                f"lhs = {format_rational(ce.lhs)}, rhs = {format_rational(ce.rhs)}"
            )
        _emit("\n".join(lines), path)


# ------------------------------------------------------------------ handlers


def _cmd_moments(args) -> int:
    orders = range(args.max_order + 1)
    if args.dirichlet is not None:
        weights = DirichletWeights(args.dirichlet)
        if len(weights) != args.n:
            raise ValueError(
                f"--dirichlet lists {len(weights)} concentrations but --n is {args.n}"
            )
        values = [
            weighted_sum_moment_general([args.dist] * args.n, weights, r) for r in orders
        ]
    else:
        values = [weighted_sum_moment(args.dist, args.n, r) for r in orders]

    if args.format == "json":
        payload = {
            "schema": 1,
            "command": "moments",
            "dist": str(args.dist),
            "n": args.n,
            "dirichlet": None
            if args.dirichlet is None
            else [format_rational(a) for a in args.dirichlet],
            "moments": _moment_rows(orders, values),
        }
        _emit_json(payload, args.output)
    elif args.format == "csv":
        _emit_csv(_moment_rows(orders, values), ["order", "exact", "decimal"], args.output)
    else:
        lines = [f"moments of the weighted sum: dist={args.dist}, n={args.n}"]
        lines += [f"  m_{r:<2d} = {format_rational(v):>20s}  ({_dec(v)})" for r, v in zip(orders, values)]
        _emit("\n".join(lines), args.output)
    return 0


def _cmd_verify(args) -> int:
    if args.claim == "vandermonde-halves":
        result = verify_vandermonde_halves(args.n, args.max_order)
    elif args.claim == "vandermonde":
        result = verify_vandermonde(args.params, args.max_order)
    elif args.claim == "arcsin-semicircle":
        result = verify_arcsin_semicircle(args.n, args.max_order, target=args.target)
    else:
        result = verify_genarcsin_beta(args.n, args.alpha, args.max_order, target=args.target)
    _render_verification(result, args.format, args.output)
    return 0 if result.passed else 1


def _load_moments_file(path: str) -> MomentSequence:
    with open(path, "r", encoding="utf-8") as fh:
        payload = json.load(fh)
    if not isinstance(payload, dict) or "support" not in payload or "moments" not in payload:
        raise ValueError(f"{path}: expected a JSON object with 'support' and 'moments'")
    return MomentSequence.from_json_dict(payload)


def _cmd_recover(args) -> int:
    if args.target is not None:
        s_seq = moment_sequence(args.target, args.max_order)
        source = str(args.target)
    else:
        s_seq = _load_moments_file(args.moments_file)
        source = args.moments_file
    recovered = recover_component_moments(s_seq, args.n)

    report = None
    if args.identify:
        report = identify(recovered, default_candidates(), args.max_order)

    if args.format == "json":
        payload = {
            "schema": 1,
            "command": "recover",
            "n": args.n,
            "source": source,
            "recovered": recovered.to_json_dict(),
        }
        if report is not None:
            payload["identification"] = report.to_json_dict()
        _emit_json(payload, args.output)
    elif args.format == "csv":
        rows = _moment_rows(range(len(recovered)), recovered.moments)
        _emit_csv(rows, ["order", "exact", "decimal"], args.output)
    else:
        lo, hi = recovered.support
        lines = [
            f"component moments recovered from {source} with n={args.n} "
            f"on support [{format_rational(lo)}, {format_rational(hi)}]"
        ]
        lines += [
            f"  m_{r:<2d} = {format_rational(m):>20s}  ({_dec(m)})"
            for r, m in enumerate(recovered.moments)
        ]
        if report is not None:
            lines.append(f"moment-validity (complete monotonicity to order {report.checked_order}): "
                         f"{'PASS' if report.validity.passed else 'FAIL'}")
            if report.validity.witness is not None:
                j, k = report.validity.witness
                lines.append(f"  violated at difference (j={j}, k={k})")
            if report.matches:
                lines.append("exact matches (up to affine equivalence):")
                lines += [f"  {m}" for m in report.matches]
            else:
                lines.append("exact matches: none")
        _emit("\n".join(lines), args.output)

    if report is not None and not (report.validity.passed and report.matches):
        return 1
    return 0


def _cmd_simulate(args) -> int:
    report = simulate(args.dist, args.n, args.samples, args.seed)
    if args.format == "json":
        _emit_json(report.to_json_dict(), args.output)
    elif args.format == "csv":
        rows = report.to_csv_rows()
        _emit_csv(
            rows,
            ["check", "order", "observed", "exact", "exact_decimal", "bound", "passed"],
            args.output,
        )
    else:
        lines = [
            f"simulate: dist={report.dist}, n={report.n}, samples={report.n_samples}, "
            f"seed={report.seed}"
        ]
        if report.target is not None:
            lines.append(
                f"  KS vs {report.target}: D = {_dec(report.ks_statistic)} "
                f"(1% critical {_dec(report.ks_critical_1pct)}): "
                f"{'PASS' if report.ks_passed else 'FAIL'}"
            )
        else:
            lines.append("  no closed-form target law; moment checks only")
        for c in report.checks:
            lines.append(
                f"  m_{c.order}: empirical {c.empirical:+.6f} vs exact "
                f"{format_rational(c.exact)} = {c.exact_float:+.6f} "
                f"(SE {_dec(c.std_error)}): {'PASS' if c.passed else 'FAIL'}"
            )
        lines.append(f"verdict: {'PASS' if report.passed else 'FAIL'}")
        _emit("\n".join(lines), args.output)
    return 0 if report.passed else 1


def _cmd_density_table(args) -> int:
    lo, hi = (float(v) for v in args.dist.support())
    if not lo < hi:
        raise ValueError("density table needs a nondegenerate support")
    k = args.points
    rows = []
    for i in range(k):
        x = lo + (hi - lo) * (2 * i + 1) / (2 * k)  # midpoint grid avoids endpoint poles
        rows.append(
            {"x": _dec(x), "pdf": _dec(args.dist.density(x)), "cdf": _dec(args.dist.cdf(x))}
        )
    if args.format == "json":
        payload = {"schema": 1, "command": "density-table", "dist": str(args.dist), "rows": rows}
        _emit_json(payload, args.output)
    else:
        # csv is the natural format here; "human" falls through to csv too
        _emit_csv(rows, ["x", "pdf", "cdf"], args.output)
    return 0


# ------------------------------------------------------------------- parser


_DIST_HELP = (
    "distribution token: arcsin:a | genarcsin:alpha,a | psc:lambda,a | "
    "beta:p,q[,loc,scale] | uniform:lo,hi | point:c (rational or decimal literals)"
)


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=FORMATS,
        default=_default_format(),
        help="output format (default from DIRMIX_FORMAT, else human)",
    )
    parser.add_argument("--output", default=None, help="write output to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dirmix",
        description="Exact moments of Dirichlet-weighted sums, identity verifiers, "
        "moment recovery, and a seeded Monte Carlo harness.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("moments", help="exact moment table of the weighted sum")
    p.add_argument("--dist", type=_arg_dist, required=True, help=_DIST_HELP)
    p.add_argument("--n", type=_arg_positive_int, required=True, help="number of components in the weighted sum")
    p.add_argument(
        "--dirichlet",
        type=_arg_rational_list,
        default=None,
        help="comma-separated Dirichlet concentrations (default: flat 1,...,1, the spacings case)",
    )
    p.add_argument("--max-order", type=_arg_positive_int, default=12, help="highest moment order emitted")
    _add_common(p)
    p.set_defaults(handler=_cmd_moments)

    v = sub.add_parser("verify", help="exact identity verifiers")
    vsub = v.add_subparsers(dest="claim", required=True)

    p = vsub.add_parser(
        "vandermonde-halves",
        help="rising-factorial multinomial identity with all parameters 1/2",
    )
    p.add_argument("--n", type=_arg_positive_int, required=True, help="number of parameters (all 1/2)")
    p.add_argument("--max-order", type=_arg_positive_int, default=12, help="highest order checked")
    _add_common(p)
    p.set_defaults(handler=_cmd_verify)

    p = vsub.add_parser(
        "vandermonde", help="rising-factorial multinomial identity, general parameters"
    )
    p.add_argument(
        "--params",
        type=_arg_rational_list,
        required=True,
        help="comma-separated positive rational parameters, e.g. 1/3,2/3",
    )
    p.add_argument("--max-order", type=_arg_positive_int, default=10, help="highest order checked")
    _add_common(p)
    p.set_defaults(handler=_cmd_verify)

    p = vsub.add_parser(
        "arcsin-semicircle",
        help="spacing-weighted iid arcsin sums have power-semicircle moments",
    )
    p.add_argument("--n", type=_arg_positive_int, required=True, help="number of components in the weighted sum")
    p.add_argument("--max-order", type=_arg_positive_int, default=12, help="highest order checked")
    p.add_argument(
        "--target",
        type=_arg_dist,
        default=None,
        help="compare against this law instead of psc:(n-1)/2,1 (to demonstrate failures)",
    )
    _add_common(p)
    p.set_defaults(handler=_cmd_verify)

    p = vsub.add_parser(
        "genarcsin-beta",
        help="spacing-weighted iid generalized-arcsin sums have four-parameter Beta moments",
    )
    p.add_argument("--n", type=_arg_positive_int, required=True, help="number of components in the weighted sum")
    p.add_argument("--alpha", type=_arg_rational, required=True, help="generalized-arcsin shape in (0,1)")
    p.add_argument("--max-order", type=_arg_positive_int, default=12, help="highest order checked")
    p.add_argument(
        "--target",
        type=_arg_dist,
        default=None,
        help="compare against this law instead of beta:n*alpha,n*(1-alpha),-1,2",
    )
    _add_common(p)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("recover", help="recover component moments from weighted-sum moments")
    p.add_argument("--n", type=_arg_positive_int, required=True, help="number of iid components the sums were built from")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--target", type=_arg_dist, default=None, help="law of the weighted sum; " + _DIST_HELP)
    src.add_argument(
        "--moments-file",
        default=None,
        help='JSON file {"support": [lo, hi], "moments": ["1", "1/2", ...]} with "p/q" rationals',
    )
    p.add_argument("--identify", action="store_true", help="match the recovered moments against the default catalog grid")
    p.add_argument("--max-order", type=_arg_positive_int, default=12, help="highest order recovered/compared")
    _add_common(p)
    p.set_defaults(handler=_cmd_recover)

    p = sub.add_parser("simulate", help="seeded Monte Carlo check of the exact theory")
    p.add_argument("--dist", type=_arg_dist, required=True, help=_DIST_HELP)
    p.add_argument("--n", type=_arg_positive_int, required=True, help="number of components in the weighted sum")
    p.add_argument("--samples", type=_arg_positive_int, default=10**6, help="number of simulated sums (>= 1000)")
    p.add_argument("--seed", type=_arg_seed, default=12345, help="decimal or 0x-hex 64-bit seed")
    _add_common(p)
    p.set_defaults(handler=_cmd_simulate)

    p = sub.add_parser("density-table", help="x, pdf, cdf table for plotting")
    p.add_argument("--dist", type=_arg_dist, required=True, help=_DIST_HELP)
    p.add_argument("--points", type=_arg_positive_int, default=256, help="number of grid points (midpoint rule)")
    _add_common(p)
    p.set_defaults(handler=_cmd_density_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except (ValueError, TypeError, UnsupportedOperationError, OSError, json.JSONDecodeError) as exc:
        print(f"dirmix: error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
