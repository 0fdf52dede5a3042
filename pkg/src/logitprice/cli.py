"""Command line interface: solve, sweep, curve, verify, and fit.

Output goes to stdout (or --out), diagnostics to stderr. Exit codes:
0 success, 2 invalid parameters or arguments, 3 numerical failure,
4 I/O failure. Numbers always use the dot decimal separator and repeated
invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys

from .calibration import Observation, fit, fit_fixed_mu
from .demand import validate_params
from .errors import ConvergenceError, DomainError
from .experiments import RangeSpec, sample_curves, sweep
from .oracle import verify
from .solver import solve

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NUMERICAL = 3
EXIT_IO = 4

SWEEP_COLUMNS = [
    "case", "alpha", "theta", "mu", "p_star", "d_star", "r_star",
    "p_inf", "d_inf", "r_inf", "revenue_ratio", "price_ratio",
]
CURVE_COLUMNS = ["p", "demand", "d1", "d2", "revenue", "r1", "r2", "elasticity"]
CURVE_KINDS = {
    "demand": ["p", "demand"],
    "revenue": ["p", "revenue"],
    "elasticity": ["p", "elasticity"],
    "derivatives": ["p", "d1", "d2", "r1", "r2"],
    "all": CURVE_COLUMNS,
}

# Display formatting by semantic kind; --raw switches to full-precision repr.
_FORMATS = {
    "price": "{:.4f}",
    "demand": "{:.2f}",
    "revenue": "{:.2f}",
    "ratio": "{:.3f}",
    "residual": "{:.2e}",
    "param": "{:g}",
    "general": "{:.6g}",
}
_COLUMN_KINDS = {
    "case": "int",
    "mu": "param",
    "alpha": "param",
    "theta": "param",
    "p": "price",
    "p_star": "price",
    "p_inf": "price",
    "demand": "demand",
    "d_star": "demand",
    "d_inf": "demand",
    "revenue": "revenue",
    "r_star": "revenue",
    "r_inf": "revenue",
    "revenue_ratio": "ratio",
    "price_ratio": "ratio",
    "d1": "general",
    "d2": "general",
    "r1": "general",
    "r2": "general",
    "elasticity": "general",
    "elasticity_at_star": "general",
    "foc_residual": "residual",
}


def _fmt(value, kind: str, raw: bool) -> str:
    if kind == "int":
        return str(int(value))
    if kind == "bool":
        return "true" if value else "false"
    if kind == "str":
        return str(value)
    if raw:
        return repr(float(value))
    return _FORMATS[kind].format(float(value))


def _render_grid(columns: list[str], rows: list[list[str]], fmt: str) -> str:
    if fmt == "csv":
        lines = [",".join(columns)]
        lines.extend(",".join(row) for row in rows)
        return "\n".join(lines) + "\n"
    if fmt == "record":
        blocks = ["\n".join(f"{c}={v}" for c, v in zip(columns, row)) for row in rows]
        return "\n\n".join(blocks) + "\n"
    widths = [
        max(len(name), max((len(row[i]) for row in rows), default=0))
        for i, name in enumerate(columns)
    ]
    lines = ["  ".join(name.rjust(w) for name, w in zip(columns, widths))]
    lines.extend(
        "  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in rows
    )
    return "\n".join(lines) + "\n"


def _render_pairs(pairs: list[tuple[str, str]], fmt: str) -> str:
    if fmt == "csv":
        header = ",".join(k for k, _ in pairs)
        values = ",".join(v for _, v in pairs)
        return header + "\n" + values + "\n"
    if fmt == "record":
        return "\n".join(f"{k}={v}" for k, v in pairs) + "\n"
    width = max(len(k) for k, _ in pairs)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in pairs) + "\n"


def _solution_pairs(sol, raw: bool) -> list[tuple[str, str]]:
    return [
        ("mu", _fmt(sol.params.mu, "param", raw)),
        ("alpha", _fmt(sol.params.alpha, "param", raw)),
        ("theta", _fmt(sol.params.theta, "param", raw)),
        ("p_star", _fmt(sol.p_star, "price", raw)),
        ("d_star", _fmt(sol.d_star, "demand", raw)),
        ("r_star", _fmt(sol.r_star, "revenue", raw)),
        ("p_inf", _fmt(sol.p_inf, "price", raw)),
        ("d_inf", _fmt(sol.d_inf, "demand", raw)),
        ("r_inf", _fmt(sol.r_inf, "revenue", raw)),
        ("revenue_ratio", _fmt(sol.revenue_ratio, "ratio", raw)),
        ("price_ratio", _fmt(sol.price_ratio, "ratio", raw)),
        ("elasticity_at_star", _fmt(sol.elasticity_at_star, "general", raw)),
        ("foc_residual", _fmt(sol.foc_residual, "residual", raw)),
    ]


def _cmd_solve(args) -> tuple[str, int]:
    params = validate_params(args.mu, args.alpha, args.theta, strict=not args.allow_alpha)
    sol = solve(params)
    return _render_pairs(_solution_pairs(sol, args.raw), args.format), EXIT_OK


def _cmd_sweep(args) -> tuple[str, int]:
    alphas = _parse_list_or_range("alpha", args.alpha_list, args.alpha_range)
    thetas = _parse_list_or_range("theta", args.theta_list, args.theta_range)
    rows = sweep(alphas, thetas, args.mu, strict=not args.allow_alpha)
    cells = [
        [
            _fmt(row.case_index, "int", args.raw),
            _fmt(row.alpha, "param", args.raw),
            _fmt(row.theta, "param", args.raw),
            _fmt(row.mu, "param", args.raw),
            _fmt(row.p_star, "price", args.raw),
            _fmt(row.d_star, "demand", args.raw),
            _fmt(row.r_star, "revenue", args.raw),
            _fmt(row.p_inf, "price", args.raw),
            _fmt(row.d_inf, "demand", args.raw),
            _fmt(row.r_inf, "revenue", args.raw),
            _fmt(row.revenue_ratio, "ratio", args.raw),
            _fmt(row.price_ratio, "ratio", args.raw),
        ]
        for row in rows
    ]
    return _render_grid(SWEEP_COLUMNS, cells, args.format), EXIT_OK


def _cmd_curve(args) -> tuple[str, int]:
    params = validate_params(args.mu, args.alpha, args.theta, strict=not args.allow_alpha)
    samples = sample_curves(params, args.pmin, args.pmax, args.steps)
    columns = CURVE_KINDS[args.kind]
    cells = [
        [_fmt(getattr(row, column), _COLUMN_KINDS[column], args.raw) for column in columns]
        for row in samples
    ]
    return _render_grid(columns, cells, args.format), EXIT_OK


def _cmd_verify(args) -> tuple[str, int]:
    params = validate_params(args.mu, args.alpha, args.theta, strict=not args.allow_alpha)
    report = verify(params)
    ok = report.passed()
    pairs = [
        ("foc_gap", _fmt(report.foc_gap, "residual", args.raw)),
        ("elasticity_gap", _fmt(report.elasticity_gap, "residual", args.raw)),
        ("oracle_gap", _fmt(report.oracle_gap, "residual", args.raw)),
        ("w_identity_gap", _fmt(report.w_identity_gap, "residual", args.raw)),
        ("ratio_gap", _fmt(report.ratio_gap, "residual", args.raw)),
        ("fd_d1_gap", _fmt(report.fd_d1_gap, "residual", args.raw)),
        ("fd_d2_gap", _fmt(report.fd_d2_gap, "residual", args.raw)),
        ("unimodal", _fmt(report.unimodal, "bool", args.raw)),
        ("sign_changes", _fmt(report.sign_changes, "int", args.raw)),
        ("status", "pass" if ok else "fail"),
    ]
    return _render_pairs(pairs, args.format), EXIT_OK if ok else EXIT_NUMERICAL


def _cmd_fit(args) -> tuple[str, int]:
    observations = _read_observations(args.data)
    if args.mu is not None:
        result = fit_fixed_mu(observations, args.mu)
    else:
        result = fit(observations, mu_hi_factor=args.mu_hi_factor)
    pairs = [
        ("mu", _fmt(result.params.mu, "general", args.raw)),
        ("alpha", _fmt(result.params.alpha, "general", args.raw)),
        ("theta", _fmt(result.params.theta, "general", args.raw)),
        ("sse", _fmt(result.sse, "residual", args.raw)),
        ("n_obs", _fmt(result.n_obs, "int", args.raw)),
        ("strict", _fmt(result.strict, "bool", args.raw)),
    ]
    return _render_pairs(pairs, args.format), EXIT_OK


def _parse_list_or_range(name: str, list_text: str | None, range_text: str | None) -> RangeSpec:
    if list_text is not None:
        parts = [piece.strip() for piece in list_text.split(",")]
        if not any(parts):
            raise DomainError(f"--{name}-list must contain at least one value")
        try:
            return RangeSpec.from_values(float(piece) for piece in parts if piece)
        except ValueError as exc:
            raise DomainError(f"--{name}-list: {exc}") from None
    parts = range_text.split(":")
    if len(parts) != 3:
        raise DomainError(f"--{name}-range must look like start:end:step, got {range_text!r}")
    try:
        start, end, step = (float(piece) for piece in parts)
    except ValueError:
        raise DomainError(f"--{name}-range has a non-numeric part: {range_text!r}") from None
    return RangeSpec.from_range(start, end, step)


def _read_observations(path: str) -> list[Observation]:
    with open(path, newline="") as handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if header is None or [cell.strip().lower() for cell in header] != ["price", "quantity"]:
            raise DomainError(f"{path}: first line must be the header 'price,quantity'")
        observations = []
        for lineno, row in enumerate(reader, start=2):
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != 2:
                raise DomainError(f"{path}:{lineno}: expected two fields, got {len(row)}")
            try:
                price, quantity = float(row[0]), float(row[1])
            except ValueError:
                raise DomainError(f"{path}:{lineno}: non-numeric value") from None
            if not (math.isfinite(price) and math.isfinite(quantity)):
                raise DomainError(f"{path}:{lineno}: values must be finite")
            observations.append(Observation(price, quantity))
    return observations


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format", choices=["table", "csv", "record", "structured-record"],
        default="table", help="output format (default: table)",
    )
    parser.add_argument(
        "--raw", action="store_true",
        help="emit full-precision values instead of display rounding",
    )
    parser.add_argument(
        "--allow-alpha", action="store_true",
        help="relax the alpha < -2 requirement to alpha < 0",
    )
    parser.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")


def _add_params(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--mu", type=float, required=True, help="market size, > 0")
    parser.add_argument("--alpha", type=float, required=True, help="utility offset, < -2")
    parser.add_argument("--theta", type=float, required=True, help="price sensitivity, > 0")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="logitprice",
        description="Closed-form revenue-maximizing pricing under logit demand.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve one parameter set")
    _add_params(p_solve)
    _add_common(p_solve)
    p_solve.set_defaults(func=_cmd_solve)

    p_sweep = sub.add_parser("sweep", help="solve a grid of parameter sets")
    p_sweep.add_argument("--mu", type=float, required=True, help="market size, > 0")
    alpha_group = p_sweep.add_mutually_exclusive_group(required=True)
    alpha_group.add_argument("--alpha-list", metavar="A1,A2,...", help="comma-separated alphas")
    alpha_group.add_argument("--alpha-range", metavar="START:END:STEP", help="inclusive alpha range")
    theta_group = p_sweep.add_mutually_exclusive_group(required=True)
    theta_group.add_argument("--theta-list", metavar="T1,T2,...", help="comma-separated thetas")
    theta_group.add_argument("--theta-range", metavar="START:END:STEP", help="inclusive theta range")
    _add_common(p_sweep)
    p_sweep.set_defaults(func=_cmd_sweep)

    p_curve = sub.add_parser("curve", help="sample demand/revenue curves")
    _add_params(p_curve)
    p_curve.add_argument("--pmin", type=float, default=0.0, help="lowest price (default 0)")
    p_curve.add_argument("--pmax", type=float, required=True, help="highest price")
    p_curve.add_argument("--steps", type=int, default=201, help="number of samples (default 201)")
    p_curve.add_argument(
        "--kind", choices=sorted(CURVE_KINDS), default="all",
        help="which columns to emit (default: all)",
    )
    _add_common(p_curve)
    p_curve.set_defaults(func=_cmd_curve)

    p_verify = sub.add_parser("verify", help="cross-check the closed form against oracles")
    _add_params(p_verify)
    _add_common(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    p_fit = sub.add_parser("fit", help="calibrate parameters from a price,quantity csv")
    p_fit.add_argument("--data", required=True, metavar="PATH", help="csv file with header price,quantity")
    p_fit.add_argument("--mu", type=float, default=None, help="known market size (omit to search)")
    p_fit.add_argument(
        "--mu-hi-factor", type=float, default=100.0,
        help="upper search bracket as a multiple of the largest quantity (default 100)",
    )
    _add_common(p_fit)
    p_fit.set_defaults(func=_cmd_fit)
    return parser


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", newline="") as handle:
            handle.write(text)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.format == "structured-record":
        args.format = "record"
    try:
        text, code = args.func(args)
        _emit(text, args.out)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return code


if __name__ == "__main__":
    sys.exit(main())
