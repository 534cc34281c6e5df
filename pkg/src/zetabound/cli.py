"""Command-line front end.

Subcommands: eval, table1, table2, table3, scan, figures, constants.
Row data goes to stdout as an aligned table (values at 4 decimals), CSV
(full 17-significant-digit floats, metadata in a leading JSON comment
line), or a single JSON document; re-parsing the machine-readable output
and rounding to 4 decimals reproduces table mode exactly.  Key columns
(t, t0, p) are printed in %g form in table mode so that inputs like 1e300
stay readable.

Exit status: 0 success / bound holds, 1 bound violated on the grid,
2 usage or domain error, 3 resource or convergence error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field

import numpy as np

from . import expsum, rs_bounds, verifier, zeta_eval
from .errors import ConvergenceError, CrossingNotFound, ResourceBudgetError

__all__ = ["OutputRecord", "build_parser", "main", "run"]

SCHEMA_VERSION = "1"

_KEY_COLUMNS = ("t", "t0", "p", "name")
_TABLE2_T0 = tuple(10.0**k for k in range(1, 11))
_FIGURES = ("c0", "c1-sigma0", "c1-sigma1", "zeta-vs-affine", "ratio")
_FIGURE_GRID_POINTS = 1001
_FIGURE_T_LO = math.e
_FIGURE_T_HI = 500.0


@dataclass
class OutputRecord:
    """One command's output: metadata plus uniform key/value rows."""

    command: str
    inputs: dict[str, str]
    rows: list[dict[str, object]]
    schema_version: str = SCHEMA_VERSION

    def metadata(self) -> dict[str, object]:
        return {
            "schema_version": self.schema_version,
            "command": self.command,
            "inputs": self.inputs,
        }


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def _fmt_table(key: str, value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:g}" if key in _KEY_COLUMNS else f"{value:.4f}"
    return str(value)


def _fmt_csv(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def render_table(record: OutputRecord) -> str:
    if not record.rows:
        return "(no rows)\n"
    headers = list(record.rows[0].keys())
    cells = [[_fmt_table(h, row.get(h)) for h in headers] for row in record.rows]
    widths = [max(len(h), *(len(c[i]) for c in cells)) for i, h in enumerate(headers)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(headers, widths))]
    for row_cells in cells:
        lines.append("  ".join(c.rjust(w) for c, w in zip(row_cells, widths)))
    return "\n".join(lines) + "\n"


def render_csv(record: OutputRecord) -> str:
    lines = ["# " + json.dumps(record.metadata(), sort_keys=True)]
    if record.rows:
        headers = list(record.rows[0].keys())
        lines.append(",".join(headers))
        for row in record.rows:
            lines.append(",".join(_fmt_csv(row.get(h)) for h in headers))
    return "\n".join(lines) + "\n"


def render_json(record: OutputRecord) -> str:
    doc = record.metadata()
    doc["rows"] = record.rows
    return json.dumps(doc, indent=2) + "\n"


_RENDERERS = {"table": render_table, "csv": render_csv, "json": render_json}


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_eval(t: float, r: float) -> OutputRecord:
    if not t > 0.0:
        raise ValueError(f"--t must be positive, got {t}")
    if not r > 0.0:
        raise ValueError(f"--r must be positive, got {r}")
    n = zeta_eval.choose_N(t, r)
    cert = zeta_eval.eval_zeta_certified(t, n)
    row = {
        "t": t,
        "real": cert.value.real,
        "imag": cert.value.imag,
        "modulus": cert.modulus,
        "err": cert.err,
        "n_terms": n,
    }
    return OutputRecord("eval", {"t": repr(t), "r": repr(r)}, [row])


def cmd_table1(t0_list: list[float] | None) -> OutputRecord:
    t0s = sorted(t0_list) if t0_list else list(expsum.TABLE_T0)
    offending = [t0 for t0 in t0s if not t0 >= 2000.0]
    if offending:
        raise ValueError(f"table1 requires t0 >= 2000; offending values: {offending}")
    rows = []
    for t0 in t0s:
        p = expsum.optimal_bound_params(t0)
        rows.append({"t0": t0, "beta": p.beta, "v": p.v, "u": p.u})
    return OutputRecord("table1", {"t0": ",".join(repr(x) for x in t0s)}, rows)


def cmd_table2(t0_list: list[float] | None) -> OutputRecord:
    t0s = sorted(t0_list) if t0_list else list(_TABLE2_T0)
    offending = [t0 for t0 in t0s if not t0 >= 1.0]
    if offending:
        raise ValueError(f"table2 requires t0 >= 1; offending values: {offending}")
    rows = [{"t0": t0, "C": rs_bounds.affine_C(t0).C} for t0 in t0s]
    return OutputRecord("table2", {"t0": ",".join(repr(x) for x in t0s)}, rows)


def cmd_table3(t0_list: list[float] | None) -> OutputRecord:
    t0s = sorted(t0_list) if t0_list else list(expsum.TABLE_T0)
    offending = [t0 for t0 in t0s if not t0 >= math.e]
    if offending:
        raise ValueError(f"table3 requires t0 >= e; offending values: {offending}")
    rows = []
    for t0 in t0s:
        v = expsum.optimal_bound_params(t0).v if t0 >= 2000.0 else None
        rows.append({"t0": t0, "v": v, "v_tilde": rs_bounds.affine_C(t0).v_tilde})
    return OutputRecord("table3", {"t0": ",".join(repr(x) for x in t0s)}, rows)


def _parse_bound(spec: str) -> tuple[float, float]:
    kind, _, rest = spec.partition(":")
    try:
        if kind == "vlog":
            return float(rest), 0.0
        if kind == "affine":
            slope_s, intercept_s = rest.split(",")
            return float(slope_s), float(intercept_s)
    except ValueError as exc:
        raise ValueError(f"malformed bound spec {spec!r}") from exc
    raise ValueError(f"unknown bound kind {kind!r}; use vlog:<v> or affine:<slope>,<intercept>")


def cmd_scan(
    lo: float, hi: float, h: float, r: float, bound_spec: str | None,
    budget: float, workers: int,
) -> tuple[OutputRecord, int]:
    config = verifier.ScanConfig(t_lo=lo, t_hi=hi, h=h, r=r)
    bound = _parse_bound(bound_spec) if bound_spec else None
    report = verifier.scan_interval(config, bound=bound, budget=budget, workers=workers)
    if bound is not None:
        slope, intercept = bound
        margin = slope * np.log(report.t) + intercept - (report.modulus + report.err)
    else:
        margin = None
    rows: list[dict[str, object]] = []
    for k in range(len(report.t)):
        rows.append(
            {
                "t": float(report.t[k]),
                "modulus": float(report.modulus[k]),
                "err": float(report.err[k]),
                "ratio": float(report.ratio[k]),
                "margin": float(margin[k]) if margin is not None else None,
            }
        )
    inputs = {
        "lo": repr(lo), "hi": repr(hi), "h": repr(h), "r": repr(r),
        "bound": bound_spec or "", "budget": repr(budget),
    }
    status = 0
    if bound is not None and report.min_margin is not None and report.min_margin < 0.0:
        status = 1
    return OutputRecord("scan", inputs, rows), status


def cmd_figures(name: str, budget: float, workers: int) -> OutputRecord:
    if name not in _FIGURES:
        raise ValueError(f"unknown figure {name!r}; choose from {', '.join(_FIGURES)}")
    rows: list[dict[str, object]] = []
    if name in ("c0", "c1-sigma0", "c1-sigma1"):
        for k in range(_FIGURE_GRID_POINTS):
            p = k / (_FIGURE_GRID_POINTS - 1)
            if name == "c0":
                y = abs(rs_bounds.c0(p))
            else:
                y = abs(rs_bounds.c1(p, 0 if name.endswith("0") else 1))
            rows.append({"p": p, "y": y})
    else:
        config = verifier.ScanConfig(t_lo=_FIGURE_T_LO, t_hi=_FIGURE_T_HI)
        report = verifier.scan_interval(config, budget=budget, workers=workers)
        for k in range(len(report.t)):
            t = float(report.t[k])
            if name == "zeta-vs-affine":
                rows.append(
                    {
                        "t": t,
                        "modulus": float(report.modulus[k]),
                        "affine_bound": 0.5 * math.log(t) + rs_bounds.AFFINE_INTERCEPT,
                    }
                )
            else:
                rows.append({"t": t, "ratio": float(report.ratio[k])})
    return OutputRecord("figures", {"name": name}, rows)


def cmd_constants() -> OutputRecord:
    a = expsum.asymptotic_constants()
    k = rs_bounds.computed_constants()
    rows = [
        {"name": "e0_squared", "value": a.e0sq},
        {"name": "lambda1", "value": a.lambda1},
        {"name": "lambda2", "value": a.lambda2},
        {"name": "beta_limit", "value": a.beta_limit},
        {"name": "h_C_min", "value": a.hC_min},
        {"name": "b0", "value": k.b0},
        {"name": "b1_sigma0", "value": k.b1_sigma0},
        {"name": "b1_sigma1", "value": k.b1_sigma1},
        {"name": "c_sigma0", "value": k.c_sigma0},
        {"name": "c_sigma1", "value": k.c_sigma1},
        {"name": "gamma_minus_half_log_2pi", "value": rs_bounds.GAMMA_MINUS_HALF_LOG_2PI},
    ]
    return OutputRecord("constants", {}, rows)


# ---------------------------------------------------------------------------
# argument parsing and dispatch
# ---------------------------------------------------------------------------


def _add_output_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # the same two options live on the main parser and on every subparser so
    # they are accepted on either side of the subcommand; the subparser
    # copies suppress their defaults so an absent flag keeps the outer value
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument(
        "--format", choices=("table", "csv", "json"), default=default,
        help="output format (default: table; csv for scan/figures)",
    )
    parser.add_argument("--out", default=default,
                        help="write output to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zetabound",
        description="Certified zeta(1+it) evaluation, bound tables, and grid verification.",
    )
    _add_output_options(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate zeta(1+it) with a certified radius")
    _add_output_options(p, suppress=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--r", type=float, default=1e-8, help="target error radius")

    for name, helptext in (
        ("table1", "optimal (beta, v, u) per t0; default grid 1e5..1e300"),
        ("table2", "affine intercepts C per t0; default grid 1e1..1e10"),
        ("table3", "slopes v and v_tilde per t0; default grid as table1"),
    ):
        p = sub.add_parser(name, help=helptext)
        _add_output_options(p, suppress=True)
        p.add_argument("--t0", type=float, action="append", default=None,
                       help="t0 value (repeatable); omit for the default grid")

    p = sub.add_parser("scan", help="certified grid scan, optionally checking a bound")
    _add_output_options(p, suppress=True)
    p.add_argument("--lo", type=float, required=True)
    p.add_argument("--hi", type=float, required=True)
    p.add_argument("--h", type=float, default=0.01, help="grid spacing")
    p.add_argument("--r", type=float, default=0.005, help="certification radius per point")
    p.add_argument("--bound", default=None, help="vlog:<v> or affine:<slope>,<intercept>")
    p.add_argument("--budget", type=float, default=verifier.DEFAULT_BUDGET,
                   help="nominal summed-term budget")
    p.add_argument("--workers", type=int, default=1, help="parallel scan processes")

    p = sub.add_parser("figures", help="emit a figure dataset as rows")
    _add_output_options(p, suppress=True)
    p.add_argument("name", help=f"one of: {', '.join(_FIGURES)}")
    p.add_argument("--budget", type=float, default=verifier.DEFAULT_BUDGET)
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("constants", help="print every derived constant")
    _add_output_options(p, suppress=True)
    return parser


def _dispatch(args: argparse.Namespace) -> tuple[OutputRecord, int]:
    if args.command == "eval":
        return cmd_eval(args.t, args.r), 0
    if args.command == "table1":
        return cmd_table1(args.t0), 0
    if args.command == "table2":
        return cmd_table2(args.t0), 0
    if args.command == "table3":
        return cmd_table3(args.t0), 0
    if args.command == "scan":
        return cmd_scan(args.lo, args.hi, args.h, args.r, args.bound,
                        args.budget, args.workers)
    if args.command == "figures":
        return cmd_figures(args.name, args.budget, args.workers), 0
    if args.command == "constants":
        return cmd_constants(), 0
    raise ValueError(f"unknown command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        record, status = _dispatch(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ConvergenceError, ResourceBudgetError, CrossingNotFound) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    fmt = args.format
    if fmt is None:
        fmt = "csv" if args.command in ("scan", "figures") else "table"
    text = _RENDERERS[fmt](record)
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return status


def run() -> None:
    sys.exit(main())
