"""Command-line surface: single-pair reports, grid sweeps, and the class DSL.

Exit codes: 0 success, 1 check failure (including a false comparison or a
non-exact division in `eval`), 2 usage or parse error, 3 internal
inconsistency.  Diagnostics go to stderr as one JSON object per error.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import os
import sys
from dataclasses import dataclass

from .cache import load_table, save_table
from .dsl import eval_dsl
from .errors import (
    EvalError,
    InconsistentEuler,
    NonIntegralGenus,
    ParseError,
    PGError,
)
from .pairs import SCHEMA_VERSION, build_pair_report, make_pair
from .ring import LPoly
from .schubert import get_ring

CACHE_DIR_ENV = "PGPAIRS_CACHE_DIR"

CHECK_NAMES = (
    "fiber_shift",
    "cayley_balance",
    "cayley_palindromic",
    "section_shape",
    "dual_shape",
    "variable_nonneg",
    "middle_betti_link",
    "l_equivalence",
    "chi_euler_match",
    "hodge_consistency",
    "hypersurface_oracle",
)

_SAFE_INT = 2**53 - 1


@dataclass(frozen=True)
class GridRequest:
    n_min: int
    n_max: int
    k_min: int
    k_max: int
    checks: tuple
    output_format: str = "json"
    parallelism: int = 1
    cache_dir: str = ""
    engine: str = "pieri"


def _encode(obj):
    """Make a report JSON-safe: exact integers beyond the 53-bit range become
    decimal strings so nothing is rounded by downstream consumers."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > _SAFE_INT else obj
    if isinstance(obj, (list, tuple)):
        return [_encode(x) for x in obj]
    if isinstance(obj, dict):
        return {k: _encode(v) for k, v in obj.items()}
    return obj


def decode_ints(obj):
    """Inverse of the decimal-string escape for report payloads."""
    if isinstance(obj, str) and (obj.isdigit() or (obj[:1] == "-" and obj[1:].isdigit())):
        return int(obj)
    if isinstance(obj, list):
        return [decode_ints(x) for x in obj]
    if isinstance(obj, dict):
        return {k: decode_ints(v) for k, v in obj.items()}
    return obj


def _dump_json(payload) -> str:
    return json.dumps(_encode(payload), sort_keys=True, separators=(",", ":")) + "\n"


# ---------------------------------------------------------------------------
# pair command


def _filter_checks(report: dict, names) -> dict:
    if names:
        report = dict(report)
        report["checks"] = [c for c in report["checks"] if c["name"] in names]
        report["all_checks_pass"] = all(c["status"] != "fail" for c in report["checks"])
    return report


def _pair_markdown(report: dict) -> str:
    p = report["pair"]
    lines = [
        f"# Pair (n, k) = ({p['n']}, {p['k']})",
        "",
        "| quantity | value |",
        "| --- | --- |",
        f"| dim X | {p['dim_x']} |",
        f"| dim Y | {p['dim_y']} |",
        f"| twist s | {p['s']} |",
        f"| shift m | {p['m']} |",
        f"| P(X) | {report['poincare_x']} |",
        f"| P(Y) | {report['poincare_y']} |",
        f"| middle Betti b_{p['dim_x']}(X) | {report['poincare_x'][p['dim_x']]} |",
        f"| Euler characteristic | {report['euler']} |",
        f"| chi_y | {report['hodge']['chi_y']} |",
        f"| middle Hodge numbers | {report['hodge']['middle_hodge']} |",
        f"| variable Betti number | {report['variable_betti']} |",
        f"| Noether-Lefschetz status | {report['nl_status']} |",
        f"| motivic equivalence | {report['motivic_equivalence']['status']} |",
        f"| transcendental proxy | {report['motivic_equivalence']['transcendental_proxy']} |",
        "",
        "| check | status | detail |",
        "| --- | --- | --- |",
    ]
    for c in report["checks"]:
        lines.append(f"| {c['name']} | {c['status']} | {c['detail']} |")
    for f in report["findings"]:
        lines.append("")
        lines.append(f"finding: {f}")
    lines.append("")
    return "\n".join(lines)


def _flatten(prefix: str, obj, out):
    if isinstance(obj, dict):
        for k in sorted(obj):
            _flatten(f"{prefix}.{k}" if prefix else str(k), obj[k], out)
    elif isinstance(obj, (list, tuple)):
        out.append((prefix, " ".join(str(x) for x in obj)))
    else:
        out.append((prefix, str(obj)))


def _pair_csv(report: dict) -> str:
    flat = dict(report)
    flat["checks"] = {c["name"]: c["status"] for c in report["checks"]}
    rows = []
    _flatten("", flat, rows)
    body = "\n".join(f"{key},{_csv_quote(val)}" for key, val in rows)
    return "key,value\n" + body + "\n"


def _csv_quote(text: str) -> str:
    if any(ch in text for ch in ',"\n'):
        return '"' + text.replace('"', '""') + '"'
    return text


def run_pair(n: int, k: int, output_format: str = "json", engine: str = "pieri", checks=()):
    """Build and serialize one pair report; returns (text, exit_code)."""
    report = _filter_checks(build_pair_report(n, k, engine), tuple(checks))
    code = 0 if report["all_checks_pass"] else 1
    if output_format == "json":
        return _dump_json(report), code
    if output_format == "markdown":
        return _pair_markdown(report), code
    if output_format == "csv":
        return _pair_csv(report), code
    raise PGError(f"unknown format {output_format!r}")


# ---------------------------------------------------------------------------
# grid command


def _grid_row(n: int, k: int, engine: str, checks) -> dict:
    try:
        make_pair(n, k)
    except PGError as exc:
        return {"n": n, "k": k, "status": "skip", "reason": type(exc).__name__}
    try:
        report = _filter_checks(build_pair_report(n, k, engine), checks)
    except PGError as exc:
        return {
            "n": n,
            "k": k,
            "status": "error",
            "error": type(exc).__name__,
            "message": str(exc),
        }
    return {
        "n": n,
        "k": k,
        "status": "ok" if report["all_checks_pass"] else "fail",
        "dim_x": report["pair"]["dim_x"],
        "dim_y": report["pair"]["dim_y"],
        "euler": report["euler"],
        "middle_betti": report["hodge"]["middle_betti"],
        "variable_betti": report["variable_betti"],
        "nl_status": report["nl_status"],
        "motivic_equivalence": report["motivic_equivalence"]["status"],
        "checks": {c["name"]: c["status"] for c in report["checks"]},
        "findings": report["findings"],
    }


def run_grid(request: GridRequest):
    """Sweep the requested (n, k) rectangle; returns (text, exit_code).

    Rows are one per valid pair in lexicographic (n, k) order regardless of
    parallelism; failures are recorded per row and never abort the sweep.
    """
    if request.n_min > request.n_max or request.k_min > request.k_max:
        raise PGError("empty parameter ranges")
    unknown = [c for c in request.checks if c not in CHECK_NAMES]
    if unknown:
        raise PGError(f"unknown check identifiers: {', '.join(unknown)}")

    if request.cache_dir:
        for n in range(max(request.n_min, 4), request.n_max + 1):
            load_table(get_ring(n, request.engine), request.cache_dir)

    combos = [
        (n, k)
        for n in range(request.n_min, request.n_max + 1)
        for k in range(request.k_min, request.k_max + 1)
    ]
    rows = []
    if request.parallelism > 1:
        with concurrent.futures.ThreadPoolExecutor(request.parallelism) as pool:
            futures = [
                pool.submit(_grid_row, n, k, request.engine, request.checks)
                for n, k in combos
            ]
            rows = [f.result() for f in futures]  # submission order = (n,k) lex order
    else:
        rows = [_grid_row(n, k, request.engine, request.checks) for n, k in combos]

    kept = [r for r in rows if r["status"] != "skip"]
    skipped = len(rows) - len(kept)
    summary = {
        "pass": sum(1 for r in kept if r["status"] == "ok"),
        "fail": sum(1 for r in kept if r["status"] in ("fail", "error")),
        "skip": skipped,
    }
    payload = {
        "schema_version": SCHEMA_VERSION,
        "request": {
            "n_min": request.n_min,
            "n_max": request.n_max,
            "k_min": request.k_min,
            "k_max": request.k_max,
            "checks": sorted(request.checks) if request.checks else "all",
            "engine": request.engine,
        },
        "rows": kept,
        "summary": summary,
    }

    if request.cache_dir:
        for n in range(max(request.n_min, 4), request.n_max + 1):
            save_table(get_ring(n, request.engine), request.cache_dir)

    code = 0 if summary["fail"] == 0 else 1
    if request.output_format == "json":
        return _dump_json(payload), code
    if request.output_format == "markdown":
        return _grid_markdown(payload), code
    if request.output_format == "csv":
        return _grid_csv(payload), code
    raise PGError(f"unknown format {request.output_format!r}")


def _grid_markdown(payload: dict) -> str:
    lines = [
        "# Grid sweep",
        "",
        "| n | k | status | dim X | dim Y | euler | b_mid | variable | NL | motivic |",
        "| --- | --- | --- | --- | --- | --- | --- | --- | --- | --- |",
    ]
    for r in payload["rows"]:
        if r["status"] in ("skip", "error"):
            lines.append(f"| {r['n']} | {r['k']} | {r['status']} | | | | | | | |")
        else:
            lines.append(
                f"| {r['n']} | {r['k']} | {r['status']} | {r['dim_x']} | {r['dim_y']} "
                f"| {r['euler']} | {r['middle_betti']} | {r['variable_betti']} "
                f"| {r['nl_status']} | {r['motivic_equivalence']} |"
            )
    s = payload["summary"]
    lines += ["", f"pass {s['pass']}, fail {s['fail']}, skip {s['skip']}", ""]
    return "\n".join(lines)


def _grid_csv(payload: dict) -> str:
    header = "n,k,status,dim_x,dim_y,euler,middle_betti,variable_betti,nl_status,motivic_equivalence"
    lines = [header]
    for r in payload["rows"]:
        if r["status"] in ("skip", "error"):
            lines.append(f"{r['n']},{r['k']},{r['status']},,,,,,,")
        else:
            lines.append(
                f"{r['n']},{r['k']},{r['status']},{r['dim_x']},{r['dim_y']},{r['euler']},"
                f"{r['middle_betti']},{r['variable_betti']},{r['nl_status']},"
                f"{r['motivic_equivalence']}"
            )
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pgpairs",
        description="Exact invariants and consistency checks for linear sections "
        "of Gr(2,n) and their Pfaffian duals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pair = sub.add_parser("pair", help="report on a single (n, k) pair")
    pair.add_argument("--n", type=int, required=True)
    pair.add_argument("--k", type=int, required=True)
    pair.add_argument("--format", default="json", choices=("json", "markdown", "csv"))
    pair.add_argument("--engine", default="pieri", choices=("pieri", "lr"))
    pair.add_argument("--checks", default="", help="comma-separated check names")

    grid = sub.add_parser("grid", help="sweep a rectangle of pairs")
    grid.add_argument("--n-min", type=int, required=True)
    grid.add_argument("--n-max", type=int, required=True)
    grid.add_argument("--k-min", type=int, required=True)
    grid.add_argument("--k-max", type=int, required=True)
    grid.add_argument("--checks", default="", help="comma-separated check names")
    grid.add_argument("--format", default="json", choices=("json", "markdown", "csv"))
    grid.add_argument("--jobs", type=int, default=1)
    grid.add_argument("--engine", default="pieri", choices=("pieri", "lr"))
    grid.add_argument(
        "--cache-dir",
        default=os.environ.get(CACHE_DIR_ENV, ""),
        help=f"multiplication-table cache directory (default: ${CACHE_DIR_ENV})",
    )

    ev = sub.add_parser("eval", help="evaluate a class expression")
    ev.add_argument("expression")
    return parser


def _diag(exc: Exception) -> str:
    return json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n"


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0

    try:
        if args.command == "pair":
            checks = tuple(c for c in args.checks.split(",") if c)
            unknown = [c for c in checks if c not in CHECK_NAMES]
            if unknown:
                raise PGError(f"unknown check identifiers: {', '.join(unknown)}")
            text, code = run_pair(args.n, args.k, args.format, args.engine, checks)
            sys.stdout.write(text)
            return code
        if args.command == "grid":
            request = GridRequest(
                n_min=args.n_min,
                n_max=args.n_max,
                k_min=args.k_min,
                k_max=args.k_max,
                checks=tuple(c for c in args.checks.split(",") if c),
                output_format=args.format,
                parallelism=max(1, args.jobs),
                cache_dir=args.cache_dir,
                engine=args.engine,
            )
            text, code = run_grid(request)
            sys.stdout.write(text)
            return code
        # eval
        try:
            result = eval_dsl(args.expression)
        except ParseError as exc:
            sys.stderr.write(_diag(exc))
            return 2
        except EvalError as exc:
            sys.stderr.write(_diag(exc))
            return 1
        if isinstance(result, bool):
            sys.stdout.write(("true" if result else "false") + "\n")
            return 0 if result else 1
        assert isinstance(result, LPoly)
        sys.stdout.write(str(result) + "\n")
        return 0
    except (InconsistentEuler, NonIntegralGenus) as exc:
        sys.stderr.write(_diag(exc))
        return 3
    except PGError as exc:
        sys.stderr.write(_diag(exc))
        return 2


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
