"""Command line front end.

Subcommands::

    chowdeg segre <spec>
    chowdeg check <src-spec> <dst-spec> --degree <d>
    chowdeg family <sb|quadric|involution> --max-n <k>
    chowdeg witt-bound <d>
    chowdeg verify [--suite <name> ...]

``--format json|csv|text`` and ``--output <path>`` are accepted before or
after the subcommand. Exit codes: 0 success, 2 usage/parse/model error,
3 degree formula violated, 4 internal invariant failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from importlib import resources

from .arith import INFINITY, v2
from .chern import segre_number, sq_class
from .degree_formula import MorphismDatum, check_degree_formula
from .errors import ChowdegError, InvariantViolation
from .incompressibility import Family, family_report, witt_index_bound
from .varspec import build, canonical, parse_variety_spec
from .verify import SUITES, run_suites

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VIOLATION = 3
EXIT_INVARIANT = 4

SAFE_INT = 2 ** 53


def load_schema(command: str) -> dict:
    """JSON schema for ``--format json`` output of a subcommand."""
    path = resources.files("chowdeg") / "schemas" / f"{command}.schema.json"
    return json.loads(path.read_text(encoding="utf-8"))


def jnum(x):
    """JSON-safe integer: decimal string once it no longer fits a double exactly."""
    if x is None:
        return None
    if x is INFINITY:
        return "inf"
    return x if -SAFE_INT < x < SAFE_INT else str(x)


# --- report builders -------------------------------------------------------

def segre_report(spec_text: str) -> dict:
    ast = parse_variety_spec(spec_text)
    X = build(ast)
    s = segre_number(X)
    cls = sq_class(X)
    return {
        "spec": canonical(ast),
        "dim": X.dim,
        "segre_number": s,
        "v2": v2(s),
        "index": X.index if X.index is not None else "unknown",
        "index_two_adic": X.index_two_adic if X.index_two_adic is not None else "unknown",
        "sq_class": {
            "variables": list(X.ring.names),
            "coefficients": {",".join(map(str, m)): c for m, c in cls.sorted_terms()},
        },
    }


def check_report(source: str, target: str, degree: int) -> dict:
    src_ast, dst_ast = parse_variety_spec(source), parse_variety_spec(target)
    verdict = check_degree_formula(MorphismDatum(build(src_ast), build(dst_ast), degree))
    return {
        "source": canonical(src_ast),
        "target": canonical(dst_ast),
        "degree": degree,
        "applicable": verdict.applicable,
        "holds": verdict.holds,
        "reason": verdict.reason,
        "lhs_mod2": verdict.lhs_mod2,
        "rhs_mod2": verdict.rhs_mod2,
        "n_ratio": verdict.n_ratio,
        "sY_over_nY": verdict.sY_over_nY,
        "sX_over_nX": verdict.sX_over_nX,
        "segre_source": verdict.segre_source,
        "segre_target": verdict.segre_target,
    }


FAMILY_COLUMNS = ["n", "dim", "segre", "v2_segre", "v2_index", "conclusion", "closed_form_match"]


def family_rows(family: str, n_max: int) -> list[dict]:
    return [
        {"n": r.n, "dim": r.dim, "segre": r.segre, "v2_segre": r.v2_segre, "v2_index": r.v2_index,
         "conclusion": r.conclusion.value, "closed_form_match": r.closed_form_match}
        for r in family_report(family, n_max)
    ]


# --- rendering -------------------------------------------------------------

def _json_value(v):
    if isinstance(v, dict):
        return {k: _json_value(x) for k, x in v.items()}
    if isinstance(v, list):
        return [_json_value(x) for x in v]
    if isinstance(v, bool) or isinstance(v, str):
        return v
    if isinstance(v, int) or v is INFINITY:
        return jnum(v)
    return v


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render(payload, fmt: str, columns=None) -> str:
    """Render a dict (one record) or a list of dicts (a table)."""
    rows = payload if isinstance(payload, list) else [payload]
    if fmt == "json":
        return json.dumps(_json_value(payload), indent=2) + "\n"
    if columns is None:
        columns = [k for k, v in rows[0].items() if not isinstance(v, dict)] if rows else []
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_cell(row[c]) for c in columns])
        return buf.getvalue()
    if isinstance(payload, list):
        widths = [max([len(c)] + [len(_cell(r[c])) for r in rows]) for c in columns]
        lines = ["  ".join(c.rjust(w) for c, w in zip(columns, widths))]
        for r in rows:
            lines.append("  ".join(_cell(r[c]).rjust(w) for c, w in zip(columns, widths)))
        return "\n".join(lines) + "\n"
    lines = []
    for k, v in payload.items():
        if isinstance(v, dict) and "coefficients" in v:
            names = v["variables"]
            terms = " ".join(f"[{k2}]={c}" for k2, c in v["coefficients"].items())
            lines.append(f"{k} ({','.join(names) or '-'}): {terms}")
        else:
            lines.append(f"{k}: {_cell(v)}")
    return "\n".join(lines) + "\n"


# --- argument parsing ------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "text"], default=argparse.SUPPRESS)
    common.add_argument("--output", default=argparse.SUPPRESS, help="write here instead of stdout")

    parser = argparse.ArgumentParser(
        prog="chowdeg", description="Segre numbers, mod-2 degree formula checks and "
                                    "2-incompressibility certificates.")
    parser.add_argument("--format", choices=["json", "csv", "text"], default="text")
    parser.add_argument("--output", default=None, help="write here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("segre", parents=[common], help="Segre number of a variety spec")
    p.add_argument("spec")

    p = sub.add_parser("check", parents=[common], help="check the degree formula for a morphism")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--degree", type=int, required=True)

    p = sub.add_parser("family", parents=[common], help="certificates for a variety family")
    p.add_argument("family", choices=[f.value for f in Family])
    p.add_argument("--max-n", type=int, required=True, dest="max_n")

    p = sub.add_parser("witt-bound", parents=[common], help="bound on the first Witt index")
    p.add_argument("d", type=int)

    p = sub.add_parser("verify", parents=[common], help="run the invariant suites")
    p.add_argument("--suite", action="append", dest="suites",
                   help=f"suite to run (repeatable); one of {', '.join(SUITES)}")
    return parser


def _run(args) -> tuple[str, int]:
    fmt = args.format
    if args.command == "segre":
        return render(segre_report(args.spec), fmt), EXIT_OK
    if args.command == "check":
        report = check_report(args.source, args.target, args.degree)
        code = EXIT_VIOLATION if report["applicable"] and not report["holds"] else EXIT_OK
        return render(report, fmt), code
    if args.command == "family":
        if args.max_n < 1:
            raise ChowdegError("--max-n must be at least 1")
        return render(family_rows(args.family, args.max_n), fmt, FAMILY_COLUMNS), EXIT_OK
    if args.command == "witt-bound":
        d = args.d
        if d < 3:
            raise ChowdegError("witt-bound needs d >= 3")
        return render({"d": d, "bound": witt_index_bound(d)}, fmt), EXIT_OK
    # verify
    names = args.suites
    if names is not None and (not names or any(not n for n in names)):
        raise ChowdegError("empty suite selection")
    if names is not None:
        unknown = [n for n in names if n not in SUITES]
        if unknown:
            raise ChowdegError(f"unknown suite(s): {', '.join(unknown)}")
    results = run_suites(names)
    failed = [r for r in results if not r.passed]
    if fmt == "text":
        lines = [f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.checks} checks)" for r in results]
        for r in failed:
            lines += [f"  {r.name}: {msg}" for msg in r.failures[:5]]
        lines.append(f"{len(results) - len(failed)} passed, {len(failed)} failed")
        out = "\n".join(lines) + "\n"
    else:
        rows = [{"suite": r.name, "checks": r.checks, "failures": len(r.failures), "passed": r.passed}
                for r in results]
        if fmt == "json":
            out = render({"suites": rows, "passed": len(results) - len(failed),
                          "failed": len(failed)}, fmt)
        else:
            out = render(rows, fmt)
    return out, EXIT_INVARIANT if failed else EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, code = _run(args)
    except InvariantViolation as exc:
        print(f"chowdeg: internal invariant failure: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except ChowdegError as exc:
        print(f"chowdeg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
