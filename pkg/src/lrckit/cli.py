"""Batch command-line interface.

Subcommands: `bounds` (length-bound tables), `construct` (emit codes as
JSON), `verify` (certify a code file), `geometry` (plane enumeration and
family search).  Payload goes to stdout, diagnostics to stderr.

Exit codes: 0 success / verified optimal; 1 well-formed input that is not
optimal or fails the intersection condition; 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import geometry
from .bounds import TSV_COLUMNS, bounds_report
from .code import DEFAULT_BUDGET, LinearCode
from .construct import certify_optimal, family_to_code, sunflower_code
from .errors import (BudgetExceededError, ConditionNotSatisfiedError,
                     LrcError, SearchLimitExceededError)
from .gf import build_field, field_with_order

CODE_FORMAT_VERSION = 1


def _err(msg: str) -> None:
    print(f"lrckit: {msg}", file=sys.stderr)


def _emit(text: str, out_path: str | None) -> None:
    if out_path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# ---------------------------------------------------------------------------
# Code file (format_version 1)
# ---------------------------------------------------------------------------

def code_to_json(code: LinearCode, r: int, delta: int, k_claimed: int,
                 provenance: str) -> dict:
    return {
        "format_version": CODE_FORMAT_VERSION,
        "field": code.gf.to_json(),
        "n": code.n,
        "k_claimed": k_claimed,
        "r": r,
        "delta": delta,
        "H": [[int(x) for x in row] for row in code.H],
        "provenance": provenance,
    }


def load_code_json(doc: dict):
    if doc.get("format_version") != CODE_FORMAT_VERSION:
        raise ValueError(f"unsupported format_version {doc.get('format_version')!r}")
    fld = doc["field"]
    gf = build_field(int(fld["p"]), int(fld["m"]),
                     tuple(fld["modulus"]) if fld.get("modulus") else None)
    h_rows = doc["H"]
    n = int(doc["n"])
    if any(len(row) != n for row in h_rows):
        raise ValueError("H row lengths disagree with n")
    code = LinearCode(gf, np.array(h_rows, dtype=np.int64))
    return code, int(doc["r"]), int(doc["delta"])


def load_family_json(doc: dict) -> geometry.LineFamily:
    fld = doc["field"]
    gf = build_field(int(fld["p"]), int(fld["m"]),
                     tuple(fld["modulus"]) if fld.get("modulus") else None)
    plane = geometry.projective_plane(gf)
    return geometry.LineFamily(plane, [tuple(l) for l in doc["lines"]])


def family_to_json(family: geometry.LineFamily, **extra) -> dict:
    doc = {
        "field": family.plane.gf.to_json(),
        "lines": [list(l) for l in family.lines],
    }
    doc.update(extra)
    return doc


def _read_json(path: str | None) -> dict:
    if path in (None, "-"):
        return json.load(sys.stdin)
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def _cmd_bounds(args) -> int:
    qs = _int_list(args.q)
    rs = _int_list(args.r)
    deltas = _int_list(args.delta)
    ds = _int_list(args.d)
    if not args.grid and max(len(qs), len(rs), len(deltas), len(ds)) > 1:
        _err("comma lists need --grid")
        return 2
    rows = []
    for q in qs:
        for r in rs:
            for delta in deltas:
                for d in ds:
                    try:
                        rows.append(bounds_report(q, r, delta, d))
                    except (ValueError, LrcError) as exc:
                        if args.grid:
                            _err(f"skipping q={q} r={r} delta={delta} d={d}: {exc}")
                        else:
                            raise
    if not rows:
        raise ValueError("no valid parameter points")
    if args.format == "table":
        sys.stdout.write("\n".join(rep.to_table() for rep in rows) + "\n")
    else:
        sys.stdout.write("\t".join(TSV_COLUMNS) + "\n")
        sys.stdout.write("".join(rep.to_tsv_row() + "\n" for rep in rows))
    return 0


def _int_list(text: str) -> list[int]:
    return [int(tok) for tok in str(text).split(",") if tok != ""]


def _cmd_construct(args) -> int:
    if args.kind == "sunflower":
        gf = field_with_order(args.q)
        code = sunflower_code(gf, args.delta)
        provenance = f"sunflower q={args.q} delta={args.delta}"
        k_claimed = 2 * args.q - 1
    else:  # from-lines
        family = load_family_json(_read_json(args.lines))
        code = family_to_code(family, args.delta)
        provenance = (f"from-lines q={family.plane.q} delta={args.delta} "
                      f"ell={family.size}")
        k_claimed = 2 * family.size - 3
    doc = code_to_json(code, r=2, delta=args.delta, k_claimed=k_claimed,
                       provenance=provenance)
    _emit(_dump_json(doc), args.out)
    return 0


def _cmd_verify(args) -> int:
    code, r, delta = load_code_json(_read_json(args.infile))
    cert = certify_optimal(code, r, delta, budget=args.budget)
    sys.stdout.write(_dump_json(cert.to_json_dict(include_timing=not args.no_timing)))
    return 0 if cert.optimal else 1


def _cmd_geometry(args) -> int:
    gf = field_with_order(args.q)
    plane = geometry.projective_plane(gf)
    if args.what == "enumerate":
        doc = {
            "field": gf.to_json(),
            "points": [list(p) for p in plane.points],
            "lines": [list(l) for l in plane.lines],
        }
        sys.stdout.write(_dump_json(doc))
        return 0

    if args.what == "sunflower":
        family = geometry.sunflower_family(gf)
        extra = {"center": [1, 0, 0]}
    else:  # search
        try:
            family = geometry.search_max_family(gf, args.delta, mode=args.mode,
                                                node_limit=args.limit)
        except SearchLimitExceededError as exc:
            _err(f"{exc}; emitting best-found family")
            family = exc.best
            _emit_family(family, args, mode=args.mode, complete=False)
            return 1
        extra = {"mode": args.mode, "delta": args.delta}
    _emit_family(family, args, **extra)
    return 0


def _emit_family(family, args, **extra) -> None:
    if getattr(args, "incidence", False):
        grid = geometry.incidence_matrix(family)
        sys.stdout.write("\n".join("".join(str(int(x)) for x in row)
                                   for row in grid) + "\n")
    else:
        doc = family_to_json(family, size=family.size,
                             t=list(geometry.intersection_counts(family)),
                             **extra)
        sys.stdout.write(_dump_json(doc))


# ---------------------------------------------------------------------------
# Parser / entry point
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lrckit",
        description="Optimal (r, delta) locally repairable codes: "
                    "bounds, constructions, verification, plane geometry.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_bounds = sub.add_parser("bounds", help="evaluate length bounds")
    p_bounds.add_argument("--q", required=True)
    p_bounds.add_argument("--r", required=True)
    p_bounds.add_argument("--delta", required=True)
    p_bounds.add_argument("--d", required=True)
    p_bounds.add_argument("--grid", action="store_true",
                          help="sweep comma-separated parameter lists")
    p_bounds.add_argument("--format", choices=("tsv", "table"), default="tsv")
    p_bounds.set_defaults(func=_cmd_bounds)

    p_con = sub.add_parser("construct", help="emit a code file")
    con_sub = p_con.add_subparsers(dest="kind", required=True)
    p_sun = con_sub.add_parser("sunflower", help="pencil construction")
    p_sun.add_argument("--q", type=int, required=True)
    p_sun.add_argument("--delta", type=int, required=True)
    p_sun.add_argument("--out", default=None)
    p_lines = con_sub.add_parser("from-lines", help="build from a line family")
    p_lines.add_argument("--lines", required=True,
                         help="family JSON file ('-' for stdin)")
    p_lines.add_argument("--delta", type=int, required=True)
    p_lines.add_argument("--out", default=None)
    p_con.set_defaults(func=_cmd_construct)

    p_ver = sub.add_parser("verify", help="certify a code file")
    p_ver.add_argument("--in", dest="infile", default=None,
                       help="code JSON file ('-' or omitted for stdin)")
    p_ver.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p_ver.add_argument("--no-timing", action="store_true",
                       help="suppress stage_times_ms for byte-stable output")
    p_ver.set_defaults(func=_cmd_verify)

    p_geo = sub.add_parser("geometry", help="projective plane tools")
    geo_sub = p_geo.add_subparsers(dest="what", required=True)
    g_enum = geo_sub.add_parser("enumerate", help="all points and lines")
    g_enum.add_argument("--q", type=int, required=True)
    g_sun = geo_sub.add_parser("sunflower", help="the pencil through (1,0,0)")
    g_sun.add_argument("--q", type=int, required=True)
    g_sun.add_argument("--incidence", action="store_true",
                       help="print the 0/1 incidence grid instead of JSON")
    g_search = geo_sub.add_parser("search", help="largest qualifying family")
    g_search.add_argument("--q", type=int, required=True)
    g_search.add_argument("--delta", type=int, required=True)
    g_search.add_argument("--mode", choices=("exhaustive", "greedy"),
                          default="exhaustive")
    g_search.add_argument("--limit", type=int, default=None)
    g_search.add_argument("--incidence", action="store_true")
    p_geo.set_defaults(func=_cmd_geometry)
    return parser


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except ConditionNotSatisfiedError as exc:
        _err(str(exc))
        return 1
    except BudgetExceededError as exc:
        _err(f"{exc}; re-run with a larger --budget")
        return 2
    except (LrcError, ValueError, KeyError, OSError,
            json.JSONDecodeError) as exc:
        _err(str(exc))
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
