"""Command-line front end: ``hassepaths {table,verify,series,young,index,distribution}``.

Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 size cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import closedforms, order, series
from .paths import CLASSES, get_class
from .young import parse_partition, young_edges, young_report

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

# row label -> class, in the order of the published edge table
TABLE_ROWS = [("F", "FF"), ("GF", "GF"), ("D", "DD"), ("GD", "GD"),
              ("M", "MM"), ("GM", "GM"), ("S", "SS"), ("GS", "GS")]
ROUTES = ("enum", "series", "formula", "order")
DEFAULT_ROUTES = ("enum", "series", "formula")

_CATEGORY_LABELS = {
    "boolean": "Boolean",
    "asymptotically_boolean": "asymptotically Boolean",
    "asymptotically_quasi_boolean": "asymptotically quasi-Boolean",
    "not_quasi_boolean": "not quasi-Boolean",
}


class UsageError(Exception):
    pass


def _class_arg(text: str) -> str:
    try:
        return get_class(text).name
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown class {text!r}; choose from {', '.join(CLASSES)}")


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected n >= 0, got {v}")
    return v


def _fmt(v) -> str:
    if isinstance(v, Fraction) and v.denominator == 1:
        return str(v.numerator)
    return str(v)


# --- table --------------------------------------------------------------------

def render_table(max_n: int, fmt: str = "text") -> str:
    cols = list(range(max_n + 1))
    rows = [(label, [closedforms.edge_count_formula(cls, n) for n in cols]) for label, cls in TABLE_ROWS]
    if fmt == "json":
        return json.dumps(
            [{"row": label, "class": cls, "values": [str(v) for v in vals]}
             for (label, vals), (_, cls) in zip(rows, TABLE_ROWS)],
            indent=2,
        )
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n"] + cols)
        for label, vals in rows:
            w.writerow([label] + vals)
        return buf.getvalue().rstrip("\n")
    grid = [["n"] + [str(n) for n in cols]] + [[label] + [str(v) for v in vals] for label, vals in rows]
    widths = [max(len(r[i]) for r in grid) for i in range(len(grid[0]))]
    lines = []
    for r in grid:
        lines.append(" ".join([r[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(r[1:], widths[1:])]))
    return "\n".join(lines)


def cmd_table(args) -> int:
    print(render_table(args.max_n, args.format))
    return EXIT_OK


# --- verify -------------------------------------------------------------------

def _route_value(route: str, cls: str, n: int, force: bool):
    if route == "enum":
        dsum, nsum = order.delta_nabla_totals(cls, n, force=force)
        if dsum != nsum:
            return None, f"sum|Delta| = {dsum} but sum|Nabla| = {nsum}"
        return dsum, None
    if route == "series":
        closed = series.coefficient(series.edge_series_closed(cls, n), n)
        via = series.coefficient(series.edge_series_via_delta(cls, n), n)
        if closed != via:
            return None, f"closed edge series gives {_fmt(closed)} but the Delta route gives {_fmt(via)}"
        return closed, None
    if route == "formula":
        return closedforms.edge_count_formula(cls, n), None
    if route == "order":
        return len(order.covers_by_order(cls, n, force=force)), None
    raise ValueError(route)


def cmd_verify(args) -> int:
    if args.target == "all":
        classes = list(CLASSES)
    else:
        try:
            classes = [get_class(args.target).name]
        except ValueError as exc:
            raise UsageError(str(exc))
    routes = [r.strip() for r in args.routes.split(",") if r.strip()]
    bad = [r for r in routes if r not in ROUTES]
    if bad or not routes:
        raise UsageError(f"unknown route(s) {bad}; choose from {','.join(ROUTES)}")
    # fail fast on caps before doing any work
    for cls in classes:
        for r in routes:
            if r in ("enum", "order"):
                order.check_cap(cls, args.max_n, r, force=args.force)

    print(" ".join(["class", "n"] + routes + ["status"]))
    for cls in classes:
        for n in range(args.max_n + 1):
            values, problem = [], None
            for r in routes:
                try:
                    v, note = _route_value(r, cls, n, args.force)
                except closedforms.IdentityMismatch as exc:
                    v, note = None, str(exc)
                values.append(v)
                problem = problem or (note and f"{r}: {note}")
            if problem is None and len({Fraction(v) for v in values}) > 1:
                problem = ", ".join(f"{r}={_fmt(v)}" for r, v in zip(routes, values))
            status = "ok" if problem is None else "MISMATCH"
            print(" ".join([cls, str(n)] + ["?" if v is None else _fmt(v) for v in values] + [status]))
            if problem is not None:
                print(f"mismatch at class {cls}, n = {n}: {problem}", file=sys.stderr)
                return EXIT_MISMATCH
    print(f"all routes agree for {len(classes)} class(es), n = 0..{args.max_n}")
    return EXIT_OK


# --- series -------------------------------------------------------------------

def cmd_series(args) -> int:
    name, order_ = args.name, args.N
    if name.startswith("base:"):
        key = name[5:]
        if key not in series.BASE_SERIES:
            raise UsageError(f"unknown base series {key!r}; choose from {', '.join(series.BASE_SERIES)}")
        s = series.base_series(key, order_)
    elif name in ("edge", "edge-via-delta", "delta"):
        if args.cls is None:
            raise UsageError(f"series {name} needs --class")
        if name == "edge":
            s = series.edge_series_closed(args.cls, order_)
        elif name == "edge-via-delta":
            s = series.edge_series_via_delta(args.cls, order_)
        else:
            s = series.catalog_delta_series(args.cls, order_)
    else:
        raise UsageError(f"unknown series {name!r}; choose edge, edge-via-delta, delta or base:B|C|T|M|d|r")
    print(series.format_series(s, args.format))
    return EXIT_OK


# --- young --------------------------------------------------------------------

def cmd_young(args) -> int:
    try:
        lam = parse_partition(args.partition)
    except ValueError as exc:
        raise UsageError(str(exc))
    print(young_report(lam) if args.full else young_edges(lam))
    return EXIT_OK


# --- index --------------------------------------------------------------------

def cmd_index(args) -> int:
    if args.n < 1:
        raise UsageError("the Hasse index needs n >= 1")
    idx = closedforms.hasse_index_exact(args.cls, args.n)
    rep = closedforms.classification_report(args.cls)
    label = _CATEGORY_LABELS[rep.category]
    print(f"{_fmt(idx)} ({label})")
    if args.asymptotic:
        est = closedforms.asymptotic_estimate(f"index_{args.cls}", args.n)
        print(f"index form: {rep.index_form}")
        print(f"slope: {rep.slope:.6f}")
        print(f"c: {rep.c:.6f}")
        print(f"tamed: {str(rep.tamed).lower()}")
        print(f"estimate at n = {args.n}: {est:.6f} (exact/estimate = {float(idx) / est:.6f})")
    return EXIT_OK


# --- distribution ---------------------------------------------------------------

def cmd_distribution(args) -> int:
    dpoly, npoly = order.distribution_enum(args.cls, args.n, force=args.force)
    if args.format == "json":
        print(json.dumps({"class": args.cls, "n": args.n, "delta": str(dpoly), "nabla": str(npoly)}))
    else:
        print(f"delta: {dpoly}")
        print(f"nabla: {npoly}")
    return EXIT_OK


# --- wiring -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hassepaths", description="Edge counts of lattices of paths and Young lattices.")
    sub = p.add_subparsers(dest="verb", required=True, metavar="{table,verify,series,young,index,distribution}")

    t = sub.add_parser("table", help="edge table for all eight families (closed forms)")
    t.add_argument("--max-n", type=_nonneg, default=10)
    t.add_argument("--format", choices=("text", "csv", "json"), default="text")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="cross-check edge counts between routes")
    v.add_argument("target", nargs="?", default="all", help="class name or 'all'")
    v.add_argument("--max-n", type=_nonneg, default=6)
    v.add_argument("--routes", default=",".join(DEFAULT_ROUTES), help=f"comma-separated subset of {','.join(ROUTES)}")
    v.add_argument("--force", action="store_true", help="ignore the size caps")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("series", help="dump series coefficients")
    s.add_argument("name", help="edge, edge-via-delta, delta or base:B|C|T|M|d|r")
    s.add_argument("--class", dest="cls", type=_class_arg)
    s.add_argument("-N", type=_nonneg, default=series.DEFAULT_ORDER)
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_series)

    y = sub.add_parser("young", help="edges of the Young lattice of a partition")
    y.add_argument("--partition", required=True, help='e.g. "12,10,10,8"')
    y.add_argument("--full", action="store_true", help="JSON report")
    y.set_defaults(func=cmd_young)

    i = sub.add_parser("index", help="exact Hasse index and classification")
    i.add_argument("--class", dest="cls", type=_class_arg, required=True)
    i.add_argument("-n", type=_nonneg, required=True)
    i.add_argument("--asymptotic", action="store_true")
    i.set_defaults(func=cmd_index)

    d = sub.add_parser("distribution", help="cover-count polynomials by enumeration")
    d.add_argument("--class", dest="cls", type=_class_arg, required=True)
    d.add_argument("-n", type=_nonneg, required=True)
    d.add_argument("--format", choices=("text", "json"), default="text")
    d.add_argument("--force", action="store_true")
    d.set_defaults(func=cmd_distribution)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"hassepaths {args.verb}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except order.CapExceeded as exc:
        print(f"hassepaths {args.verb}: cap exceeded: {exc} (use --force or {order.MAX_CELLS_ENV})", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
