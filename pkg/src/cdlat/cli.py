"""Command line entry point: ``cdlat <command> ...``.

Exit codes: 0 success or verdict holds, 1 verdict fails, 2 operational error.
"""

from __future__ import annotations

import argparse
import logging
import re
import sys
from pathlib import Path

from .catalog import (
    Catalog,
    bundled_for_orders,
    format_catalog,
    load_catalog,
    parse_catalog,
    write_report,
)
from .cd import cd_lattice
from .errors import CDLatError
from .families import build_family, parse_family
from .graph import hasse_dot
from .group import Group
from .subgroups import enumerate_subgroups
from .verify import THEOREMS, sweep, venn_cells, verify

log = logging.getLogger("cdlat")

_RANGE = re.compile(r"^(.*?)(\d+)\.\.(\d+)(.*)$")


def _load_catalogs(paths, orders=()) -> Catalog:
    if not paths:
        return bundled_for_orders(orders)
    cat = Catalog([])
    for p in paths:
        cat = cat.merged(load_catalog(p))
    return cat


def resolve_group(text: str, catalog_paths=()) -> Group:
    """Family notation, or ``sg <order> <id>`` for a catalog entry."""
    toks = text.split()
    if toks and toks[0].lower() == "sg":
        if len(toks) != 3:
            raise CDLatError(f"expected 'sg <order> <id>', got {text!r}")
        order, gid = int(toks[1]), int(toks[2])
        cat = _load_catalogs(catalog_paths, [order])
        try:
            return cat.get(order, gid).build()
        except KeyError as exc:
            raise CDLatError(str(exc)) from None
    g = build_family(parse_family(text))
    return g


def expand_specs(specs) -> list[str]:
    """Expand ``c 2..30`` style ranges into one spec per value."""
    out = []
    for s in specs:
        m = _RANGE.match(s)
        if m:
            lo, hi = int(m.group(2)), int(m.group(3))
            out += [f"{m.group(1)}{v}{m.group(4)}" for v in range(lo, hi + 1)]
        else:
            out.append(s)
    return out


def cmd_measure(args) -> int:
    g = resolve_group(" ".join(args.spec), args.catalog)
    rep = cd_lattice(g, enumerate_subgroups(g))
    print(f"group: {g.name}")
    print(f"order: {g.order}")
    print(f"total subgroups: {rep.total_subgroups}")
    print(f"m*: {rep.m_star}")
    print(f"|CD|: {rep.cd_size}")
    print(f"delta: {rep.delta}")
    return 0


def cmd_delta_table(args) -> int:
    rows = [("group", "order", "subgroups", "m*", "delta")]
    for spec in expand_specs(args.specs):
        try:
            g = resolve_group(spec, args.catalog)
            rep = cd_lattice(g, enumerate_subgroups(g))
            rows.append((spec, str(g.order), str(rep.total_subgroups), str(rep.m_star),
                         str(rep.delta)))
        except CDLatError as exc:
            rows.append((spec, "-", "-", "-", f"error: {exc}"))
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    for r in rows:
        print("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return 0


def cmd_sweep_conditions(args) -> int:
    cat = _load_catalogs(args.catalog, [args.order])
    cat.require_complete([args.order])
    records = sweep(cat.of_order(args.order), jobs=args.jobs)
    with open(args.out, "w", encoding="utf-8") as fh:
        write_report(records, fh)
    passing = [(r["id"], r["iso_name"]) for r in records
               if r.get("cond1") and r.get("cond2") and r.get("cond3")]
    print(f"order {args.order}: {len(records)} groups")
    for cell, count in venn_cells(records).items():
        print(f"  cond1/cond2/cond3 = {cell}: {count}")
    print(f"pass all three: {len(passing)}")
    for gid, iso in passing:
        print(f"  ({args.order},{gid}) {iso or '?'}")
    failed = [r for r in records if "error" in r]
    for r in failed:
        print(f"  error ({r['order']},{r['id']}): {r['error']}")
    return 0


def cmd_verify(args) -> int:
    if args.theorem == "up":
        orders = [args.p ** (args.k + 1)]
    else:
        orders = range(1, args.max_order + 1)
    cat = _load_catalogs(args.catalog, orders)
    verdict = verify(args.theorem, cat, args.max_order, p=args.p, k=args.k, jobs=args.jobs)
    print(verdict.summary())
    return 0 if verdict.holds else 1


def cmd_graph(args) -> int:
    g = resolve_group(" ".join(args.spec), args.catalog)
    lat = enumerate_subgroups(g)
    dot = hasse_dot(g, lat, cd_lattice(g, lat), name=g.name)
    Path(args.out).write_text(dot, encoding="utf-8")
    print(f"wrote {args.out}: {len(lat)} nodes")
    return 0


def cmd_catalog(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        cat = parse_catalog(fh)
    sys.stdout.write(format_catalog(cat))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cdlat", description="Chermak-Delgado lattice tools")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def catalog_opt(p):
        p.add_argument("--catalog", action="append", default=[],
                       help="catalog file (repeatable); defaults to the bundled catalogs")

    p = sub.add_parser("measure", help="CD summary for one group")
    p.add_argument("spec", nargs="+", help="e.g. 's 3', 'q 8', 'm 3 3', 'sg 32 17'")
    catalog_opt(p)
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("delta-table", help="delta table for several groups")
    p.add_argument("specs", nargs="+", help="quoted specs; 'c 2..30' expands to a range")
    catalog_opt(p)
    p.set_defaults(func=cmd_delta_table)

    p = sub.add_parser("sweep-conditions", help="conditions 1-3 over every group of an order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--jobs", type=int, default=1)
    catalog_opt(p)
    p.set_defaults(func=cmd_sweep_conditions)

    p = sub.add_parser("verify", help="check a theorem over a complete catalog")
    p.add_argument("theorem", choices=THEOREMS)
    p.add_argument("--max-order", type=int, default=32)
    p.add_argument("--p", type=int, default=2, help="prime for 'up'")
    p.add_argument("--k", type=int, default=5, help="'up' checks order p^(k+1)")
    p.add_argument("--jobs", type=int, default=1)
    catalog_opt(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("graph", help="DOT Hasse diagram with CD members marked")
    p.add_argument("spec", nargs="+")
    p.add_argument("--out", required=True)
    catalog_opt(p)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("catalog", help="parse, validate and echo a catalog file")
    p.add_argument("file")
    p.set_defaults(func=cmd_catalog)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (CDLatError, OSError, ValueError) as exc:
        print(f"cdlat: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
