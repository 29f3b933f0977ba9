"""Reproduce the headline numbers: delta table, condition sweeps, theorem checks.

    python scripts/reproduce.py                 # everything except order 243
    python scripts/reproduce.py --with-243      # adds the order-243 sweep (~1-2 min)
    python scripts/reproduce.py --out results/  # also writes JSON sweep reports
"""

import argparse
import time
from dataclasses import dataclass, field
from pathlib import Path

from cdlat.catalog import bundled_for_orders, write_report
from cdlat.cd import cd_report
from cdlat.families import build_family, parse_family
from cdlat.verify import sweep, venn_cells, verify


@dataclass
class Config:
    table: list = field(default_factory=lambda: [
        "s 3", "q 8", "q 16", "q 32", "q 64", "d 8", "m 3 3", "es 5", "q 8 x c 3", "q 8 x c 5",
        "c 2 x c 2", "c 8", "c 27", "c 125", "c 16", "c 81", "c 625",
    ])
    sweep_orders: tuple = (32,)
    theorems: tuple = ("nil", "s3", "lt5")
    max_order: int = 32
    jobs: int = 1
    out: Path | None = None


def delta_table(cfg):
    print(f"{'group':<12}{'order':>6}{'subgroups':>11}{'m*':>8}{'|CD|':>6}{'delta':>7}")
    for spec in cfg.table:
        g = build_family(parse_family(spec))
        r = cd_report(g)
        print(f"{spec:<12}{g.order:>6}{r.total_subgroups:>11}{r.m_star:>8}{r.cd_size:>6}{r.delta:>7}")


def sweeps(cfg):
    for n in cfg.sweep_orders:
        t0 = time.perf_counter()
        records = sweep(bundled_for_orders([n]).of_order(n), jobs=cfg.jobs)
        passing = [(r["id"], r["iso_name"]) for r in records if r["cond1"] and r["cond2"] and r["cond3"]]
        print(f"\norder {n}: {len(records)} groups, {time.perf_counter() - t0:.1f}s")
        print(f"  cells (cond1 cond2 cond3): {venn_cells(records)}")
        print(f"  pass all: {passing}")
        if cfg.out:
            cfg.out.mkdir(parents=True, exist_ok=True)
            with open(cfg.out / f"sweep_{n}.json", "w", encoding="utf-8") as fh:
                write_report(records, fh)


def theorems(cfg):
    cat = bundled_for_orders(range(1, cfg.max_order + 1))
    for name in cfg.theorems:
        print()
        print(verify(name, cat, cfg.max_order, jobs=cfg.jobs).summary())


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--with-243", action="store_true")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", type=Path)
    args = ap.parse_args()
    cfg = Config(jobs=args.jobs, out=args.out)
    if args.with_243:
        cfg.sweep_orders = (32, 243)
    delta_table(cfg)
    sweeps(cfg)
    theorems(cfg)


if __name__ == "__main__":
    main()
