"""Regenerate the bundled catalogs and oracle golden files with GAP.

This is the only place an external computer-algebra system is used.  The
outputs are committed, so the package and its tests never need GAP.

    python scripts/export_catalog.py --gap "python -m sage.interfaces.gap"

The GAP command must have the SmallGroups library available.
"""

import argparse
import json
import shlex
import subprocess
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "src" / "cdlat" / "data"
GOLDEN = ROOT / "tests" / "data"

BUNDLES = {
    "orders_1_32": list(range(1, 33)),
    "order_64": [64],
    "order_81": [81],
    "order_243": [243],
}


def run_gap(gap_cmd, orders, outdir):
    script = (
        f"ORDERS := {orders};\n"
        f'OUTDIR := "{outdir}";\n'
        f'Read("{ROOT / "scripts" / "oracle_export.g"}");\n'
    )
    with tempfile.NamedTemporaryFile("w", suffix=".g", delete=False) as fh:
        fh.write(script)
    subprocess.run(shlex.split(gap_cmd) + ["-q", fh.name],
                   stdin=subprocess.DEVNULL, check=True)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--gap", default="gap", help="command that starts GAP")
    ap.add_argument("--only", nargs="*", choices=sorted(BUNDLES))
    args = ap.parse_args()

    DATA.mkdir(parents=True, exist_ok=True)
    GOLDEN.mkdir(parents=True, exist_ok=True)
    for bundle in args.only or sorted(BUNDLES):
        orders = BUNDLES[bundle]
        with tempfile.TemporaryDirectory() as tmp:
            run_gap(args.gap, orders, tmp)
            tmp = Path(tmp)
            lines = [
                "# Permutation generators exported from the GAP SmallGroups library.",
                "# Entry ids are SmallGroup ids; names are GAP StructureDescription.",
                "# Regenerate with scripts/export_catalog.py.",
            ]
            golden = []
            for n in orders:
                records = [json.loads(r) for r in
                           (tmp / f"golden_{n}.jsonl").read_text().splitlines() if r]
                lines.append(f"# order {n} count {len(records)}")
                golden.extend(records)
            lines.append("")
            for n in orders:
                lines.append((tmp / f"catalog_{n}.txt").read_text().rstrip("\n"))
                lines.append("")
        (DATA / f"{bundle}.txt").write_text("\n".join(lines))
        (GOLDEN / f"golden_{bundle}.json").write_text(
            json.dumps(golden, indent=1, sort_keys=True) + "\n")
        print(f"{bundle}: {len(golden)} groups")


if __name__ == "__main__":
    main()
