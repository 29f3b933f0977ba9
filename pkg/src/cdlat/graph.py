"""Hasse diagrams of subgroup lattices in DOT format."""

from __future__ import annotations

from .cd import CDReport
from .group import Group
from .subgroups import SubgroupLattice


def covers(lat: SubgroupLattice) -> list[tuple[int, int]]:
    """Cover pairs (i, j): lat.all[i] < lat.all[j] with nothing in between."""
    subs = lat.all
    edges = []
    for j, k in enumerate(subs):
        below = [i for i in range(j) if subs[i] < k]
        for i in below:
            h = subs[i]
            if not any(h < subs[m] for m in below if m != i and subs[m].order > h.order):
                edges.append((i, j))
    return sorted(edges)


def hasse_dot(g: Group, lat: SubgroupLattice, report: CDReport, name: str | None = None) -> str:
    """Subgroup lattice with CD members drawn as filled double circles."""
    title = (name or g.name or "G").replace('"', "'")
    lines = [
        "graph subgroups {",
        f'  label="{title}";',
        "  rankdir=BT;",
        "  node [shape=circle];",
    ]
    for i, h in enumerate(lat.all):
        attrs = [f'label="{h.order}"', f"order={h.order}"]
        if h in report:
            attrs += ["cd=true", "peripheries=2", "style=filled", "fillcolor=lightgrey"]
        lines.append(f"  n{i} [{', '.join(attrs)}];")
    for i, j in covers(lat):
        lines.append(f"  n{i} -- n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
