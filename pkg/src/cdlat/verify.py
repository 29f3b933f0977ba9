"""Per-group analysis records, condition sweeps and theorem checks."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from .catalog import Catalog, CatalogEntry
from .cd import cd_lattice, run_conditions
from .errors import CDLatError
from .families import FamilySpec, build_family, parse_family
from .group import Group, induced_group
from .iso import is_isomorphic
from .subgroups import (
    enumerate_subgroups,
    is_nilpotent,
    is_p_group,
    prime_factors,
    subgroups_of_order,
)

log = logging.getLogger(__name__)

THEOREMS = ("nil", "s3", "lt5", "up")


@lru_cache(maxsize=None)
def family_group(spec: str) -> Group:
    return build_family(parse_family(spec))


def named_candidates(n: int) -> list[str]:
    """Family notations worth trying when naming a group of order n."""
    out = [f"c {n}"]
    ps = prime_factors(n)
    if len(ps) == 1:
        p = ps[0]
        k = next(j for j in range(1, 64) if p ** j == n)
        if k >= 2:
            out.append(f"c {n // p} x c {p}")
        if k >= 3 and not (p == 2 and k == 3):
            out.append(f"m {p} {k}")
        if p == 2 and k >= 3:
            out += [f"d {n}", f"q {n}"]
        if k == 2:
            out.append(f"c {p} x c {p}")
    else:
        if n % 2 == 0 and n >= 6:
            out.append(f"d {n}")
        if n == 6:
            out.append("s 3")
        if n == 24:
            out.append("s 4")
        if n % 8 == 0 and len(prime_factors(n // 8)) == 1 and n // 8 % 2:
            out.append(f"q 8 x c {n // 8}")
    return list(dict.fromkeys(out))


def identify(g: Group, candidates=None) -> str | None:
    for spec in candidates if candidates is not None else named_candidates(g.order):
        if family_group(spec).order == g.order and is_isomorphic(g, family_group(spec)):
            return spec
    return None


def analyze(g: Group, order=None, id=None, name=None, conditions: bool = True) -> dict:
    """The report record for one group (see catalog.REPORT_KEYS)."""
    lat = enumerate_subgroups(g)
    rep = cd_lattice(g, lat)
    rec = {
        "order": g.order if order is None else order,
        "id": id,
        "name": name if name is not None else g.name,
        "delta": rep.delta,
        "m_star": rep.m_star,
        "cd_size": rep.cd_size,
        "total_subgroups": rep.total_subgroups,
        "nilpotent": is_nilpotent(g, lat),
        "cond1": None,
        "cond2": None,
        "cond3": None,
        "iso_name": identify(g),
    }
    if conditions and g.order > 1 and is_p_group(g):
        p = prime_factors(g.order)[0]
        c = run_conditions(g, p, (order, id), lat=lat, report=rep)
        rec.update(cond1=c.cond1, cond2=c.cond2, cond3=c.cond3)
    return rec


def analyze_entry(entry: CatalogEntry) -> dict:
    try:
        return analyze(entry.build(), entry.order, entry.id, entry.name)
    except CDLatError as exc:
        rec = {k: None for k in ("delta", "m_star", "cd_size", "total_subgroups", "nilpotent",
                                 "cond1", "cond2", "cond3", "iso_name")}
        rec.update(order=entry.order, id=entry.id, name=entry.name,
                   error=f"{type(exc).__name__}: {exc}")
        return rec


def sweep(entries, jobs: int = 1) -> list[dict]:
    """Analyze entries, in parallel when ``jobs > 1``; sorted by (order, id)."""
    entries = list(entries)
    if jobs > 1 and len(entries) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            out = list(pool.map(analyze_entry, entries, chunksize=1))
    else:
        out = []
        for e in entries:
            log.debug("analyzing %s", e.key)
            out.append(analyze_entry(e))
    return sorted(out, key=lambda r: (r["order"], r["id"]))


def venn_cells(records) -> dict[str, int]:
    """Counts per condition pattern, keyed like ``'110'`` for cond1, cond2, not cond3."""
    cells: dict[str, int] = {}
    for r in records:
        if r.get("cond1") is None:
            continue
        key = "".join("1" if r[c] else "0" for c in ("cond1", "cond2", "cond3"))
        cells[key] = cells.get(key, 0) + 1
    return dict(sorted(cells.items()))


# -- theorem checks -------------------------------------------------------


@dataclass
class TheoremVerdict:
    theorem: str
    scope: list
    holds: bool
    counterexamples: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    witnesses: dict = field(default_factory=dict)

    def summary(self) -> str:
        lines = [
            f"theorem: {self.theorem}",
            f"orders examined: {_ranges(self.scope)}",
            f"holds: {'yes' if self.holds else 'no'}",
        ]
        if self.counterexamples:
            lines.append("counterexamples: " + ", ".join(f"({o},{i})" for o, i in self.counterexamples))
        lines += [f"note: {n}" for n in self.notes]
        return "\n".join(lines)


def _ranges(orders):
    orders = sorted(orders)
    parts, i = [], 0
    while i < len(orders):
        j = i
        while j + 1 < len(orders) and orders[j + 1] == orders[j] + 1:
            j += 1
        parts.append(str(orders[i]) if i == j else f"{orders[i]}-{orders[j]}")
        i = j + 1
    return ", ".join(parts) or "none"


def _verdict(theorem, scope, bad, notes=(), witnesses=None):
    bad = sorted(set(bad))
    return TheoremVerdict(theorem, sorted(scope), not bad, bad, list(notes), witnesses or {})


def _is_pq(n):
    ps = prime_factors(n)
    return len(ps) == 2 and ps[0] * ps[1] == n


def _is_prime_power(n, k):
    ps = prime_factors(n)
    return len(ps) == 1 and ps[0] ** k == n


def verify_nil(records) -> TheoremVerdict:
    bad = [(r["order"], r["id"]) for r in records if r["delta"] < 5 and not r["nilpotent"]]
    return _verdict("nil", {r["order"] for r in records}, bad)


def verify_s3(records, groups) -> TheoremVerdict:
    s3 = family_group("s 3")
    bad, found = [], []
    for r in records:
        if not r["nilpotent"] and r["delta"] == 5:
            key = (r["order"], r["id"])
            (found if is_isomorphic(groups[key], s3) else bad).append(key)
    notes = [f"non-nilpotent groups with delta 5 isomorphic to S3: {found}"]
    return _verdict("s3", {r["order"] for r in records}, bad, notes, {"s3": found})


def verify_lt5(records, groups) -> TheoremVerdict:
    klein, m27 = family_group("c 2 x c 2"), family_group("m 3 3")
    bad, d3, d4 = [], [], []
    for r in records:
        key = (r["order"], r["id"])
        g = groups[key]
        n = r["order"]
        cyc = is_isomorphic(g, family_group(f"c {n}"))
        shape3 = cyc and (_is_pq(n) or _is_prime_power(n, 3))
        shape4 = (cyc and _is_prime_power(n, 4)) or (n == 4 and is_isomorphic(g, klein)) \
            or (n == 27 and is_isomorphic(g, m27))
        if r["delta"] == 3:
            d3.append(key)
        if r["delta"] == 4:
            d4.append(key)
        if (r["delta"] == 3) != shape3 or (r["delta"] == 4) != shape4:
            bad.append(key)
    notes = [f"delta 3: {d3}", f"delta 4: {d4}"]
    return _verdict("lt5", {r["order"] for r in records}, bad, notes,
                    {"delta3": d3, "delta4": d4})


def _maximal_subgroups_p(lat, p):
    return subgroups_of_order(lat, lat.parent.order // p)


def verify_up(entries, p: int, k: int) -> TheoremVerdict:
    """Check the maximal-subgroup classification at order p^(k+1).

    Groups with at most p+1 subgroups of order p whose maximal subgroups
    are all C_{p^k}, C_{p^(k-1)} x C_p or M_{p^k} must be exactly
    C_{p^(k+1)}, C_{p^k} x C_p and M_{p^(k+1)}.
    """
    n = p ** (k + 1)
    allowed = [family_group(f"c {p ** k}"), family_group(f"c {p ** (k - 1)} x c {p}"),
               family_group(f"m {p} {k}")]
    targets = [family_group(f"c {n}"), family_group(f"c {p ** k} x c {p}"),
               family_group(f"m {p} {k + 1}")]
    passing, bad = [], []
    for e in entries:
        g = e.build()
        lat = enumerate_subgroups(g)
        if len(subgroups_of_order(lat, p)) > p + 1:
            hyp = False
        else:
            hyp = True
            for m in _maximal_subgroups_p(lat, p):
                sub, _ = induced_group(g, m.members)
                if not any(is_isomorphic(sub, a) for a in allowed):
                    hyp = False
                    break
        is_target = any(is_isomorphic(g, t) for t in targets)
        if hyp:
            passing.append(e.key)
        if hyp != is_target:
            bad.append(e.key)
    regime = "k > 4" if k > 4 else "k <= 4 (below the k > 4 hypothesis)"
    notes = [
        f"p={p}, k={k}, order {n}; hypothesis regime: {regime}",
        f"conclusion read as C_{{p^(k+1)}}, C_{{p^k}} x C_p, M_{{p^(k+1)}}; "
        f"the abelian member is tested as C{p ** k} x C{p}, not C{p ** (k - 1)} x C{p}",
        f"groups satisfying the hypothesis: {passing}",
    ]
    return _verdict("up", [n], bad, notes, {"hypothesis": passing})


def verify(theorem: str, catalog: Catalog, max_order: int, p: int = 2, k: int = 5,
           jobs: int = 1) -> TheoremVerdict:
    """Run one theorem check over every catalog group up to ``max_order``.

    Refuses (IncompleteCatalog) when any order in scope is missing groups.
    """
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}")
    if theorem == "up":
        n = p ** (k + 1)
        catalog.require_complete([n])
        return verify_up(catalog.of_order(n), p, k)
    scope = list(range(1, max_order + 1))
    catalog.require_complete(scope)
    entries = [e for e in catalog if e.order <= max_order]
    records = sweep(entries, jobs=jobs)
    errors = [r for r in records if "error" in r]
    if errors:
        raise CDLatError(f"analysis failed for {[(r['order'], r['id']) for r in errors]}")
    if theorem == "nil":
        return verify_nil(records)
    groups = {e.key: e.build() for e in entries}
    if theorem == "s3":
        return verify_s3(records, groups)
    return verify_lt5(records, groups)


__all__ = [
    "TheoremVerdict", "analyze", "analyze_entry", "sweep", "venn_cells", "verify",
    "identify", "named_candidates", "FamilySpec",
]
