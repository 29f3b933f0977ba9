"""Chermak-Delgado measure, lattice and delta, plus the p-group conditions.

All arithmetic is on exact integers.  ``cd_lattice`` checks the lattice
properties of its result before returning it, so a bug in enumeration shows
up as ``CDClosureViolation`` instead of a silently wrong count.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import CDClosureViolation, NotACDMember, NotAPGroup, NotNested
from .group import Group, bits_to_indices, indices_to_bits, induced_group
from .subgroups import (
    Subgroup,
    SubgroupLattice,
    center,
    centralizer_bits,
    enumerate_subgroups,
    is_p_group,
    join,
    subgroups_of_order,
)


@dataclass
class CDReport:
    m_star: int
    members: list
    delta: int
    total_subgroups: int
    measures: dict = field(repr=False)

    @property
    def cd_size(self) -> int:
        return len(self.members)

    def __contains__(self, h: Subgroup) -> bool:
        return self.measures.get(h) == self.m_star


@dataclass(frozen=True)
class ConditionsReport:
    group_id: object
    cond1: bool
    cond2: bool
    cond3: bool

    @property
    def all(self) -> bool:
        return self.cond1 and self.cond2 and self.cond3


def cd_measure(g: Group, h: Subgroup, gens=None) -> int:
    """|h| * |C_g(h)|."""
    elems = h.elements() if gens is None else gens
    return h.order * centralizer_bits(g, elems).bit_count()


def _measures(g: Group, lat: SubgroupLattice) -> dict:
    return {h: cd_measure(g, h, lat.generators(h)) for h in lat.all}


def max_cd_measure(g: Group, lat: SubgroupLattice) -> int:
    return max(_measures(g, lat).values())


def cd_lattice(g: Group, lat: SubgroupLattice) -> CDReport:
    measures = _measures(g, lat)
    m_star = max(measures.values())
    members = [h for h in lat.all if measures[h] == m_star]
    report = CDReport(m_star, members, len(lat) - len(members), len(lat), measures)
    _check_report(g, report)
    return report


def _check_report(g: Group, report: CDReport) -> None:
    z = g.center_bits
    bits = {h.members for h in report.members}
    for h in report.members:
        if z & ~h.members:
            raise CDClosureViolation(f"CD member of order {h.order} misses the center")
    ms = report.members
    for i, h in enumerate(ms):
        for k in ms[i + 1:]:
            if h.members & k.members not in bits:
                raise CDClosureViolation("CD members not closed under intersection")
            if h <= k or k <= h:
                continue
            if join(g, h, k).members not in bits:
                raise CDClosureViolation("CD members not closed under join")


def cd_report(g: Group) -> CDReport:
    return cd_lattice(g, enumerate_subgroups(g))


def delta_cd(g: Group) -> int:
    return cd_report(g).delta


def interval(lat: SubgroupLattice, lo: Subgroup, hi: Subgroup) -> list[Subgroup]:
    """Subgroups J with lo <= J <= hi."""
    if not lo <= hi:
        raise NotNested("lower bound is not contained in the upper bound")
    return [j for j in lat.all if lo <= j <= hi]


def check_interval_lemma(g: Group, h: Subgroup, lat: SubgroupLattice | None = None,
                         report: CDReport | None = None) -> bool:
    """CD(h), computed on h alone, equals [[Z(h):h]] intersected with CD(g)."""
    lat = lat or enumerate_subgroups(g)
    report = report or cd_lattice(g, lat)
    if h not in report:
        raise NotACDMember(f"subgroup of order {h.order} is not in CD(G)")
    sub, idx = induced_group(g, h.members)
    sub_report = cd_report(sub)

    def lift(s: Subgroup) -> int:
        return indices_to_bits(idx[bits_to_indices(s.members, sub.order)])

    from_h = {lift(s) for s in sub_report.members}
    zh = Subgroup(lift(center(sub)), g.order)
    from_g = {j.members for j in report.members if zh <= j <= h}
    return from_h == from_g


# -- conditions on p-groups -----------------------------------------------


def _require_p_group(g: Group, p: int) -> None:
    if not is_p_group(g, p):
        raise NotAPGroup(f"order {g.order} is not a power of {p}")


def condition1(lat: SubgroupLattice, p: int) -> bool:
    """At most 4 subgroups of order p."""
    _require_p_group(lat.parent, p)
    return len(subgroups_of_order(lat, p)) <= 4


def condition2(g: Group, lat: SubgroupLattice, p: int) -> bool:
    """Some central Z of order p is missed by few subgroups of order >= p^2.

    The allowance is 0 subgroups for odd p and 1 for p = 2.
    """
    _require_p_group(g, p)
    bound = 1 if p == 2 else 0
    z = g.center_bits
    candidates = [c for c in subgroups_of_order(lat, p) if c.members & ~z == 0]
    big = [h for h in lat.all if h.order >= p * p]
    for c in candidates:
        missing = sum(1 for h in big if c.members & ~h.members)
        if missing <= bound:
            return True
    return False


def condition3(g: Group, lat: SubgroupLattice, p: int, report: CDReport | None = None,
               small: bool = True) -> bool:
    """G is in CD(G) and at most one center-containing subgroup is outside it.

    Only groups of order at least p^3 are constrained; smaller groups return
    ``small`` (True reads the condition as vacuous; the sweep passes False).
    """
    _require_p_group(g, p)
    if g.order < p ** 3:
        return small
    report = report or cd_lattice(g, lat)
    if lat.whole not in report:
        return False
    z = g.center_bits
    outside = sum(1 for h in lat.all if z & ~h.members == 0 and h not in report)
    return outside <= 1


def run_conditions(g: Group, p: int, group_id=None, lat: SubgroupLattice | None = None,
                   report: CDReport | None = None) -> ConditionsReport:
    """All three conditions on one shared lattice, sweep semantics for cond3."""
    _require_p_group(g, p)
    lat = lat or enumerate_subgroups(g)
    return ConditionsReport(
        group_id,
        condition1(lat, p),
        condition2(g, lat, p),
        condition3(g, lat, p, report=report, small=False),
    )
