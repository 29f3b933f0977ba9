"""Subgroup lattice enumeration and the structural predicates built on it.

Subgroups are bitsets (Python ints) over the parent's element indices.
Closure uses Dimino-style coset extension; enumeration starts from the
cyclic subgroups and joins every known subgroup with every cyclic subgroup
until nothing new appears.  Every subgroup is a join of cyclic subgroups,
so the fixpoint is the whole lattice.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import log2

import numpy as np

from .errors import LatticeTooLarge
from .group import Group, bits_to_indices, mask_to_bits

DEFAULT_MAX_SUBGROUPS = 100_000


@dataclass(frozen=True)
class Subgroup:
    members: int
    parent_order: int

    @property
    def order(self) -> int:
        return self.members.bit_count()

    def __contains__(self, x: int) -> bool:
        return bool(self.members >> x & 1)

    def __le__(self, other: "Subgroup") -> bool:
        return self.members & ~other.members == 0

    def __lt__(self, other: "Subgroup") -> bool:
        return self <= other and self.members != other.members

    def __and__(self, other: "Subgroup") -> "Subgroup":
        return Subgroup(self.members & other.members, self.parent_order)

    def elements(self) -> np.ndarray:
        return bits_to_indices(self.members, self.parent_order)

    @property
    def sort_key(self):
        return (self.order, self.members)


@dataclass
class SubgroupLattice:
    """Every subgroup of ``parent`` once, sorted by (order, bitset)."""

    parent: Group
    all: list
    gens: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.index = {h.members: i for i, h in enumerate(self.all)}

    def __len__(self):
        return len(self.all)

    def __iter__(self):
        return iter(self.all)

    def __contains__(self, h: Subgroup) -> bool:
        return h.members in self.index

    @property
    def trivial(self) -> Subgroup:
        return self.all[0]

    @property
    def whole(self) -> Subgroup:
        return self.all[-1]

    def generators(self, h: Subgroup) -> tuple:
        got = self.gens.get(h.members)
        return got if got is not None else tuple(int(x) for x in h.elements())


def _extend(g: Group, mask: np.ndarray, elems: np.ndarray, gens: tuple, x: int):
    """Return (mask, elems, gens) for the subgroup generated by H and x.

    H is given by ``mask``/``elems`` and must already be a subgroup.  The
    result is grown one right coset ``H*y`` at a time.
    """
    if mask[x]:
        return mask, elems, gens
    t = g.table
    mul = g.mul
    mask = mask.copy()
    gens = gens + (x,)
    cosets = [elems]
    reps = [0]
    i = 0
    while i < len(reps):
        r = t[reps[i]]
        i += 1
        for s in gens:
            y = r[s]
            if not mask[y]:
                coset = mul[elems, y]
                mask[coset] = True
                cosets.append(coset)
                reps.append(y)
    return mask, np.concatenate(cosets), gens


def _trivial(g: Group):
    mask = np.zeros(g.order, dtype=bool)
    mask[0] = True
    return mask, np.zeros(1, dtype=np.int64), ()


def closure(g: Group, seed) -> Subgroup:
    """Smallest subgroup containing ``seed`` (a bitset or iterable of indices)."""
    idx = bits_to_indices(seed, g.order) if isinstance(seed, int) else seed
    mask, elems, gens = _trivial(g)
    for x in idx:
        mask, elems, gens = _extend(g, mask, elems, gens, int(x))
    return Subgroup(mask_to_bits(mask), g.order)


def join(g: Group, h: Subgroup, k: Subgroup) -> Subgroup:
    return closure(g, h.members | k.members)


def cyclic_subgroup(g: Group, x: int) -> Subgroup:
    t = g.table
    bits, y = 1, x
    while y != 0:
        bits |= 1 << y
        y = t[y][x]
    return Subgroup(bits, g.order)


def enumerate_subgroups(g: Group, max_subgroups: int = DEFAULT_MAX_SUBGROUPS) -> SubgroupLattice:
    """All subgroups of ``g``, each exactly once."""
    n = g.order
    known = {}  # bits -> (mask, elems, gens)
    cyclic = []  # (bits, generator)
    for x in range(n):
        c = cyclic_subgroup(g, x)
        if c.members in known:
            continue
        mask, elems, gens = _extend(g, *_trivial(g), x) if x else _trivial(g)
        known[c.members] = (mask, elems, gens)
        if x:
            cyclic.append((c.members, x))
    frontier = list(known)
    while frontier:
        fresh = []
        for hb in frontier:
            mask, elems, gens = known[hb]
            for cb, x in cyclic:
                if cb & ~hb == 0:
                    continue
                kmask, kelems, kgens = _extend(g, mask, elems, gens, x)
                kb = mask_to_bits(kmask)
                if kb not in known:
                    known[kb] = (kmask, kelems, kgens)
                    fresh.append(kb)
                    if len(known) > max_subgroups:
                        raise LatticeTooLarge(
                            f"more than {max_subgroups} subgroups in a group of order {n}")
        frontier = fresh
    subs = sorted((Subgroup(b, n) for b in known), key=lambda h: h.sort_key)
    return SubgroupLattice(g, subs, {b: v[2] for b, v in known.items()})


# -- centralizers, normalizers, conjugation -------------------------------


def centralizer_bits(g: Group, elements) -> int:
    bits = g.full_bits
    cb = g.commute_bits
    for x in elements:
        bits &= cb[int(x)]
    return bits


def centralizer(g: Group, h: Subgroup, gens=None) -> Subgroup:
    """Elements commuting with all of ``h``; ``gens`` may generate ``h``."""
    return Subgroup(centralizer_bits(g, h.elements() if gens is None else gens), g.order)


def center(g: Group) -> Subgroup:
    return Subgroup(g.center_bits, g.order)


def _stabilizer_mask(g: Group, h: Subgroup, within=None) -> np.ndarray:
    idx = h.elements()
    hmask = np.zeros(g.order, dtype=bool)
    hmask[idx] = True
    keep = hmask[g.conj[:, idx]].all(axis=1)
    if within is not None:
        keep &= within
    return keep


def normalizer(g: Group, h: Subgroup) -> Subgroup:
    """Elements x with x^-1 h x = h."""
    return Subgroup(mask_to_bits(_stabilizer_mask(g, h)), g.order)


def is_normal(g: Group, h: Subgroup) -> bool:
    return bool(_stabilizer_mask(g, h).all())


def conjugate(g: Group, h: Subgroup, x: int) -> Subgroup:
    mask = np.zeros(g.order, dtype=bool)
    mask[g.conj[x, h.elements()]] = True
    return Subgroup(mask_to_bits(mask), g.order)


def normal_closure(g: Group, h: Subgroup, within: Subgroup | None = None) -> Subgroup:
    """Smallest subgroup normalized by ``within`` (default g) containing h."""
    xs = range(g.order) if within is None else within.elements()
    idx = h.elements()
    mask = np.zeros(g.order, dtype=bool)
    for x in xs:
        mask[g.conj[x, idx]] = True
    return closure(g, np.flatnonzero(mask))


def conjugacy_classes_of_subgroups(g: Group, lat: SubgroupLattice) -> list[list[Subgroup]]:
    """Partition ``lat.all`` into conjugation orbits, in lattice order."""
    seen = set()
    classes = []
    for h in lat.all:
        if h.members in seen:
            continue
        if g.is_abelian:
            orbit = {h.members}
        else:
            idx = h.elements()
            rows = g.conj[:, idx]
            orbit = set()
            for row in rows:
                m = np.zeros(g.order, dtype=bool)
                m[row] = True
                orbit.add(mask_to_bits(m))
        seen |= orbit
        classes.append(sorted((Subgroup(b, g.order) for b in orbit), key=lambda s: s.sort_key))
    return classes


# -- Sylow theory and nilpotency ------------------------------------------


def prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def p_part(n: int, p: int) -> int:
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def subgroups_of_order(lat: SubgroupLattice, m: int) -> list[Subgroup]:
    return [h for h in lat.all if h.order == m]


@dataclass(frozen=True)
class SylowData:
    sylow_order: int
    count: int
    representatives: tuple


def sylow_data(g: Group, lat: SubgroupLattice, p: int) -> SylowData:
    """Sylow p-subgroups read off the full lattice."""
    q = p_part(g.order, p)
    subs = subgroups_of_order(lat, q)
    count = len(subs)
    assert count % p == 1 % p, f"Sylow count {count} not 1 mod {p}"
    assert (g.order // q) % count == 0, f"Sylow count {count} does not divide index"
    return SylowData(q, count, tuple(subs))


def is_nilpotent(g: Group, lat: SubgroupLattice) -> bool:
    return all(sylow_data(g, lat, p).count == 1 for p in prime_factors(g.order))


def is_p_group(g: Group, p: int | None = None) -> bool:
    ps = prime_factors(g.order)
    if g.order == 1:
        return True
    return len(ps) == 1 and (p is None or ps[0] == p)


def subnormal_series(g: Group, h: Subgroup) -> list[Subgroup]:
    """Descending normal-closure series G = K0 > K1 > ... ending at a fixpoint.

    ``K_{i+1}`` is the normal closure of h in ``K_i``; h is subnormal
    exactly when the series reaches h.
    """
    k = Subgroup(g.full_bits, g.order)
    series = [k]
    while True:
        nxt = normal_closure(g, h, within=k)
        if nxt == k:
            return series
        series.append(nxt)
        k = nxt


def is_subnormal(g: Group, h: Subgroup) -> bool:
    series = subnormal_series(g, h)
    assert series[-1] == h or len(series) <= log2(max(g.order, 1)) + 1
    return series[-1] == h
