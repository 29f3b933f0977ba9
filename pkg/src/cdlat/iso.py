"""Isomorphism testing for small groups.

Cheap invariants reject most pairs.  What survives goes to a backtracking
search that maps a generating set of one group into the other, element
class by element class, and extends the map along words in the generators.
"""

from __future__ import annotations

from collections import Counter

import numpy as np

from .group import Group
from .subgroups import closure


def derived_order(g: Group) -> int:
    if g.is_abelian:
        return 1
    m, inv = g.mul, g.inv
    # [a, b] = a^-1 b^-1 a b
    left = m[inv[:, None], inv[None, :]]
    comms = m[left, m]
    return closure(g, np.unique(comms)).order


def _class_key(g: Group) -> list[tuple[int, int]]:
    """(element order, centralizer order) for each element."""
    return [(o, c.bit_count()) for o, c in zip(g.element_orders, g.commute_bits)]


def invariants(g: Group) -> tuple:
    cached = getattr(g, "_iso_invariants", None)
    if cached is None:
        cached = (
            g.order,
            g.is_abelian,
            g.order_histogram,
            g.center_bits.bit_count(),
            derived_order(g),
            tuple(sorted(Counter(_class_key(g)).items())),
        )
        g._iso_invariants = cached
    return cached


def generating_set(g: Group) -> list[int]:
    """A generating set picked greedily by decreasing element order."""
    orders = g.element_orders
    gens = []
    bits = 1
    for x in sorted(range(g.order), key=lambda x: (-orders[x], x)):
        if bits == g.full_bits:
            break
        if not bits >> x & 1:
            gens.append(x)
            bits = closure(g, gens).members
    return gens


def _extend_map(gt, ht, gens, imgs):
    """Map <gens> -> <imgs> along words; None if not an injective hom."""
    phi = {0: 0}
    queue = [0]
    for x in queue:
        px = phi[x]
        for s, t in zip(gens, imgs):
            y = gt[x][s]
            z = ht[px][t]
            got = phi.get(y)
            if got is None:
                phi[y] = z
                queue.append(y)
            elif got != z:
                return None
    if len(set(phi.values())) != len(phi):
        return None
    return phi


def find_isomorphism(g: Group, h: Group) -> dict | None:
    """An isomorphism g -> h as a dict of element indices, or None."""
    if invariants(g) != invariants(h):
        return None
    if g.order == 1:
        return {0: 0}
    gens = generating_set(g)
    gkey, hkey = _class_key(g), _class_key(h)
    by_key: dict = {}
    for y, k in enumerate(hkey):
        by_key.setdefault(k, []).append(y)
    cands = [by_key.get(gkey[x], []) for x in gens]
    gt, ht = g.table, h.table

    def search(j, imgs):
        if j == len(gens):
            phi = _extend_map(gt, ht, gens, imgs)
            return phi if phi is not None and len(phi) == g.order else None
        for y in cands[j]:
            if y in imgs:
                continue
            trial = imgs + [y]
            if _extend_map(gt, ht, gens[: j + 1], trial) is None:
                continue
            found = search(j + 1, trial)
            if found is not None:
                return found
        return None

    return search(0, [])


def is_isomorphic(g: Group, h: Group) -> bool:
    if g is h:
        return True
    if invariants(g) != invariants(h):
        return False
    if g.is_abelian:
        # finite abelian groups are determined by their element-order counts
        return True
    return find_isomorphism(g, h) is not None
