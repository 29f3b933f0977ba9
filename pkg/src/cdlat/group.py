"""Finite groups stored as multiplication tables.

Elements are the integers ``0..n-1`` and ``0`` is always the identity.  A
subgroup elsewhere in the package is a Python ``int`` used as a bitset over
these indices, so most of the cached helpers here return bitsets.
"""

from __future__ import annotations

import os
from collections import Counter
from functools import cached_property

import numpy as np

from .errors import GroupTooLarge, InvalidGroup, OrderMismatch

DEFAULT_MAX_ORDER = 2048
ASSOCIATIVITY_CHECK_LIMIT = 512


def max_order() -> int:
    """Current group size cap; ``CDLAT_MAX_ORDER`` overrides the default."""
    env = os.environ.get("CDLAT_MAX_ORDER")
    return int(env) if env else DEFAULT_MAX_ORDER


def mask_to_bits(mask: np.ndarray) -> int:
    return int.from_bytes(np.packbits(mask, bitorder="little").tobytes(), "little")


def indices_to_bits(idx) -> int:
    bits = 0
    for i in idx:
        bits |= 1 << int(i)
    return bits


def bits_to_indices(bits: int, n: int) -> np.ndarray:
    raw = np.frombuffer(bits.to_bytes((n + 7) // 8, "little"), dtype=np.uint8)
    return np.flatnonzero(np.unpackbits(raw, bitorder="little")[:n])


class Group:
    """An order-n group given by its Cayley table.

    ``mul[a, b]`` is the index of ``a*b``.  Tables are validated on
    construction (associativity only up to ``ASSOCIATIVITY_CHECK_LIMIT``)
    and frozen afterwards.
    """

    def __init__(self, mul, labels=None, name=None, validate=True):
        mul = np.asarray(mul, dtype=np.int32)
        if mul.ndim != 2 or mul.shape[0] != mul.shape[1] or mul.shape[0] == 0:
            raise InvalidGroup("table must be a non-empty square array")
        n = mul.shape[0]
        if n > max_order():
            raise GroupTooLarge(f"order {n} exceeds cap {max_order()}")
        mul.setflags(write=False)
        self.mul = mul
        self.order = n
        self.identity = 0
        self.name = name
        self.labels = list(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != n:
            raise InvalidGroup("one label per element required")
        if validate:
            self._validate()
        inv = np.argmin(mul, axis=1).astype(np.int32)
        inv.setflags(write=False)
        self.inv = inv

    def _validate(self):
        mul, n = self.mul, self.order
        ar = np.arange(n)
        if mul.min() < 0 or mul.max() >= n:
            raise InvalidGroup("table entries out of range")
        if not (np.array_equal(mul[0], ar) and np.array_equal(mul[:, 0], ar)):
            raise InvalidGroup("index 0 is not a two-sided identity")
        srt = np.sort(mul, axis=1)
        if not (srt == ar).all() or not (np.sort(mul, axis=0) == ar[:, None]).all():
            raise InvalidGroup("table is not a Latin square")
        if n <= ASSOCIATIVITY_CHECK_LIMIT:
            for a in range(n):
                # (a*b)*c == a*(b*c) for every b, c
                if not np.array_equal(mul[mul[a]], mul[a][mul]):
                    raise InvalidGroup(f"associativity fails for a={a}")

    def __repr__(self):
        return f"Group(order={self.order}, name={self.name!r})"

    def __len__(self):
        return self.order

    # -- cached structure -------------------------------------------------

    @cached_property
    def table(self) -> list[list[int]]:
        """The Cayley table as nested lists, for fast scalar lookups."""
        return self.mul.tolist()

    @cached_property
    def full_bits(self) -> int:
        return (1 << self.order) - 1

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    @cached_property
    def element_orders(self) -> list[int]:
        t = self.table
        orders = [0] * self.order
        for x in range(self.order):
            if orders[x]:
                continue
            powers = [0]
            y = x
            while y != 0:
                powers.append(y)
                y = t[y][x]
            m = len(powers)
            orders[x] = m
            # x^k has order m / gcd(m, k)
            for k in range(2, m):
                if not orders[powers[k]]:
                    orders[powers[k]] = m // _gcd(m, k)
        return orders

    @cached_property
    def commute_bits(self) -> list[int]:
        """``commute_bits[x]`` is the centralizer of x as a bitset."""
        eq = self.mul == self.mul.T
        return [mask_to_bits(row) for row in eq]

    @cached_property
    def center_bits(self) -> int:
        bits = self.full_bits
        for c in self.commute_bits:
            bits &= c
        return bits

    @cached_property
    def conj(self) -> np.ndarray:
        """``conj[x, h]`` is ``x^-1 * h * x``."""
        m, ar = self.mul, np.arange(self.order)
        left = m[self.inv[:, None], ar[None, :]]
        return m[left, ar[:, None]]

    @cached_property
    def order_histogram(self) -> tuple:
        return tuple(sorted(Counter(self.element_orders).items()))

    def power(self, x: int, k: int) -> int:
        t = self.table
        y = 0
        for _ in range(k % self.element_orders[x]):
            y = t[y][x]
        return y

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def element_order(g: Group, x: int) -> int:
    """Least m >= 1 with x^m equal to the identity."""
    if not 0 <= x < g.order:
        raise IndexError(f"element {x} not in a group of order {g.order}")
    return g.element_orders[x]


def build_from_generators(degree, gens, expected_order=None, name=None, cap=None):
    """Close a set of permutations of ``0..degree-1`` under composition.

    The product ``a*b`` applies ``a`` first, so ``(a*b)[i] = b[a[i]]``.
    Elements are ordered breadth-first from the identity; each layer is
    sorted by permutation image.
    """
    cap = max_order() if cap is None else cap
    perms = []
    for g in gens:
        arr = np.asarray(g, dtype=np.int32)
        if arr.shape != (degree,) or not np.array_equal(np.sort(arr), np.arange(degree)):
            raise InvalidGroup(f"generator {list(g)} is not a permutation of 0..{degree - 1}")
        perms.append(arr)
    ident = np.arange(degree, dtype=np.int32)
    elems = [ident]
    index = {ident.tobytes(): 0}
    layer = [ident]
    while layer:
        fresh = {}
        for x in layer:
            for s in perms:
                y = s[x]
                key = y.tobytes()
                if key not in index and key not in fresh:
                    fresh[key] = y
        layer = [fresh[k] for k in sorted(fresh, key=lambda k: tuple(fresh[k]))]
        for y in layer:
            index[y.tobytes()] = len(elems)
            elems.append(y)
            if len(elems) > cap:
                raise GroupTooLarge(f"closure exceeds {cap} elements")
    n = len(elems)
    if expected_order is not None and n != expected_order:
        raise OrderMismatch(f"generators give order {n}, expected {expected_order}")
    P = np.stack(elems)
    mul = np.empty((n, n), dtype=np.int32)
    for a in range(n):
        # row a: (a*b)[i] = b[a[i]] for every b
        prods = P[:, P[a]]
        mul[a] = [index[r.tobytes()] for r in prods]
    labels = [_cycle_string(p) for p in elems]
    return Group(mul, labels=labels, name=name)


def _cycle_string(perm) -> str:
    seen = set()
    cycles = []
    for i in range(len(perm)):
        if i in seen or perm[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = int(perm[i])
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = int(perm[j])
        cycles.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(cycles) or "()"


def direct_product(g: Group, h: Group) -> Group:
    """Componentwise product; pair (i, j) is element ``i*|h| + j``."""
    n, m = g.order, h.order
    if n * m > max_order():
        raise GroupTooLarge(f"order {n * m} exceeds cap {max_order()}")
    mul = (g.mul[:, None, :, None] * m + h.mul[None, :, None, :]).reshape(n * m, n * m)
    labels = None
    if g.labels or h.labels:
        labels = [f"({g.label(i)}, {h.label(j)})" for i in range(n) for j in range(m)]
    name = f"{g.name or '?'} x {h.name or '?'}"
    return Group(mul, labels=labels, name=name)


def induced_group(g: Group, members: int) -> tuple[Group, np.ndarray]:
    """The subgroup ``members`` as a group in its own right.

    Returns the new group and the sorted parent indices of its elements, so
    element ``k`` of the result is element ``idx[k]`` of ``g``.
    """
    idx = bits_to_indices(members, g.order)
    pos = np.full(g.order, -1, dtype=np.int32)
    pos[idx] = np.arange(len(idx))
    sub = pos[g.mul[np.ix_(idx, idx)]]
    if (sub < 0).any():
        raise InvalidGroup("member set is not closed under multiplication")
    labels = [g.label(int(i)) for i in idx] if g.labels else None
    return Group(sub, labels=labels, validate=False), idx
