"""Named group families built from metacyclic normal forms ``a^i b^j``.

Also parses the short family notation used on the command line::

    c 12        cyclic of order 12
    d 8         dihedral of order 8
    q 16        generalized quaternion of order 16 (``q 2^4`` also works)
    m 3 3       modular group M_{p^k} with p=3, k=3
    es 5        extraspecial group of order p^3 and exponent p^2
    s 4         symmetric group on 4 points
    q 8 x c 3   direct product
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce

import numpy as np

from .errors import InvalidFamilyParameters
from .group import Group, build_from_generators, direct_product

KINDS = (
    "cyclic",
    "dihedral",
    "generalized_quaternion",
    "modular_mpk",
    "extraspecial_p3_exp_p2",
    "symmetric",
    "direct_product",
)

_SHORT = {
    "c": "cyclic",
    "d": "dihedral",
    "q": "generalized_quaternion",
    "m": "modular_mpk",
    "es": "extraspecial_p3_exp_p2",
    "s": "symmetric",
}


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus its integer parameters.

    ``cyclic``/``dihedral``/``generalized_quaternion`` take the group order,
    ``modular_mpk`` takes ``(p, k)``, ``extraspecial_p3_exp_p2`` takes ``p``,
    ``symmetric`` the number of points.  ``direct_product`` carries a tuple
    of factor specs.
    """

    kind: str
    params: tuple

    def __str__(self):
        if self.kind == "direct_product":
            return " x ".join(str(f) for f in self.params)
        short = {v: k for k, v in _SHORT.items()}[self.kind]
        return " ".join([short, *map(str, self.params)])

    @property
    def display(self) -> str:
        k, p = self.kind, self.params
        if k == "direct_product":
            return "x".join(f.display for f in p)
        if k == "modular_mpk":
            return f"M{p[0] ** p[1]}"
        if k == "extraspecial_p3_exp_p2":
            return f"{p[0]}^(1+2)-"
        prefix = {"cyclic": "C", "dihedral": "D", "generalized_quaternion": "Q",
                  "symmetric": "S"}[k]
        return f"{prefix}{p[0]}"


def cyclic(n):
    return FamilySpec("cyclic", (n,))


def product(*factors):
    return FamilySpec("direct_product", tuple(factors))


def _is_prime(n):
    return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))


def _log2_exact(n):
    return n.bit_length() - 1 if n > 0 and n & (n - 1) == 0 else None


def _metacyclic(m, q, rule, labels, name):
    """Group of elements ``a^i b^j`` (i < m, j < q), index ``i + m*j``.

    ``rule(i, j, k, l)`` returns the reduced exponents of the product
    ``(a^i b^j)(a^k b^l)`` as a pair of integer arrays.
    """
    n = m * q
    idx = np.arange(n)
    i, j = idx % m, idx // m
    I, J = i[:, None], j[:, None]
    K, L = i[None, :], j[None, :]
    e, f = rule(I, J, K, L)
    mul = (e % m) + m * (f % q)
    return Group(mul, labels=labels(i, j), name=name)


def _word_labels(i, j):
    out = []
    for a, b in zip(i.tolist(), j.tolist()):
        parts = ([f"a^{a}"] if a else []) + ([f"b^{b}"] if b else [])
        out.append(" ".join(parts) or "1")
    return out


def build_family(spec: FamilySpec) -> Group:
    """Realize a family member as a validated multiplication table."""
    kind, params = spec.kind, spec.params
    bad = InvalidFamilyParameters
    if kind not in KINDS:
        raise bad(f"unknown family {kind!r}")
    if kind != "direct_product" and not all(isinstance(v, int) for v in params):
        raise bad(f"{kind} takes integer parameters, got {params}")

    if kind == "cyclic":
        (n,) = params
        if n < 1:
            raise bad("cyclic order must be positive")
        return _metacyclic(n, 1, lambda I, J, K, L: (I + K, J + L),
                           _word_labels, spec.display)

    if kind == "dihedral":
        (n,) = params
        if n < 2 or n % 2:
            raise bad("dihedral order must be even and at least 2")
        m = n // 2
        return _metacyclic(
            m, 2,
            lambda I, J, K, L: (I + np.where(J == 1, -K, K), J + L),
            _word_labels, spec.display)

    if kind == "generalized_quaternion":
        (n,) = params
        k = _log2_exact(n)
        if k is None or k < 3:
            raise bad("generalized quaternion order must be 2^k with k >= 3")
        m = n // 2
        # a^m = 1, b^2 = a^(m/2), b a b^-1 = a^-1
        return _metacyclic(
            m, 2,
            lambda I, J, K, L: (I + np.where(J == 1, -K, K) + (m // 2) * (J * L), J + L),
            _word_labels, spec.display)

    if kind == "modular_mpk":
        if len(params) != 2:
            raise bad("modular group takes (p, k)")
        p, k = params
        if not _is_prime(p) or k < 3:
            raise bad("modular group needs p prime and k >= 3")
        m = p ** (k - 1)
        # b^-1 a b = a^(1 + p^(k-2)), hence b^j a b^-j = a^(s^j) with s its inverse
        s = pow(1 + p ** (k - 2), -1, m)
        spow = np.array([pow(s, j, m) for j in range(p)], dtype=np.int64)
        return _metacyclic(m, p, lambda I, J, K, L: (I + K * spow[J], J + L),
                           _word_labels, spec.display)

    if kind == "extraspecial_p3_exp_p2":
        (p,) = params
        if not _is_prime(p) or p == 2:
            raise bad("extraspecial p^3 of exponent p^2 needs an odd prime")
        m = p * p
        # C_{p^2} semidirect C_p with b a b^-1 = a^(1+p)
        spow = np.array([pow(1 + p, j, m) for j in range(p)], dtype=np.int64)
        return _metacyclic(m, p, lambda I, J, K, L: (I + K * spow[J], J + L),
                           _word_labels, spec.display)

    if kind == "symmetric":
        (n,) = params
        if n < 1:
            raise bad("symmetric group needs at least one point")
        if n == 1:
            gens = [[0]]
        elif n == 2:
            gens = [[1, 0]]
        else:
            gens = [list(range(1, n)) + [0], [1, 0] + list(range(2, n))]
        return build_from_generators(max(n, 1), gens, name=spec.display)

    # direct_product
    if not params or not all(isinstance(f, FamilySpec) for f in params):
        raise bad("direct product needs one or more factor specs")
    g = reduce(direct_product, (build_family(f) for f in params))
    g.name = spec.display
    return g


_INT = re.compile(r"^(\d+)(?:\^(\d+))?$")


def _parse_int(tok):
    m = _INT.match(tok)
    if not m:
        raise InvalidFamilyParameters(f"expected an integer, got {tok!r}")
    base = int(m.group(1))
    return base ** int(m.group(2)) if m.group(2) else base


def parse_family(text: str) -> FamilySpec:
    """Parse the short notation (see module docstring) into a FamilySpec."""
    factors = [f.split() for f in re.split(r"\s+x\s+|\s*\*\s*", text.strip())]
    specs = []
    for toks in factors:
        if not toks or toks[0].lower() not in _SHORT:
            raise InvalidFamilyParameters(f"cannot parse group spec {text!r}")
        kind = _SHORT[toks[0].lower()]
        specs.append(FamilySpec(kind, tuple(_parse_int(t) for t in toks[1:])))
    return specs[0] if len(specs) == 1 else FamilySpec("direct_product", tuple(specs))
