"""Catalog files of permutation-generated groups and JSON sweep reports.

Catalog format (UTF-8, ``#`` starts a comment)::

    # order 6 count 2
    group 6 1 S3
    gen 1 2 0
    gen 0 2 1

    group 6 2 C6
    ...

A blank line ends an entry.  ``# order N count K`` comment lines declare how
many groups of order N the file is meant to hold; they are what lets the
verifier refuse to draw conclusions from a partial catalog.
"""

from __future__ import annotations

import io
import json
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .errors import CDLatError, IncompleteCatalog, MissingCatalog, OrderMismatch, ParseError
from .group import Group, build_from_generators

MAX_DEGREE = 256

# Number of isomorphism types of each order, from the SmallGroups library.
KNOWN_COUNTS = {
    1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2, 10: 2, 11: 1, 12: 5,
    13: 1, 14: 2, 15: 1, 16: 14, 17: 1, 18: 5, 19: 1, 20: 5, 21: 2, 22: 2,
    23: 1, 24: 15, 25: 2, 26: 2, 27: 5, 28: 4, 29: 1, 30: 4, 31: 1, 32: 51,
    64: 267, 81: 15, 128: 2328, 243: 67,
}

BUNDLED = ("orders_1_32", "order_64", "order_81", "order_243")

_COUNT_RE = re.compile(r"^#\s*order\s+(\d+)\s+count\s+(\d+)\s*$")


@dataclass
class CatalogEntry:
    order: int
    id: int
    degree: int
    generators: list
    name: str | None = None

    @property
    def key(self):
        return (self.order, self.id)

    def build(self) -> Group:
        label = self.name or f"SmallGroup({self.order},{self.id})"
        return build_from_generators(self.degree, self.generators,
                                     expected_order=self.order, name=label)


@dataclass
class Catalog:
    entries: list
    declared: dict = field(default_factory=dict)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def orders(self) -> list[int]:
        return sorted({e.order for e in self.entries})

    def of_order(self, n: int) -> list[CatalogEntry]:
        return [e for e in self.entries if e.order == n]

    def get(self, order: int, id: int) -> CatalogEntry:
        for e in self.entries:
            if e.key == (order, id):
                return e
        raise KeyError(f"no entry ({order}, {id})")

    def merged(self, other: "Catalog") -> "Catalog":
        seen = {e.key: e for e in self.entries}
        for e in other.entries:
            seen.setdefault(e.key, e)
        declared = {**other.declared, **self.declared}
        return Catalog(sorted(seen.values(), key=lambda e: e.key), declared)

    def require_complete(self, orders) -> None:
        """Raise IncompleteCatalog unless every order is fully present."""
        missing = []
        for n in orders:
            want = self.declared.get(n, KNOWN_COUNTS.get(n))
            have = len(self.of_order(n))
            if want is None or have != want:
                missing.append(f"order {n}: have {have}, need {want if want is not None else '?'}")
        if missing:
            raise IncompleteCatalog("; ".join(missing))


def parse_catalog(stream, validate: bool = True) -> Catalog:
    """Read a catalog from a text stream.

    With ``validate`` every entry is built and its generated order compared
    with the declared one (OrderMismatch on disagreement).
    """
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    entries: list[CatalogEntry] = []
    declared: dict[int, int] = {}
    cur = None
    cur_line = 0

    def finish():
        nonlocal cur
        if cur is None:
            return
        if not cur.generators:
            raise ParseError(cur_line, f"group {cur.order} {cur.id} has no generators")
        entries.append(cur)
        cur = None

    for lineno, raw in enumerate(stream, 1):
        line = raw.strip()
        m = _COUNT_RE.match(line)
        if m:
            declared[int(m.group(1))] = int(m.group(2))
            continue
        line = line.split("#", 1)[0].strip()
        if not line:
            if not raw.lstrip().startswith("#"):
                finish()
            continue
        toks = line.split()
        if toks[0] == "group":
            finish()
            if len(toks) < 3:
                raise ParseError(lineno, "expected 'group <order> <id> [<name>]'")
            try:
                order, gid = int(toks[1]), int(toks[2])
            except ValueError:
                raise ParseError(lineno, "order and id must be integers") from None
            if order < 1 or gid < 1:
                raise ParseError(lineno, "order and id must be positive")
            cur = CatalogEntry(order, gid, 0, [], " ".join(toks[3:]) or None)
            cur_line = lineno
        elif toks[0] == "gen":
            if cur is None:
                raise ParseError(lineno, "'gen' outside a group entry")
            try:
                images = [int(t) for t in toks[1:]]
            except ValueError:
                raise ParseError(lineno, "images must be integers") from None
            if not cur.generators:
                cur.degree = len(images)
            if len(images) != cur.degree:
                raise ParseError(lineno, f"expected {cur.degree} images, got {len(images)}")
            if not 1 <= cur.degree <= MAX_DEGREE:
                raise ParseError(lineno, f"degree must be between 1 and {MAX_DEGREE}")
            if sorted(images) != list(range(cur.degree)):
                raise ParseError(lineno, "images are not a permutation of 0..degree-1")
            cur.generators.append(images)
        else:
            raise ParseError(lineno, f"unknown directive {toks[0]!r}")
    finish()

    if validate:
        for e in entries:
            try:
                e.build()
            except OrderMismatch as exc:
                raise OrderMismatch(f"entry {e.key}: {exc}") from None
    return Catalog(entries, declared)


def format_catalog(cat: Catalog) -> str:
    lines = [f"# order {n} count {k}" for n, k in sorted(cat.declared.items())]
    if lines:
        lines.append("")
    for e in cat.entries:
        lines.append(" ".join(["group", str(e.order), str(e.id)] + ([e.name] if e.name else [])))
        lines.extend("gen " + " ".join(map(str, g)) for g in e.generators)
        lines.append("")
    return "\n".join(lines)


def load_catalog(path, validate: bool = True) -> Catalog:
    path = Path(path)
    if not path.exists():
        raise MissingCatalog(f"catalog {path} not found")
    with path.open(encoding="utf-8") as fh:
        return parse_catalog(fh, validate=validate)


def bundled_path(name: str) -> Path:
    return Path(str(resources.files("cdlat") / "data" / f"{name}.txt"))


def load_bundled(names=BUNDLED, validate: bool = False) -> Catalog:
    cat = Catalog([])
    for name in names:
        cat = cat.merged(load_catalog(bundled_path(name), validate=validate))
    return cat


def bundled_for_orders(orders) -> Catalog:
    """Bundled catalogs that cover the given orders."""
    need = set(orders)
    names = [n for n in BUNDLED
             if need & _bundle_orders(n)]
    return load_bundled(names)


def _bundle_orders(name):
    if name == "orders_1_32":
        return set(range(1, 33))
    return {int(name.split("_")[1])}


# -- sweep reports --------------------------------------------------------

REPORT_KEYS = ("order", "id", "name", "delta", "m_star", "cd_size", "total_subgroups",
               "nilpotent", "cond1", "cond2", "cond3", "iso_name")


def write_report(results, sink) -> None:
    """Deterministic JSON: sorted keys, records ordered by (order, id)."""
    rows = sorted(results, key=lambda r: (r["order"], r["id"]))
    text = json.dumps(rows, sort_keys=True, indent=1)
    sink.write(text + "\n" if rows else text)


def read_report(source) -> list[dict]:
    return json.load(source)


__all__ = [
    "CatalogEntry", "Catalog", "parse_catalog", "format_catalog", "load_catalog",
    "load_bundled", "bundled_for_orders", "bundled_path", "write_report", "read_report",
    "KNOWN_COUNTS", "MAX_DEGREE", "REPORT_KEYS", "CDLatError",
]
