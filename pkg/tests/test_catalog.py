import io
import json

import pytest

from cdlat.catalog import (
    BUNDLED,
    KNOWN_COUNTS,
    bundled_for_orders,
    format_catalog,
    load_catalog,
    parse_catalog,
    read_report,
    write_report,
)
from cdlat.errors import IncompleteCatalog, MissingCatalog, OrderMismatch, ParseError
from cdlat.iso import is_isomorphic

from conftest import bundled, fam

S3_C6 = """\
# order 6 count 2
group 6 1 S3
gen 1 2 0
gen 0 2 1

group 6 2 C6   # trailing comment
gen 1 2 0 3 4
gen 0 1 2 4 3
"""


class TestParse:
    def test_example(self):
        cat = parse_catalog(S3_C6)
        assert [e.key for e in cat] == [(6, 1), (6, 2)]
        assert cat.declared == {6: 2}
        s3, c6 = (e.build() for e in cat)
        assert is_isomorphic(s3, fam("s 3"))
        assert is_isomorphic(c6, fam("c 6"))
        assert cat.get(6, 2).name == "C6"

    def test_require_complete(self):
        cat = parse_catalog(S3_C6)
        cat.require_complete([6])
        with pytest.raises(IncompleteCatalog):
            cat.require_complete([8])
        partial = parse_catalog(S3_C6.split("\ngroup 6 2")[0])
        with pytest.raises(IncompleteCatalog):
            partial.require_complete([6])

    def test_roundtrip(self):
        cat = parse_catalog(S3_C6)
        again = parse_catalog(format_catalog(cat))
        assert [(e.key, e.generators, e.name) for e in again] == [(e.key, e.generators, e.name) for e in cat]
        assert again.declared == cat.declared

    @pytest.mark.parametrize("text,line", [
        ("gen 1 0\n", 1),
        ("group 2\ngen 1 0\n", 1),
        ("group 2 x\ngen 1 0\n", 1),
        ("group 2 1\ngen 1 1\n", 2),
        ("group 4 1\ngen 1 0 3 2\ngen 1 0\n", 3),
        ("group 2 1\ngen 1 a\n", 2),
        ("group 2 1\n\n", 1),
        ("bogus 1 2\n", 1),
        ("group 0 1\ngen 0\n", 1),
    ])
    def test_errors_carry_line(self, text, line):
        with pytest.raises(ParseError) as exc:
            parse_catalog(text)
        assert exc.value.line == line

    def test_degree_cap(self):
        perm = " ".join(str((i + 1) % 300) for i in range(300))
        with pytest.raises(ParseError):
            parse_catalog(f"group 300 1\ngen {perm}\n")

    def test_order_mismatch(self):
        with pytest.raises(OrderMismatch):
            parse_catalog("group 4 1\ngen 1 2 0\n")
        assert len(parse_catalog("group 4 1\ngen 1 2 0\n", validate=False)) == 1

    def test_missing_file(self, tmp_path):
        with pytest.raises(MissingCatalog):
            load_catalog(tmp_path / "nope.txt")

    def test_merge(self):
        a = parse_catalog(S3_C6)
        b = parse_catalog("# order 2 count 1\ngroup 2 1 C2\ngen 1 0\n")
        m = a.merged(b)
        assert m.orders() == [2, 6] and len(m) == 3


class TestBundled:
    @pytest.mark.parametrize("name", BUNDLED)
    def test_counts(self, name):
        cat = bundled(name)
        for n, k in cat.declared.items():
            assert KNOWN_COUNTS[n] == k
            assert [e.id for e in cat.of_order(n)] == list(range(1, k + 1))
        cat.require_complete(cat.declared)

    @pytest.mark.parametrize("name", ["orders_1_32", "order_81"])
    def test_entries_validate(self, name):
        cat = bundled(name)
        for e in cat:
            assert e.build().order == e.order

    def test_bundled_for_orders(self):
        assert bundled_for_orders([8]).orders() == list(range(1, 33))
        assert bundled_for_orders([81]).orders() == [81]
        assert len(bundled_for_orders([1000])) == 0


class TestReports:
    RECORDS = [
        {"order": 8, "id": 2, "delta": 0, "cond1": True},
        {"order": 8, "id": 1, "delta": 3, "cond1": True},
    ]

    def test_deterministic(self):
        a, b = io.StringIO(), io.StringIO()
        write_report(self.RECORDS, a)
        write_report(list(reversed(self.RECORDS)), b)
        assert a.getvalue() == b.getvalue()
        rows = read_report(io.StringIO(a.getvalue()))
        assert [r["id"] for r in rows] == [1, 2]

    def test_sorted_keys(self):
        buf = io.StringIO()
        write_report(self.RECORDS, buf)
        assert buf.getvalue() == json.dumps(sorted(self.RECORDS, key=lambda r: r["id"]),
                                            sort_keys=True, indent=1) + "\n"

    def test_empty(self):
        buf = io.StringIO()
        write_report([], buf)
        assert buf.getvalue() == "[]"
