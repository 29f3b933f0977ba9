import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cdlat.errors import GroupTooLarge, InvalidFamilyParameters, InvalidGroup, OrderMismatch
from cdlat.families import FamilySpec, build_family, parse_family
from cdlat.group import Group, build_from_generators, direct_product, element_order
from cdlat.iso import find_isomorphism, is_isomorphic

from conftest import fam
import oracles


def assert_group_axioms(g):
    t = np.asarray(g.mul)
    n = g.order
    ar = np.arange(n)
    assert (t[0] == ar).all() and (t[:, 0] == ar).all()
    assert (t[ar, g.inv] == 0).all() and (t[g.inv, ar] == 0).all()
    assert all(sorted(row) == list(range(n)) for row in t.tolist())
    assert all(sorted(col) == list(range(n)) for col in t.T.tolist())
    assert (t[t[:, :, None], ar[None, None, :]] == t[ar[:, None, None], t[None, :, :]]).all()


def regular_generators(g, elems):
    # right regular action x -> x*e
    return [[int(g.mul[x, e]) for x in range(g.order)] for e in elems]


class TestBuildFromGenerators:
    def test_s3(self):
        g = build_from_generators(3, [[1, 2, 0], [1, 0, 2]])
        assert g.order == 6
        assert not g.is_abelian
        assert is_isomorphic(g, fam("s 3"))

    def test_c4(self):
        g = build_from_generators(4, [[1, 2, 3, 0]])
        assert g.order == 4 and g.is_abelian
        assert max(g.element_orders) == 4

    def test_q8_regular_representation(self):
        q = fam("q 8")
        g = build_from_generators(8, regular_generators(q, [1, 4]))
        assert g.order == 8
        assert oracles.order_histogram(g.table).get(2) == 1

    def test_identity_first_and_deterministic(self):
        a = build_from_generators(4, [[1, 0, 3, 2], [2, 3, 0, 1]])
        b = build_from_generators(4, [[1, 0, 3, 2], [2, 3, 0, 1]])
        assert a.labels[0] == "()"
        assert a.mul.tobytes() == b.mul.tobytes()

    def test_rejects_non_bijection(self):
        with pytest.raises(InvalidGroup):
            build_from_generators(3, [[0, 0, 1]])

    def test_order_mismatch(self):
        with pytest.raises(OrderMismatch):
            build_from_generators(3, [[1, 2, 0]], expected_order=6)

    def test_cap(self):
        with pytest.raises(GroupTooLarge):
            build_from_generators(5, [[1, 2, 3, 4, 0], [1, 0, 2, 3, 4]], cap=100)

    def test_env_cap(self, monkeypatch):
        monkeypatch.setenv("CDLAT_MAX_ORDER", "10")
        with pytest.raises(GroupTooLarge):
            build_from_generators(4, [[1, 2, 3, 0], [1, 0, 2, 3]])


class TestGroupValidation:
    def test_rejects_non_latin(self):
        with pytest.raises(InvalidGroup):
            Group([[0, 1], [1, 1]])

    def test_rejects_non_associative(self):
        # a Latin square with identity 0 that is not associative (order 5 loop)
        loop = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ]
        with pytest.raises(InvalidGroup, match="associativity"):
            Group(loop)

    def test_identity_must_be_zero(self):
        with pytest.raises(InvalidGroup):
            Group([[1, 0], [0, 1]])


class TestFamilies:
    def test_q8(self):
        g = fam("q 8")
        assert g.order == 8
        assert g.element_orders.count(2) == 1

    def test_m27(self):
        g = fam("m 3 3")
        assert g.order == 27 and max(g.element_orders) == 9 and not g.is_abelian

    def test_trivial(self):
        g = build_family(FamilySpec("cyclic", (1,)))
        assert g.order == 1

    @pytest.mark.parametrize("k", range(3, 8))
    def test_quaternion_unique_involution(self, k):
        g = fam(f"q {2 ** k}")
        assert g.order == 2 ** k
        assert g.element_orders.count(2) == 1
        assert not g.is_abelian

    @pytest.mark.parametrize("spec", ["c 12", "d 8", "d 12", "q 16", "m 2 4", "m 3 4", "m 5 3",
                                      "es 3", "es 5", "s 4", "q 8 x c 3", "c 2 x c 2 x c 2"])
    def test_axioms(self, spec):
        assert_group_axioms(fam(spec))

    def test_modular_exponent(self):
        for p, k in [(2, 4), (2, 5), (3, 3), (3, 4), (5, 3)]:
            g = fam(f"m {p} {k}")
            assert g.order == p ** k
            assert max(g.element_orders) == p ** (k - 1)
            assert not g.is_abelian

    def test_labels_are_words(self):
        g = fam("d 8")
        assert g.labels[0] == "1"
        assert set(g.labels) >= {"a^1", "b^1", "a^3 b^1"}

    @pytest.mark.parametrize("spec", [
        FamilySpec("generalized_quaternion", (12,)),
        FamilySpec("generalized_quaternion", (4,)),
        FamilySpec("modular_mpk", (4, 3)),
        FamilySpec("modular_mpk", (3, 2)),
        FamilySpec("extraspecial_p3_exp_p2", (2,)),
        FamilySpec("dihedral", (7,)),
        FamilySpec("cyclic", (0,)),
        FamilySpec("nonsense", (3,)),
    ])
    def test_invalid_parameters(self, spec):
        with pytest.raises(InvalidFamilyParameters):
            build_family(spec)

    def test_parse_notation(self):
        assert parse_family("q 2^4") == FamilySpec("generalized_quaternion", (16,))
        spec = parse_family("q 8 x c 3")
        assert spec.kind == "direct_product" and len(spec.params) == 2
        assert str(spec) == "q 8 x c 3"
        with pytest.raises(InvalidFamilyParameters):
            parse_family("z 9")


class TestDirectProduct:
    def test_klein(self):
        g = direct_product(fam("c 2"), fam("c 2"))
        assert g.order == 4 and g.element_orders.count(2) == 3

    def test_encoding(self):
        g, h = fam("s 3"), fam("c 3")
        p = direct_product(g, h)
        for (a, b, c, d) in [(1, 2, 3, 1), (5, 0, 2, 2), (4, 1, 4, 2)]:
            assert p.mul[a * 3 + b, c * 3 + d] == g.mul[a, c] * 3 + h.mul[b, d]

    def test_trivial_factor(self):
        assert is_isomorphic(direct_product(fam("s 3"), fam("c 1")), fam("s 3"))

    @settings(max_examples=25, deadline=None)
    @given(st.sampled_from(["c 2", "c 3", "s 3", "q 8", "d 8", "c 4"]),
           st.sampled_from(["c 1", "c 2", "c 5", "s 3", "c 3 x c 3"]))
    def test_order_multiplies(self, a, b):
        g, h = fam(a), fam(b)
        p = direct_product(g, h)
        assert p.order == g.order * h.order
        assert_group_axioms(p)


class TestElementOrder:
    def test_identity(self):
        assert element_order(fam("s 3"), 0) == 1

    def test_generator_c12(self):
        assert element_order(fam("c 12"), 1) == 12

    def test_q16_involution(self):
        g = fam("q 16")
        orders = [element_order(g, x) for x in range(16)]
        assert orders.count(2) == 1
        assert orders == [oracles.element_order(g.table, x) for x in range(16)]

    def test_lagrange(self, small_groups):
        for _, g in small_groups:
            assert all(g.order % o == 0 for o in g.element_orders)

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            element_order(fam("c 3"), 3)


def relabel(g, perm):
    """Copy of g with element i renamed perm[i] (perm[0] must be 0)."""
    perm = np.asarray(perm)
    inv = np.argsort(perm)
    mul = perm[g.mul[inv][:, inv]]
    return Group(mul)


class TestIsomorphism:
    def test_crt(self):
        assert is_isomorphic(fam("c 6"), fam("c 2 x c 3"))

    def test_q8_vs_d8(self):
        assert not is_isomorphic(fam("q 8"), fam("d 8"))

    def test_extraspecial_is_m27(self):
        assert is_isomorphic(fam("es 3"), fam("m 3 3"))
        phi = find_isomorphism(fam("es 3"), fam("m 3 3"))
        g, h = fam("es 3"), fam("m 3 3")
        assert all(phi[int(g.mul[a, b])] == h.mul[phi[a], phi[b]] for a in range(27) for b in range(27))

    def test_m8_is_d8(self):
        assert is_isomorphic(fam("m 2 3"), fam("d 8"))

    def test_different_orders(self):
        assert not is_isomorphic(fam("c 4"), fam("c 5"))

    @settings(max_examples=30, deadline=None)
    @given(st.sampled_from(["q 8", "d 8", "s 4", "m 3 3", "q 8 x c 3", "d 12", "m 2 4", "q 16"]),
           st.randoms(use_true_random=False))
    def test_relabelled_copy(self, spec, rnd):
        g = fam(spec)
        rest = list(range(1, g.order))
        rnd.shuffle(rest)
        h = relabel(g, [0] + rest)
        assert is_isomorphic(g, h) and is_isomorphic(h, g)

    def test_distinguishes_bundled_groups(self, groups_upto_64):
        by_order = {}
        for key, g in groups_upto_64:
            by_order.setdefault(key[0], []).append((key, g))
        for n, items in by_order.items():
            for i, (k1, a) in enumerate(items):
                assert is_isomorphic(a, a)
                for k2, b in items[i + 1:]:
                    assert not is_isomorphic(a, b), (k1, k2)
