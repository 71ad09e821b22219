"""Tests for the example registry and its builders."""

import pytest

from categories.core import verify_category
from corpus import CORPUS, build_example, get_entry, list_examples, submonoids_t3
from models.errors import NotConstructible, ParamOutOfRange, UnknownExample
from models.schemas import ExampleKind, ExampleSpec
from semigroups.homomorphisms import check_homomorphism


class TestRegistry:
    """Tests for lookup and parameter validation."""

    def test_names_are_unique(self):
        names = [info.name for info in list_examples()]

        assert len(names) == len(set(names)) == len(CORPUS)
        assert {"trivial", "t_monoid", "powerset", "chain_min", "paper_s2_t4", "naturals_add"} <= set(names)

    def test_kinds(self):
        assert get_entry("powerset").info.kind == ExampleKind.CATEGORY
        assert get_entry("paper_s2_t4").info.kind == ExampleKind.BUNDLE
        assert get_entry("naturals_add").info.kind == ExampleKind.DOCUMENTATION

    def test_unknown_name(self):
        with pytest.raises(UnknownExample):
            build_example("free_monoid")

    @pytest.mark.parametrize("params", [(9,), (0,), (2, 3), ()])
    def test_bad_parameters(self, params):
        """cyclic takes exactly one parameter in 1..8."""
        with pytest.raises(ParamOutOfRange):
            build_example("cyclic", *params)

    def test_infinite_example(self):
        with pytest.raises(NotConstructible):
            build_example("naturals_add")

    def test_spec_input(self):
        """An ExampleSpec builds the same object as name and parameters."""
        assert build_example(ExampleSpec(name="cyclic", params=(3,))) == build_example("cyclic", 3)

    def test_results_are_cached(self):
        assert build_example("t_monoid", 3) is build_example("t_monoid", 3)


class TestSemigroups:
    """Sizes and identities of the built-in semigroups."""

    @pytest.mark.parametrize("name,params,size,identity", [
        ("trivial", (), 1, 0),
        ("cyclic", (5,), 5, 0),
        ("min_monoid", (0,), 1, 0),
        ("min_monoid", (4,), 5, 4),
        ("semilattice2", (), 2, 0),
        ("sym_group", (1,), 1, 0),
        ("t_monoid", (1,), 1, 0),
    ])
    def test_size_and_identity(self, name, params, size, identity):
        semigroup = build_example(name, *params)

        assert semigroup.size == size
        assert semigroup.identity == identity

    def test_left_zero(self):
        lz = build_example("left_zero", 4)

        assert lz.identity is None
        assert all(lz.mul(x, y) == x for x in lz.elements for y in lz.elements)

    def test_min_monoid_products(self):
        m = build_example("min_monoid", 3)

        assert m.mul(1, 3) == 1
        assert m.mul(2, 0) == 0


class TestCategories:
    """The built-in SFS categories satisfy the axioms they are registered with."""

    def test_powerset_two(self):
        sfs = build_example("powerset", 2)

        assert sfs.cat.object_count == 4
        assert sfs.cat.arrow_count == 18
        assert sfs.unit is None
        assert sfs.cat.object_labels == ("{}", "{1}", "{2}", "{1,2}")

    def test_powerset_empty(self):
        sfs = build_example("powerset", 0)

        assert sfs.cat.object_count == 1
        assert sfs.cat.arrow_count == 1

    @pytest.mark.parametrize("n", [0, 3, 6])
    def test_chain_min(self, n):
        """n + 1 objects and one arrow per (a, x, b) with x <= min(a, b)."""
        sfs = build_example("chain_min", n)
        expected = sum(min(a, b) + 1 for a in range(n + 1) for b in range(n + 1))

        assert sfs.cat.object_count == n + 1
        assert sfs.cat.arrow_count == expected
        assert sfs.unit == n
        assert verify_category(sfs.cat).passed


class TestBundles:
    """Tests for the multi-object examples."""

    def test_s2_t4_bundle_labels(self, s2_t4_bundle):
        s2, t4 = s2_t4_bundle.semigroups["s2"], s2_t4_bundle.semigroups["t4"]
        swap = s2.index_of("(2 1)")
        images = {key: t4.label(h(swap)) for key, h in s2_t4_bundle.homomorphisms.items()}

        assert images == {"f": "(2 1 3 4)", "g": "(2 1 3 3)", "h": "(2 1 4 4)"}
        assert t4.size == 256
        assert all(check_homomorphism(h) for h in s2_t4_bundle.homomorphisms.values())
        assert t4.label(s2_t4_bundle.elements["beta"]) == "(1 2 4 4)"

    def test_small_submonoids(self):
        monoids = submonoids_t3()
        carriers = [frozenset(m.labels) for m in monoids]

        assert len(carriers) == len(set(carriers))
        assert all(m.size <= 4 for m in monoids)
        assert all(m.label(m.one) == "(1 2 3)" for m in monoids)
        assert monoids[0].size == 1
        assert [m.size for m in monoids] == sorted(m.size for m in monoids)

    def test_cached_bundle_is_read_only(self, s2_t4_bundle):
        with pytest.raises(TypeError):
            s2_t4_bundle.elements["alpha"] = 0
        with pytest.raises(TypeError):
            del s2_t4_bundle.homomorphisms["f"]

        again = build_example("paper_s2_t4")
        assert again is s2_t4_bundle
        assert set(again.homomorphisms) == {"f", "g", "h"}

    def test_submonoid_bundle_matches(self):
        bundle = build_example("submonoids_t3")

        assert list(bundle.semigroups.values()) == submonoids_t3()
