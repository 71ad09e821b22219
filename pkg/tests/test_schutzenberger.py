"""Tests for the Schutzenberger category D(S), its functors and the Freyd quotient."""

import pytest

import config
from categories.core import verify_category
from categories.functors import check_functor, identity_functor
from categories.isomorphism import find_category_isomorphism
from categories.sfs import is_complete, is_proper, verify_grandis_properties, verify_sfs
from constructions.freyd import build_freyd_quotient
from constructions.schutzenberger import (
    DTriple,
    all_witness_labels,
    build_d_category,
    compose_d,
    d_arrow_count,
    d_category_for,
    d_functor,
)
from constructions.sigma import certify_sfs
from corpus import build_example
from models.errors import BudgetExceeded, InvalidHomomorphism, NotAMonoid, NotComposable
from semigroups.homomorphisms import identity_homomorphism
from semigroups.structures import Homomorphism
from tests.conftest import MEDIUM_MONOIDS, SMALL_MONOIDS, build_monoid, monoid_id

SEMIGROUPS = SMALL_MONOIDS + MEDIUM_MONOIDS + [("left_zero", (2,)), ("left_zero", (3,))]


# =============================================================================
# Construction
# =============================================================================

class TestBuild:
    """Tests for the arrows, composition and SFS of D(S)."""

    def test_s2_has_every_triple(self, s2):
        """S(2) is a group, so every (a, x, b) is an arrow."""
        d = build_d_category(s2)

        assert d.cat.object_count == 2
        assert d.cat.arrow_count == 8
        assert d.unit == s2.identity
        assert d.cat.object_labels == ("(1 2)", "(2 1)")

    def test_arrow_order(self, s2):
        """Arrows are sorted by (dom, cod, label)."""
        d = build_d_category(s2)
        keys = [(t.dom, t.cod, t.label) for t in d.triples]

        assert keys == sorted(keys)

    def test_left_zero_triples(self):
        """With xy = x only (a, a, b) survives."""
        lz = build_example("left_zero", 3)
        d = build_d_category(lz)

        assert d.unit is None
        assert all(t.label == t.dom for t in d.triples)
        assert d.cat.arrow_count == 9

    def test_compose_through_identity(self, s2):
        """(1, s, s) then (s, s, 1) is (1, s, 1) with the adjoined identity as witness."""
        one, swap = s2.index_of("(1 2)"), s2.index_of("(2 1)")
        composite = compose_d(DTriple(one, swap, swap), DTriple(swap, swap, one), s2)

        assert composite == DTriple(one, swap, one)

    def test_compose_needs_matching_ends(self, s2):
        with pytest.raises(NotComposable):
            compose_d(DTriple(0, 0, 0), DTriple(1, 1, 1), s2)

    def test_identities_and_classes(self, t2):
        """E holds (a, x, x), M holds (x, x, b) and (a, a, a) is the identity."""
        d = build_d_category(t2)

        for a in t2.elements:
            assert d.cat.identity_of[a] == d.arrow_of(a, a, a)
        for f, t in enumerate(d.triples):
            assert (f in d.e_arrows) == (t.label == t.cod)
            assert (f in d.m_arrows) == (t.label == t.dom)

    def test_factorization_through_label(self, t2):
        """(a, x, b) factors as (a, x, x) then (x, x, b)."""
        d = build_d_category(t2)
        for f, t in enumerate(d.triples):
            e, m = d.factorize(f)
            assert d.triples[e] == DTriple(t.dom, t.label, t.label)
            assert d.triples[m] == DTriple(t.label, t.label, t.cod)

    def test_missing_triple(self, t2):
        """A constant is not in the right ideal of another constant."""
        d = build_d_category(t2)
        c1, c2 = t2.index_of("(1 1)"), t2.index_of("(2 2)")
        with pytest.raises(KeyError):
            d.arrow_of(c1, 0, c1)
        assert DTriple(c1, c2, c2).is_valid(t2)


# =============================================================================
# Witness Independence
# =============================================================================

class TestWitnessIndependence:
    """The composite label never depends on the chosen witness."""

    @pytest.mark.parametrize("case", SEMIGROUPS, ids=monoid_id)
    def test_every_witness_agrees(self, case):
        semigroup = build_monoid(case)
        d = build_d_category(semigroup)
        for f in d.triples:
            for g in d.triples:
                if f.cod == g.dom:
                    assert len(all_witness_labels(f, g, semigroup)) == 1

    @pytest.mark.parametrize("case", SEMIGROUPS, ids=monoid_id)
    def test_checked_build_matches(self, case):
        """Building with every witness evaluated gives the same category."""
        semigroup = build_monoid(case)

        assert build_d_category(semigroup, check_witnesses=True).cat == build_d_category(semigroup).cat


# =============================================================================
# D(M) as an SFS
# =============================================================================

class TestDIsSfs:
    """D(M) of a monoid is a proper, Grandis, unital, complete and thin SFS."""

    @pytest.mark.parametrize("case", SMALL_MONOIDS + MEDIUM_MONOIDS, ids=monoid_id)
    def test_certificate(self, case):
        monoid = build_monoid(case)
        d = build_d_category(monoid)
        certificate = certify_sfs(d)

        assert certificate.all_pass
        assert certificate.unit == monoid.identity

    @pytest.mark.parametrize("case", SMALL_MONOIDS + MEDIUM_MONOIDS, ids=monoid_id)
    def test_grandis_and_proper(self, case):
        d = build_d_category(build_monoid(case))

        assert verify_sfs(d).passed
        assert verify_grandis_properties(d).passed
        assert is_proper(d)
        assert is_complete(d)

    @pytest.mark.parametrize("case", [("left_zero", (2,)), ("left_zero", (3,))], ids=monoid_id)
    def test_semigroup_d_has_unique_factorization(self, case):
        """Without an identity D(S) still factors uniquely but has no unit."""
        d = build_d_category(build_monoid(case))

        assert verify_sfs(d).passed
        assert d.unit is None


# =============================================================================
# Functoriality
# =============================================================================

class TestDFunctor:
    """Tests for D(h)."""

    def test_identity(self, t2):
        d = build_d_category(t2)

        assert d_functor(identity_homomorphism(t2)) == identity_functor(d)

    def test_isomorphism_is_pointed(self, s2):
        z2 = build_example("cyclic", 2)
        functor = d_functor(Homomorphism(z2, s2, (0, 1)))
        report = check_functor(functor, sfs_preserving=True, pointed=True, semi_pointed=True)

        assert report.passed
        assert report.pointed

    def test_constant_map_preserves_sfs(self, semilattice):
        """The constant map onto a is SFS-preserving but not pointed."""
        functor = d_functor(Homomorphism(semilattice, semilattice, (1, 1)))
        report = check_functor(functor, sfs_preserving=True, pointed=True)

        assert report.sfs_preserving
        assert report.pointed is False

    def test_rejects_non_homomorphism(self):
        z2 = build_example("cyclic", 2)
        with pytest.raises(InvalidHomomorphism):
            d_functor(Homomorphism(z2, z2, (1, 1)))


# =============================================================================
# Freyd Quotient
# =============================================================================

class TestFreyd:
    """The square quotient of the arrow category is isomorphic to D(M)."""

    @pytest.mark.parametrize("case", SMALL_MONOIDS, ids=monoid_id)
    def test_isomorphic_to_d(self, case):
        monoid = build_monoid(case)
        quotient = build_freyd_quotient(monoid)
        d = build_d_category(monoid)

        assert quotient.arrow_count == d.cat.arrow_count
        assert find_category_isomorphism(quotient, d.cat) is not None

    def test_labels(self, s2):
        quotient = build_freyd_quotient(s2)

        assert quotient.arrow_label(quotient.identity_of[0]) == "(1 2) [(1 2)] (1 2)"

    def test_needs_monoid(self):
        with pytest.raises(NotAMonoid):
            build_freyd_quotient(build_example("left_zero", 2))


# =============================================================================
# Arrow Cap and Restricted Targets
# =============================================================================

class TestArrowCap:
    """D(S) is sized from its ideals before anything is built."""

    @pytest.mark.parametrize("case", SEMIGROUPS, ids=monoid_id)
    def test_count_matches_build(self, case):
        semigroup = build_monoid(case)

        assert d_arrow_count(semigroup) == build_d_category(semigroup).cat.arrow_count

    def test_d_category_past_cap(self, monkeypatch, t3):
        monkeypatch.setattr(config, "ARROW_CAP", 100)

        with pytest.raises(BudgetExceeded):
            build_d_category(t3)

    def test_freyd_quotient_past_cap(self, monkeypatch, t3):
        monkeypatch.setattr(config, "ARROW_CAP", 100)

        with pytest.raises(BudgetExceeded):
            build_freyd_quotient(t3)

    def test_restricted_support(self, t3):
        """Outside the support only identities remain; the identity of S is always kept."""
        x = t3.index_of("(1 1 2)")
        d = build_d_category(t3, support={x})

        assert d.support == frozenset({x, t3.identity})
        assert d.cat.object_count == t3.size
        assert d.cat.arrow_count == d_arrow_count(t3, d.support)
        assert all(t.dom == t.label == t.cod for t in d.triples if t.dom not in d.support)
        assert verify_category(d.cat).passed

    def test_functor_into_restricted_target(self, monkeypatch, s2, t2):
        """Past the cap, D(h) lands in D(T) restricted to the image of h."""
        monkeypatch.setattr(config, "ARROW_CAP", 18)
        inclusion = Homomorphism(s2, t2, (0, 1))
        functor = d_functor(inclusion)

        assert d_category_for(t2, [inclusion]).support == frozenset({0, 1})
        assert functor.target.support == frozenset({0, 1})
        assert check_functor(functor, sfs_preserving=True, pointed=True, semi_pointed=True).passed
