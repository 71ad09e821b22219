"""Tests for certification, the Sigma reconstruction and the counit D(Sigma(A)) -> A."""

import pytest

from categories.functors import compose_functors, identity_functor
from categories.structures import Functor, SfsCategory
from constructions.schutzenberger import build_d_category, d_functor
from constructions.sigma import (
    UcCtsfs,
    certify_sfs,
    counit_pair,
    hom_monoid_iso,
    sigma_functor,
    sigma_monoid,
    star,
    unit_is_identity,
)
from corpus import build_example
from models.errors import CertificateError, NotAMonoid, NotSemiPointed
from semigroups.homomorphisms import check_homomorphism
from semigroups.structures import Homomorphism
from tests.conftest import MEDIUM_MONOIDS, SMALL_MONOIDS, build_monoid, monoid_id
from tests.mutations import drop_from_m, first_non_identity


# =============================================================================
# Certification
# =============================================================================

class TestCertify:
    """Tests for the five-part certificate."""

    @pytest.mark.parametrize("n", range(7))
    def test_chain_min(self, n):
        """chain_min(n) is a uc-CTSFS with unit n."""
        certified = UcCtsfs.certify(build_example("chain_min", n))

        assert certified.zeta == n
        assert certified.certificate.all_pass

    def test_powerset_failures(self):
        """powerset(2) factors uniquely and is complete, but is neither thin nor unital."""
        certificate = certify_sfs(build_example("powerset", 2))

        assert certificate.unique_factorization
        assert certificate.complete
        assert not certificate.thin_e
        assert certificate.thin_m
        assert not certificate.unital
        with pytest.raises(CertificateError) as exc:
            UcCtsfs.certify(build_example("powerset", 2))
        assert exc.value.failed == ["thin_e", "unital"]

    def test_unit_found_when_undeclared(self):
        """Without a declared unit the first unital object is used."""
        chain = build_example("chain_min", 2)
        bare = SfsCategory.build(chain.cat, chain.e_arrows.arrow_set, chain.m_arrows.arrow_set)

        assert UcCtsfs.certify(bare).zeta == 2

    def test_mutation_fails_certification(self):
        """Dropping an M-arrow loses unique factorization."""
        chain = build_example("chain_min", 2)
        broken = drop_from_m(chain, first_non_identity(chain, in_m=True))
        with pytest.raises(CertificateError) as exc:
            UcCtsfs.certify(broken)

        assert "unique_factorization" in exc.value.failed


# =============================================================================
# Sigma
# =============================================================================

class TestSigmaMonoid:
    """Tests for the reconstructed monoid."""

    @pytest.mark.parametrize("n", range(6))
    def test_chain_gives_min_monoid(self, n):
        """a * b is the middle of a >-> n ->> b, which is min(a, b)."""
        certified = UcCtsfs.certify(build_example("chain_min", n))

        assert sigma_monoid(certified) == build_example("min_monoid", n)
        assert star(certified, 0, n) == 0

    @pytest.mark.parametrize("case", SMALL_MONOIDS + MEDIUM_MONOIDS + [("min_monoid", (6,))], ids=monoid_id)
    def test_round_trip(self, case):
        """Sigma(D(M)) reproduces the table, identity and labels of M."""
        assert unit_is_identity(build_monoid(case))

    def test_round_trip_small_submonoids(self):
        """Every submonoid of T(3) with at most four elements survives the round trip."""
        bundle = build_example("submonoids_t3")

        assert all(unit_is_identity(m) for m in bundle.semigroups.values())

    def test_round_trip_needs_monoid(self):
        with pytest.raises(NotAMonoid):
            unit_is_identity(build_example("left_zero", 2))

    @pytest.mark.parametrize("case", SMALL_MONOIDS + MEDIUM_MONOIDS, ids=monoid_id)
    def test_hom_monoid(self, case):
        """x -> (zeta ->> x >-> zeta) is a monoid isomorphism onto C(zeta, zeta)."""
        monoid = build_monoid(case)
        certified = UcCtsfs.certify(build_d_category(monoid))
        hom_monoid, phi = hom_monoid_iso(certified)

        assert hom_monoid.size == monoid.size
        assert sorted(phi) == list(range(monoid.size))
        assert check_homomorphism(Homomorphism(monoid, hom_monoid, tuple(phi)), monoid=True)

    @pytest.mark.parametrize("n", range(6))
    def test_hom_monoid_of_chain(self, n):
        """On chain_min(n) the unit hom-monoid is {0..n} under min."""
        certified = UcCtsfs.certify(build_example("chain_min", n))
        hom_monoid, phi = hom_monoid_iso(certified)
        sigma = sigma_monoid(certified)

        assert hom_monoid.size == n + 1
        assert sorted(phi) == list(range(n + 1))
        assert check_homomorphism(Homomorphism(sigma, hom_monoid, tuple(phi)), monoid=True)


# =============================================================================
# Counit
# =============================================================================

class TestCounit:
    """Tests for the counit and its inverse."""

    @pytest.mark.parametrize("n", range(6))
    def test_chain_min(self, n):
        counit, inverse = counit_pair(UcCtsfs.certify(build_example("chain_min", n)))

        assert compose_functors(counit, inverse).arrow_map == identity_functor(counit.source).arrow_map
        assert compose_functors(inverse, counit).arrow_map == identity_functor(inverse.source).arrow_map

    @pytest.mark.parametrize("case", SMALL_MONOIDS + MEDIUM_MONOIDS, ids=monoid_id)
    def test_d_of_monoid(self, case):
        """For A = D(M) the counit is identity on objects."""
        d = build_d_category(build_monoid(case))
        counit, _ = counit_pair(UcCtsfs.certify(d))

        assert counit.object_map == tuple(d.cat.objects)
        assert counit.arrow_map == tuple(range(d.cat.arrow_count))


# =============================================================================
# Sigma on Functors
# =============================================================================

class TestSigmaFunctor:
    """Tests for Sigma applied to SFS functors."""

    def test_recovers_homomorphism(self, s2):
        """Sigma(D(h)) = h."""
        z2 = build_example("cyclic", 2)
        h = Homomorphism(z2, s2, (0, 1))

        assert sigma_functor(d_functor(h), pointed=True) == h

    def test_semi_pointed_functor(self, semilattice):
        """The point sent to a gives the semigroup map 1 -> a."""
        trivial = build_example("trivial")
        d1, d2 = build_d_category(trivial), build_d_category(semilattice)
        functor = Functor(d1, d2, (1,), (d2.cat.identity_of[1],))
        h = sigma_functor(functor)

        assert h.map == (1,)
        with pytest.raises(NotSemiPointed):
            sigma_functor(functor, pointed=True)

    def test_rejects_non_semi_pointed(self, s2):
        trivial = build_example("trivial")
        d1, d2 = build_d_category(trivial), build_d_category(s2)
        swap = s2.index_of("(2 1)")
        functor = Functor(d1, d2, (swap,), (d2.cat.identity_of[swap],))
        with pytest.raises(NotSemiPointed):
            sigma_functor(functor)
