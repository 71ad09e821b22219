"""Tests for finite categories, strict factorization systems, functors and natural transformations."""

import pytest

from categories.core import inverse_of, isomorphisms, opposite, verify_category
from categories.functors import (
    check_functor,
    check_natural_transformation,
    compose_functors,
    enumerate_natural_transformations,
    identity_functor,
    identity_natural_transformation,
    vcompose_nat,
)
from categories.isomorphism import find_category_isomorphism
from categories.sfs import (
    dual_sfs,
    first_unital_object,
    is_complete,
    is_proper,
    is_thin,
    is_unital_at,
    parallel_pair,
    spanned_ofs,
    verify_grandis_properties,
    verify_sfs,
)
from categories.structures import FinCategory, Functor, NatTransf, SfsCategory
from constructions.schutzenberger import build_d_category
from corpus import build_example
from models.errors import MissingUnit, NotComposable, PreconditionFailed
from tests.mutations import add_to_e, drop_composite, drop_from_m, first_non_identity, retarget_composite


def chain_arrow(sfs: SfsCategory, a: int, x: int, b: int) -> int:
    return sfs.cat.arrow_labels.index(f"{a} -{x}-> {b}")


def v_shape() -> SfsCategory:
    """0 ->> 1 and 0 >-> 2 with nothing else besides identities."""
    cat = FinCategory(
        object_count=3,
        arrows=((0, 0), (1, 1), (2, 2), (0, 1), (0, 2)),
        identity_of=(0, 1, 2),
        compose={
            (0, 0): 0, (1, 1): 1, (2, 2): 2,
            (0, 3): 3, (3, 1): 3,
            (0, 4): 4, (4, 2): 4,
        },
    )
    return SfsCategory.build(cat, [0, 1, 2, 3], [0, 1, 2, 4])


def delooping(group) -> FinCategory:
    """One object, one arrow per element, composed by the group product."""
    n = group.size
    return FinCategory(
        object_count=1,
        arrows=((0, 0),) * n,
        identity_of=(group.identity,),
        compose={(x, y): group.mul(x, y) for x in range(n) for y in range(n)},
    )


# =============================================================================
# Category Axioms
# =============================================================================

class TestVerifyCategory:
    """Tests for the category axiom checks."""

    def test_corpus_categories_pass(self):
        """chain_min and powerset satisfy the axioms."""
        assert verify_category(build_example("chain_min", 2).cat).passed
        assert verify_category(build_example("powerset", 2).cat).passed

    def test_missing_composite(self):
        """Dropping a composable pair is reported."""
        chain = build_example("chain_min", 2)
        broken = drop_composite(chain.cat, (chain.cat.identity_of[0], chain.cat.identity_of[0]))
        report = verify_category(broken)

        assert not report.passed
        assert report.failed_checks() == {"composition_domain"}

    def test_wrong_identity_composite(self):
        """Retargeting id then f to a parallel arrow breaks the identity law."""
        chain = build_example("chain_min", 2)
        f, other = chain_arrow(chain, 2, 0, 2), chain_arrow(chain, 2, 1, 2)
        broken = retarget_composite(chain.cat, (chain.cat.identity_of[2], f), other)

        assert "identities" in verify_category(broken).failed_checks()

    def test_opposite_twice(self):
        """(C^op)^op composes exactly like C."""
        cat = build_example("chain_min", 2).cat
        twice = opposite(opposite(cat))

        assert twice.arrows == cat.arrows
        assert twice.compose == cat.compose
        assert verify_category(opposite(cat)).passed

    def test_composition_errors(self):
        """comp refuses pairs outside the table."""
        chain = build_example("chain_min", 2)
        with pytest.raises(NotComposable):
            chain.cat.comp(chain.cat.identity_of[0], chain.cat.identity_of[1])

    def test_isomorphisms_of_chain(self):
        """Only identities are invertible in chain_min."""
        cat = build_example("chain_min", 2).cat

        assert isomorphisms(cat) == sorted(cat.identity_of)
        assert inverse_of(cat, chain_arrow(build_example("chain_min", 2), 1, 0, 2)) is None


# =============================================================================
# Strict Factorization Systems
# =============================================================================

class TestVerifySfs:
    """Tests for unique factorization and its mutations."""

    def test_chain_factorizations(self):
        """a -x-> b factors as a ->> x >-> b."""
        chain = build_example("chain_min", 3)
        report = verify_sfs(chain)

        assert report.passed
        assert len(report.factorization) == chain.cat.arrow_count
        f = chain_arrow(chain, 3, 1, 2)
        e, m = report.factorization[f]
        assert e == chain_arrow(chain, 3, 1, 1)
        assert m == chain_arrow(chain, 1, 1, 2)
        assert chain.middle_object(f) == 1

    def test_dropping_an_m_arrow_fails(self):
        """Removing a non-identity M-arrow leaves arrows without factorization."""
        chain = build_example("chain_min", 2)
        broken = drop_from_m(chain, first_non_identity(chain, in_m=True))
        report = verify_sfs(broken)

        assert not report.passed
        assert "factorization" in report.failed_checks()
        assert report.factorization == {}

    def test_adding_to_e_breaks_uniqueness(self):
        """An M-arrow also placed in E factors twice."""
        chain = build_example("chain_min", 2)
        m = first_non_identity(chain, in_m=True)
        report = verify_sfs(add_to_e(chain, m))

        assert any(v.check == "factorization" and v.witness[0] == m for v in report.violations)
        with pytest.raises(NotComposable):
            add_to_e(chain, m).factorize(m)

    def test_dual(self):
        """Reversing arrows and swapping E with M keeps unique factorization."""
        chain = build_example("chain_min", 2)

        assert verify_sfs(dual_sfs(chain)).passed
        assert not verify_sfs(dual_sfs(drop_from_m(chain, first_non_identity(chain, in_m=True)))).passed

    def test_grandis_intersection(self):
        """A non-identity arrow in both E and M is reported."""
        chain = build_example("chain_min", 2)
        m = first_non_identity(chain, in_m=True)
        report = verify_grandis_properties(add_to_e(chain, m))

        assert "intersection" in report.failed_checks()

    def test_spanned_ofs_without_isomorphisms(self):
        """With only identities invertible the spanned system is (E, M) itself."""
        chain = build_example("chain_min", 2)
        big_e, big_m = spanned_ofs(chain)

        assert big_e == chain.e_arrows.arrow_set
        assert big_m == chain.m_arrows.arrow_set

    def test_spanned_ofs_of_group(self, s2):
        """Every arrow of D(S(2)) is invertible, so both classes fill the category."""
        d = build_d_category(s2)
        everything = frozenset(range(d.cat.arrow_count))

        assert spanned_ofs(d) == (everything, everything)


class TestSfsProperties:
    """Tests for thinness, properness, unitality and completeness."""

    def test_chain_is_unital_at_top(self):
        """chain_min(n) is unital at n only."""
        chain = build_example("chain_min", 2)

        assert is_unital_at(chain, 2)
        assert not is_unital_at(chain, 0)
        assert first_unital_object(chain) == 2

    def test_chain_is_thin_proper_complete(self):
        chain = build_example("chain_min", 3)

        assert is_thin(chain.e_arrows) and is_thin(chain.m_arrows)
        assert is_proper(chain)
        assert is_complete(chain)

    def test_powerset_not_thin(self):
        """{1,2} has two surjections onto itself."""
        p2 = build_example("powerset", 2)

        assert not is_thin(p2.e_arrows)
        assert is_thin(p2.m_arrows)
        pair = parallel_pair(p2.e_arrows)
        assert pair is not None
        assert p2.cat.arrows[pair[0]] == p2.cat.arrows[pair[1]]
        assert parallel_pair(p2.m_arrows) is None

    @pytest.mark.parametrize("k", [1, 2])
    def test_powerset_complete_not_unital(self, k):
        p = build_example("powerset", k)

        assert is_complete(p)
        assert first_unital_object(p) is None

    def test_v_shape_not_complete(self):
        """A lone span with no cospan to close it."""
        v = v_shape()

        assert verify_sfs(v).passed
        assert not is_complete(v)


# =============================================================================
# Functors
# =============================================================================

class TestFunctors:
    """Tests for functor checks and the SFS flags."""

    def test_identity_functor(self):
        chain = build_example("chain_min", 2)
        report = check_functor(identity_functor(chain), sfs_preserving=True, pointed=True, semi_pointed=True)

        assert report.passed
        assert report.sfs_preserving and report.pointed and report.semi_pointed

    def test_composition_law_violation(self):
        """Sending every arrow to an identity breaks the endpoint law."""
        chain = build_example("chain_min", 1)
        cat = chain.cat
        bad = Functor(chain, chain, (0, 1), tuple(cat.identity_of[0] for _ in range(cat.arrow_count)))
        report = check_functor(bad)

        assert not report.passed
        assert "endpoints" in report.failed_checks()

    def test_flags_need_sfs(self):
        cat = build_example("chain_min", 1).cat
        with pytest.raises(PreconditionFailed):
            check_functor(identity_functor(cat), sfs_preserving=True)

    def test_pointed_needs_units(self):
        p1 = build_example("powerset", 1)
        with pytest.raises(MissingUnit):
            check_functor(identity_functor(p1), pointed=True)

    def test_not_semi_pointed(self, s2):
        """The point of D(1) sent to the swap of S(2) is not semi-pointed."""
        d1 = build_d_category(build_example("trivial"))
        d2 = build_d_category(s2)
        swap = s2.index_of("(2 1)")
        functor = Functor(d1, d2, (swap,), (d2.cat.identity_of[swap],))
        report = check_functor(functor, sfs_preserving=True, pointed=True, semi_pointed=True)

        assert report.sfs_preserving
        assert report.pointed is False
        assert report.semi_pointed is False

    def test_semi_pointed_not_pointed(self, semilattice):
        """The point sent to the idempotent a of {1, a} is semi-pointed."""
        d1 = build_d_category(build_example("trivial"))
        d2 = build_d_category(semilattice)
        functor = Functor(d1, d2, (1,), (d2.cat.identity_of[1],))
        report = check_functor(functor, sfs_preserving=True, pointed=True, semi_pointed=True)

        assert report.semi_pointed is True
        assert report.pointed is False

    def test_compose_functors(self):
        chain = build_example("chain_min", 2)
        ident = identity_functor(chain)

        assert compose_functors(ident, ident) == ident
        with pytest.raises(NotComposable):
            compose_functors(ident, identity_functor(build_example("chain_min", 1)))


class TestNaturalTransformations:
    """Tests for natural transformation checks and enumeration."""

    @pytest.mark.parametrize("name,params,count", [
        ("sym_group", (3,), 1),
        ("cyclic", (3,), 3),
        ("cyclic", (4,), 4),
    ])
    def test_center_of_group(self, name, params, count):
        """Endo-transformations of the identity on a one-object group are its center."""
        ident = identity_functor(delooping(build_example(name, *params)))
        nats = enumerate_natural_transformations(ident, ident)

        assert len(nats) == count
        assert all(check_natural_transformation(nat).passed for nat in nats)

    def test_vertical_composition(self):
        """Components compose in the group."""
        z3 = build_example("cyclic", 3)
        ident = identity_functor(delooping(z3))
        one, two = (n for n in enumerate_natural_transformations(ident, ident) if n.components[0] != 0)

        assert vcompose_nat(one, two) == identity_natural_transformation(ident)

    def test_non_natural_components(self):
        """A non-central component fails naturality."""
        ident = identity_functor(delooping(build_example("sym_group", 3)))
        bad = NatTransf(ident, ident, (1,))

        assert "naturality" in check_natural_transformation(bad).failed_checks()

    def test_mismatched_functors(self):
        first = identity_functor(build_example("chain_min", 1))
        second = identity_functor(build_example("chain_min", 2))
        with pytest.raises(PreconditionFailed):
            enumerate_natural_transformations(first, second)


# =============================================================================
# Category Isomorphism
# =============================================================================

class TestCategoryIsomorphism:
    """Tests for the invertible functor search."""

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_chain_is_d_of_min_monoid(self, n):
        """chain_min(n) and D(min_monoid(n)) are isomorphic as SFS categories."""
        chain = build_example("chain_min", n)
        d = build_d_category(build_example("min_monoid", n))
        found = find_category_isomorphism(chain, d)

        assert found is not None
        forward, inverse = found
        assert check_functor(forward, sfs_preserving=True).passed
        assert compose_functors(forward, inverse).arrow_map == tuple(range(chain.cat.arrow_count))

    def test_different_sizes(self):
        assert find_category_isomorphism(build_example("chain_min", 1), build_example("chain_min", 2)) is None
