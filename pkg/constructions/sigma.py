"""Reconstructing a monoid from a unital, complete and thin SFS category.

The product a * b is the middle object of the factorization of the
composite a >-> zeta ->> b.
"""

import logging
from dataclasses import dataclass, replace
from functools import cached_property

from categories.core import verify_category
from categories.functors import check_functor, compose_functors, identity_functor
from categories.sfs import first_unital_object, is_complete, is_thin, is_unital_at, verify_sfs
from categories.structures import Functor, SfsCategory
from constructions.schutzenberger import build_d_category
from models.errors import (
    CertificateError,
    InternalDisagreement,
    NotAMonoid,
    NotSemiPointed,
    VerificationFailed,
)
from models.schemas import SfsCertificate
from semigroups.core import make_from_table
from semigroups.homomorphisms import check_homomorphism
from semigroups.structures import FiniteSemigroup, Homomorphism

logger = logging.getLogger(__name__)


# =============================================================================
# Certification
# =============================================================================

def certify_sfs(sfs: SfsCategory) -> SfsCertificate:
    """Run the five checks behind a uc-CTSFS.

    Unitality is checked at the declared unit, or else at the first object
    where it holds.

    Raises:
        VerificationFailed: if the category axioms themselves fail
    """
    report = verify_category(sfs.cat)
    if not report.passed:
        first = report.violations[0]
        raise VerificationFailed("category axioms", f"{first.check} at {first.witness}")

    unique = verify_sfs(sfs).passed
    unit = sfs.unit if sfs.unit is not None else first_unital_object(sfs)
    unital = unit is not None and is_unital_at(sfs, unit)
    complete = False
    if unique:
        complete = is_complete(sfs if sfs.unit is not None else replace(sfs, unit=unit))
    return SfsCertificate(
        unique_factorization=unique,
        thin_e=is_thin(sfs.e_arrows),
        thin_m=is_thin(sfs.m_arrows),
        unital=unital,
        complete=complete,
        unit=unit,
    )


@dataclass(frozen=True)
class UcCtsfs:
    """An SFS category together with the certificate that it is a uc-CTSFS."""

    sfs: SfsCategory
    certificate: SfsCertificate

    @classmethod
    def certify(cls, sfs: SfsCategory) -> "UcCtsfs":
        """Certify an SFS category, fixing its unit.

        Raises:
            CertificateError: listing every failed check
        """
        certificate = certify_sfs(sfs)
        if not certificate.all_pass:
            logger.info("certification failed: %s", certificate.failures())
            raise CertificateError(certificate.failures())
        if sfs.unit is None:
            sfs = replace(sfs, unit=certificate.unit)
        return cls(sfs=sfs, certificate=certificate)

    @property
    def zeta(self) -> int:
        return self.sfs.zeta

    @cached_property
    def star_table(self) -> tuple[tuple[int, ...], ...]:
        cat, zeta = self.sfs.cat, self.zeta
        to_unit = [self.sfs.unique_m(a, zeta) for a in cat.objects]
        from_unit = [self.sfs.unique_e(zeta, b) for b in cat.objects]
        return tuple(
            tuple(self.sfs.middle_object(cat.compose[(to_unit[a], from_unit[b])]) for b in cat.objects)
            for a in cat.objects
        )


def star(certified: UcCtsfs, a: int, b: int) -> int:
    """Middle object of the factorization of a >-> zeta ->> b."""
    return certified.star_table[a][b]


# =============================================================================
# The Monoid and its Hom-monoid
# =============================================================================

def _zig_zag_middle(certified: UcCtsfs, a: int, b: int, c: int) -> int:
    """Middle object of a >-> zeta ->> b >-> zeta ->> c."""
    sfs, zeta = certified.sfs, certified.zeta
    cat = sfs.cat
    path = [sfs.unique_m(a, zeta), sfs.unique_e(zeta, b), sfs.unique_m(b, zeta), sfs.unique_e(zeta, c)]
    composite = path[0]
    for f in path[1:]:
        composite = cat.compose[(composite, f)]
    return sfs.middle_object(composite)


def sigma_monoid(certified: UcCtsfs) -> FiniteSemigroup:
    """(objects, *, zeta) as a finite monoid.

    Raises:
        InternalDisagreement: if a triple product differs from the middle
            object of the corresponding zig-zag
    """
    table = certified.star_table
    objects = certified.sfs.cat.objects
    for a in objects:
        for b in objects:
            for c in objects:
                if table[table[a][b]][c] != _zig_zag_middle(certified, a, b, c):
                    raise InternalDisagreement(f"triple product ({a}, {b}, {c}) differs from its zig-zag")
    return make_from_table(table, identity=certified.zeta, labels=certified.sfs.cat.object_labels)


def hom_monoid_iso(certified: UcCtsfs) -> tuple[FiniteSemigroup, list[int]]:
    """The endo-arrows at zeta under composition, and x -> (zeta ->> x >-> zeta).

    Returns:
        (hom-monoid, bijection) where bijection[x] indexes the hom-monoid

    Raises:
        VerificationFailed: if the map is not a monoid isomorphism from sigma_monoid
    """
    sfs, zeta = certified.sfs, certified.zeta
    cat = sfs.cat
    endos = cat.hom(zeta, zeta)
    position = {f: i for i, f in enumerate(endos)}
    table = [[position[cat.compose[(f, g)]] for g in endos] for f in endos]
    hom_monoid = make_from_table(
        table,
        identity=position[cat.identity_of[zeta]],
        labels=[cat.arrow_label(f) for f in endos],
    )

    phi = [position[cat.compose[(sfs.unique_e(zeta, x), sfs.unique_m(x, zeta))]] for x in cat.objects]
    if sorted(phi) != list(range(len(endos))):
        raise VerificationFailed("phi is a bijection onto C(zeta, zeta)")
    monoid = sigma_monoid(certified)
    iso = Homomorphism(monoid, hom_monoid, tuple(phi))
    if not check_homomorphism(iso, monoid=True):
        raise VerificationFailed("phi(x * y) = phi(x) phi(y)")
    return hom_monoid, phi


# =============================================================================
# Counit
# =============================================================================

def counit_pair(certified: UcCtsfs) -> tuple[Functor, Functor]:
    """The counit D(Sigma(A)) -> A and its inverse, both identity on objects.

    The counit sends a -x-> b to a ->> x >-> b; the inverse sends the
    factorization a ->> x >-> b back to the triple (a, x, b).

    Raises:
        VerificationFailed: if either functor fails its checks or the
            composites are not identities
    """
    sfs = certified.sfs
    cat = sfs.cat
    d = build_d_category(sigma_monoid(certified))

    forward_arrows = []
    for t in d.triples:
        e, m = sfs.unique_e(t.dom, t.label), sfs.unique_m(t.label, t.cod)
        if e is None or m is None:
            raise VerificationFailed("a ->> x and x >-> b exist", f"triple {t}")
        forward_arrows.append(cat.compose[(e, m)])

    backward_arrows = []
    for f in range(cat.arrow_count):
        e, _ = sfs.factorize(f)
        backward_arrows.append(d.arrow_of(cat.dom(f), cat.cod(e), cat.cod(f)))

    objects = tuple(cat.objects)
    counit = Functor(d, sfs, objects, tuple(forward_arrows))
    inverse = Functor(sfs, d, objects, tuple(backward_arrows))

    for name, functor in (("counit", counit), ("counit inverse", inverse)):
        report = check_functor(functor, sfs_preserving=True, pointed=True)
        if not report.passed:
            raise VerificationFailed(f"{name} is a pointed SFS functor", str(report.failed_checks()))
    if compose_functors(counit, inverse).arrow_map != identity_functor(d).arrow_map:
        raise VerificationFailed("counit then inverse is the identity of D(Sigma(A))")
    if compose_functors(inverse, counit).arrow_map != identity_functor(sfs).arrow_map:
        raise VerificationFailed("inverse then counit is the identity of A")
    return counit, inverse


def sigma_functor(functor: Functor, pointed: bool = False) -> Homomorphism:
    """The object map of an SFS-preserving semi-pointed functor, as a homomorphism.

    Args:
        pointed: Also require H(zeta) = zeta' and return a monoid homomorphism

    Raises:
        CertificateError: if either side is not a uc-CTSFS
        NotSemiPointed: if the functor is not SFS-preserving and semi-pointed
            (or not pointed when asked)
    """
    source = UcCtsfs.certify(functor.source)
    target = UcCtsfs.certify(functor.target)
    functor = replace(functor, source=source.sfs, target=target.sfs)
    report = check_functor(functor, sfs_preserving=True, semi_pointed=True, pointed=pointed)
    if not (report.sfs_preserving and report.semi_pointed):
        raise NotSemiPointed(f"functor fails {sorted(report.failed_checks())}")
    if pointed and not report.pointed:
        raise NotSemiPointed("functor does not send zeta to zeta'")

    h = Homomorphism(sigma_monoid(source), sigma_monoid(target), functor.object_map)
    if not check_homomorphism(h, monoid=pointed):
        raise VerificationFailed("h(a * b) = h(a) *' h(b)")
    return h


def unit_is_identity(monoid: FiniteSemigroup) -> bool:
    """Sigma(D(M)) is M itself: same table, identity and element order.

    Raises:
        NotAMonoid: if M has no identity
    """
    if not monoid.is_monoid:
        raise NotAMonoid("the round trip is defined for monoids")
    return sigma_monoid(UcCtsfs.certify(build_d_category(monoid))) == monoid
