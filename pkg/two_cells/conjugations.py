"""Conjugations: the 2-cells between semigroup homomorphisms of monoids.

An element alpha of M' is a conjugation f => g when f(1) alpha = alpha =
alpha g(1) and f(m) alpha = alpha g(m) for every m.
"""

import logging
from dataclasses import dataclass

import numpy as np

import config
from categories.functors import check_natural_transformation
from categories.structures import NatTransf
from constructions.schutzenberger import DCategory, DTriple, build_d_category, compose_d, d_category_for, d_functor
from models.errors import (
    InternalDisagreement,
    NotAConjugation,
    NotComposable,
    PreconditionFailed,
    SignatureMismatch,
    VerificationFailed,
)
from semigroups.core import is_idempotent
from semigroups.homomorphisms import compose_homomorphisms, identity_homomorphism
from semigroups.structures import Homomorphism

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Conjugation:
    """alpha: f => g, an element of the common target."""

    f: Homomorphism
    g: Homomorphism
    alpha: int

    @property
    def target(self):
        return self.f.target

    def __repr__(self) -> str:
        return f"Conjugation(alpha={self.target.label(self.alpha)})"


@dataclass(frozen=True)
class InverseWitness:
    """Result of inverting alpha: f => g."""

    beta: int
    gamma: Conjugation


def _require_parallel(f: Homomorphism, g: Homomorphism) -> None:
    if f.source != g.source or f.target != g.target:
        raise SignatureMismatch("homomorphisms do not share source and target")


# =============================================================================
# Checking and Composition
# =============================================================================

def is_conjugation(f: Homomorphism, g: Homomorphism, alpha: int) -> bool:
    """f(1) alpha = alpha = alpha g(1) and f(m) alpha = alpha g(m) for all m.

    Raises:
        SignatureMismatch: if f and g are not parallel
        NotAMonoid: if the common source has no identity
    """
    _require_parallel(f, g)
    arr = f.target.array
    if arr[f.image_of_one, alpha] != alpha or arr[alpha, g.image_of_one] != alpha:
        return False
    return bool((arr[f.array, alpha] == arr[alpha, g.array]).all())


def make_conjugation(f: Homomorphism, g: Homomorphism, alpha: int) -> Conjugation:
    """Raises NotAConjugation unless alpha: f => g."""
    if not is_conjugation(f, g, alpha):
        raise NotAConjugation(f"{f.target.label(alpha)} is not a conjugation between the given maps")
    return Conjugation(f, g, alpha)


def enumerate_conjugations(f: Homomorphism, g: Homomorphism) -> list[Conjugation]:
    """Every conjugation f => g, in element order.

    Raises:
        SignatureMismatch: if f and g are not parallel
    """
    _require_parallel(f, g)
    arr = f.target.array
    candidates = np.arange(f.target.size)
    ok = (arr[f.image_of_one, candidates] == candidates) & (arr[candidates, g.image_of_one] == candidates)
    ok &= (arr[f.array][:, candidates] == arr[candidates][:, g.array].T).all(axis=0)
    return [Conjugation(f, g, int(alpha)) for alpha in np.flatnonzero(ok)]


def identity_conjugation(f: Homomorphism) -> Conjugation:
    """f(1): f => f."""
    return make_conjugation(f, f, f.image_of_one)


def vcompose(first: Conjugation, second: Conjugation) -> Conjugation:
    """alpha1 alpha2: f => h for alpha1: f => g and alpha2: g => h.

    Raises:
        NotComposable: if first.g differs from second.f
    """
    if first.g != second.f:
        raise NotComposable("conjugations do not share the middle homomorphism")
    return make_conjugation(first.f, second.g, first.target.mul(first.alpha, second.alpha))


# =============================================================================
# Natural Transformations
# =============================================================================

def conj_to_nat(
    conjugation: Conjugation,
    source_d: DCategory | None = None,
    target_d: DCategory | None = None,
) -> NatTransf:
    """Components (f(x), f(x) alpha, g(x)) between D(f) and D(g).

    Without an explicit target, D of the target past the arrow cap is
    restricted to the images of f and g and the identity.

    Raises:
        VerificationFailed: if the components are not natural
    """
    f, g, alpha = conjugation.f, conjugation.g, conjugation.alpha
    source_d = source_d or build_d_category(f.source)
    target_d = target_d or d_category_for(f.target, [f, g])
    F = d_functor(f, source_d, target_d)
    G = d_functor(g, source_d, target_d)
    t = f.target
    components = tuple(target_d.arrow_of(f(x), t.mul(f(x), alpha), g(x)) for x in f.source.elements)
    nat = NatTransf(F, G, components)
    report = check_natural_transformation(nat)
    if not report.passed:
        raise VerificationFailed("F(u) alpha_b = alpha_a G(u)", str(report.failed_checks()))
    return nat


def nat_to_conj(nat: NatTransf) -> Conjugation:
    """The label of the component at the unit, as a conjugation between the object maps.

    Raises:
        PreconditionFailed: if the functors are not between D-categories of monoids
        NotAConjugation: if the recovered element fails the unit equations
    """
    F, G = nat.source_functor, nat.target_functor
    source_d, target_d = F.source, F.target
    if not (isinstance(source_d, DCategory) and isinstance(target_d, DCategory)):
        raise PreconditionFailed("natural transformation is not between D-categories")
    if source_d.unit is None:
        raise PreconditionFailed("source D-category has no unit")
    f = Homomorphism(source_d.semigroup, target_d.semigroup, F.object_map)
    g = Homomorphism(source_d.semigroup, target_d.semigroup, G.object_map)
    alpha = target_d.triples[nat.components[source_d.unit]].label
    return make_conjugation(f, g, alpha)


# =============================================================================
# Invertibility
# =============================================================================

def invert_conjugation(conjugation: Conjugation) -> InverseWitness | None:
    """Find beta with alpha beta = f(1) and beta alpha = g(1).

    beta is returned in the sandwiched form g(1) beta f(1), the unique
    solution fixed by both idempotents. The inverse 2-cell is
    gamma = beta alpha beta: g => f.

    Raises:
        VerificationFailed: if the inverse fails any of its equations
    """
    f, g, alpha = conjugation.f, conjugation.g, conjugation.alpha
    t = f.target
    f1, g1 = f.image_of_one, g.image_of_one
    beta = next(
        (b for b in t.elements if t.mul(alpha, b) == f1 and t.mul(b, alpha) == g1),
        None,
    )
    if beta is None:
        logger.debug("no inverse for %r", conjugation)
        return None
    beta = t.product(g1, beta, f1)

    ab, ba = t.mul(alpha, beta), t.mul(beta, alpha)
    if not (is_idempotent(t, ab) and is_idempotent(t, ba)):
        raise VerificationFailed("alpha beta and beta alpha are idempotent")
    gamma = make_conjugation(g, f, t.product(beta, alpha, beta))
    if vcompose(conjugation, gamma).alpha != f1:
        raise VerificationFailed("alpha gamma = f(1)")
    if vcompose(gamma, conjugation).alpha != g1:
        raise VerificationFailed("gamma alpha = g(1)")
    if t.product(alpha, gamma.alpha, alpha) != alpha or t.product(gamma.alpha, alpha, gamma.alpha) != gamma.alpha:
        raise VerificationFailed("gamma is a reflexive inverse of alpha")
    return InverseWitness(beta=beta, gamma=gamma)


# =============================================================================
# Triangle Identities
# =============================================================================

def _raw_triangles(f: Homomorphism, g: Homomorphism, eta: Conjugation, eps: Conjugation) -> bool:
    """The triangle identities read on D-arrows, component by component.

    eta has components (m, m eta, g f(m)) and eps has (f g(m'), f g(m') eps, m');
    composites are taken on triples, so neither D-category is built.
    """
    try:
        return _triangles_on_triples(f, g, eta, eps)
    except NotComposable:
        return False


def _triangles_on_triples(f: Homomorphism, g: Homomorphism, eta: Conjugation, eps: Conjugation) -> bool:
    M, M2 = f.source, f.target
    for m in M.elements:
        fm = f(m)
        f_eta = DTriple(fm, f(M.mul(m, eta.alpha)), f(g(fm)))
        eps_at = DTriple(f(g(fm)), M2.mul(f(g(fm)), eps.alpha), fm)
        if compose_d(f_eta, eps_at, M2, check_witnesses=True) != DTriple(fm, fm, fm):
            return False
    for m2 in M2.elements:
        gm2 = g(m2)
        eta_at = DTriple(gm2, M.mul(gm2, eta.alpha), g(f(gm2)))
        g_eps = DTriple(g(f(gm2)), g(M2.mul(f(gm2), eps.alpha)), gm2)
        if compose_d(eta_at, g_eps, M, check_witnesses=True) != DTriple(gm2, gm2, gm2):
            return False
    return True


def check_triangle_identities(
    f: Homomorphism,
    g: Homomorphism,
    eta: Conjugation,
    eps: Conjugation,
    raw_check: bool | None = None,
) -> bool:
    """f(1) = f(eta) eps and g(1') = eta g(eps).

    Args:
        eta: Conjugation Id_M => g f
        eps: Conjugation f g => Id_M'
        raw_check: Also evaluate the triangles on D-categories; defaults
            to SFS_DEBUG_WITNESS_CHECK

    Raises:
        SignatureMismatch: if eta or eps does not run between the right maps
        InternalDisagreement: if the raw and reduced forms differ
    """
    M, M2 = f.source, f.target
    if g.source != M2 or g.target != M:
        raise SignatureMismatch("g does not run back from the target of f")
    if eta.f != identity_homomorphism(M) or eta.g != compose_homomorphisms(f, g):
        raise SignatureMismatch("eta is not a conjugation Id => g f")
    if eps.f != compose_homomorphisms(g, f) or eps.g != identity_homomorphism(M2):
        raise SignatureMismatch("eps is not a conjugation f g => Id")

    first = f.image_of_one == M2.mul(f(eta.alpha), eps.alpha)
    second = g.image_of_one == M.mul(eta.alpha, g(eps.alpha))
    reduced = first and second

    if raw_check is None:
        raw_check = config.DEBUG_WITNESS_CHECK
    if raw_check:
        raw = _raw_triangles(f, g, eta, eps)
        if raw != reduced:
            raise InternalDisagreement(f"reduced triangle identities give {reduced}, raw give {raw}")
    return reduced
