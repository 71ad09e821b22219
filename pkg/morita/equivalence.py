"""Enlargements, corner monoids and adjoint equivalences of finite monoids.

M and M' are Morita equivalent when M' is isomorphic to a corner eMe for
an idempotent e with MeM = M, or equivalently when there is an adjoint
equivalence f: M -> M', g: M' -> M with invertible conjugations
eta: Id => g f and eps: f g => Id satisfying the triangle identities.
"""

import logging
from dataclasses import dataclass

import numpy as np

from models.budget import SearchBudget, as_budget
from models.errors import NotAMonoid, NotIdempotent, PreconditionFailed, VerificationFailed
from models.schemas import MoritaWitness
from semigroups.core import idempotents, is_idempotent, make_from_table
from semigroups.homomorphisms import (
    check_homomorphism,
    compose_homomorphisms,
    enumerate_homomorphisms,
    identity_homomorphism,
)
from semigroups.isomorphism import find_isomorphism
from semigroups.structures import FiniteSemigroup, Homomorphism
from two_cells.conjugations import (
    Conjugation,
    check_triangle_identities,
    invert_conjugation,
    is_conjugation,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EquivalencePackage:
    """An adjoint equivalence with the inverses of its unit and counit."""

    f: Homomorphism
    g: Homomorphism
    eta: Conjugation
    eps: Conjugation
    beta: int
    mu: int

    @property
    def source(self) -> FiniteSemigroup:
        return self.f.source

    @property
    def target(self) -> FiniteSemigroup:
        return self.f.target


@dataclass(frozen=True)
class EnlargementWitness:
    """e = g(1') with the corner eMe and the isomorphism M' -> eMe."""

    idempotent: int
    corner: FiniteSemigroup
    embedding: tuple[int, ...]
    iso: tuple[int, ...]
    inverse: tuple[int, ...]


def _require_idempotent(monoid: FiniteSemigroup, e: int) -> None:
    if not is_idempotent(monoid, e):
        raise NotIdempotent(f"element {monoid.label(e)} is not idempotent")


# =============================================================================
# Enlargements and Corners
# =============================================================================

def is_enlargement(monoid: FiniteSemigroup, e: int) -> bool:
    """MeM covers M.

    Raises:
        NotIdempotent: if e is not idempotent
    """
    _require_idempotent(monoid, e)
    arr = monoid.array
    products = arr[arr[:, e]]
    return np.unique(products).size == monoid.size


def corner_monoid(monoid: FiniteSemigroup, e: int) -> tuple[FiniteSemigroup, tuple[int, ...]]:
    """eMe with identity e.

    Returns:
        (corner, embedding) where embedding[i] is the element of M behind
        corner element i

    Raises:
        NotIdempotent: if e is not idempotent
    """
    _require_idempotent(monoid, e)
    arr = monoid.array
    carrier = tuple(np.unique(arr[arr[e]][:, e]).tolist())
    position = {x: i for i, x in enumerate(carrier)}
    table = [[position[monoid.table[x][y]] for y in carrier] for x in carrier]
    corner = make_from_table(table, identity=position[e], labels=[monoid.label(x) for x in carrier])
    return corner, carrier


# =============================================================================
# Adjoint Equivalences
# =============================================================================

def verify_package(package: EquivalencePackage) -> None:
    """Re-check every equation of an equivalence package from scratch.

    Raises:
        VerificationFailed: naming the first equation that fails
    """
    f, g, eta, eps = package.f, package.g, package.eta, package.eps
    M, M2 = f.source, f.target
    if not check_homomorphism(f):
        raise VerificationFailed("f(ab) = f(a) f(b)")
    if not check_homomorphism(g) or g.source != M2 or g.target != M:
        raise VerificationFailed("g: M' -> M is a homomorphism")
    gf, fg = compose_homomorphisms(f, g), compose_homomorphisms(g, f)
    if eta.f != identity_homomorphism(M) or eta.g != gf or not is_conjugation(eta.f, eta.g, eta.alpha):
        raise VerificationFailed("eta: Id => g f is a conjugation")
    if eps.f != fg or eps.g != identity_homomorphism(M2) or not is_conjugation(eps.f, eps.g, eps.alpha):
        raise VerificationFailed("eps: f g => Id is a conjugation")
    if M.mul(eta.alpha, package.beta) != M.one or M.mul(package.beta, eta.alpha) != gf.image_of_one:
        raise VerificationFailed("eta beta = 1 and beta eta = g(f(1))")
    if M2.mul(eps.alpha, package.mu) != fg.image_of_one or M2.mul(package.mu, eps.alpha) != M2.one:
        raise VerificationFailed("eps mu = f(g(1')) and mu eps = 1'")
    if M2.mul(f(eta.alpha), eps.alpha) != f.image_of_one:
        raise VerificationFailed("f(1) = f(eta) eps")
    if M.mul(eta.alpha, g(eps.alpha)) != g.image_of_one:
        raise VerificationFailed("g(1') = eta g(eps)")
    if not check_triangle_identities(f, g, eta, eps):
        raise VerificationFailed("triangle identities")


def equivalence_from_enlargement(monoid: FiniteSemigroup, e: int, x: int, y: int) -> EquivalencePackage:
    """The adjoint equivalence M -> eMe built from x e y = 1.

    f(m) = e y m x e, g is the inclusion of the corner, eta = x e with
    inverse beta = e y, eps = e y e with inverse mu = e x e.

    Raises:
        PreconditionFailed: if M has no identity, e is not idempotent or x e y != 1
        VerificationFailed: if any equation of the resulting package fails
    """
    if not monoid.is_monoid:
        raise PreconditionFailed("enlargements need a monoid")
    if not is_idempotent(monoid, e):
        raise PreconditionFailed(f"element {monoid.label(e)} is not idempotent")
    if monoid.product(x, e, y) != monoid.one:
        raise PreconditionFailed("x e y is not the identity")

    corner, embedding = corner_monoid(monoid, e)
    position = {v: i for i, v in enumerate(embedding)}
    f = Homomorphism(monoid, corner, tuple(position[monoid.product(e, y, m, x, e)] for m in monoid.elements))
    g = Homomorphism(corner, monoid, embedding)

    eta = Conjugation(identity_homomorphism(monoid), compose_homomorphisms(f, g), monoid.mul(x, e))
    eps = Conjugation(compose_homomorphisms(g, f), identity_homomorphism(corner), position[monoid.product(e, y, e)])
    package = EquivalencePackage(
        f=f,
        g=g,
        eta=eta,
        eps=eps,
        beta=monoid.mul(e, y),
        mu=position[monoid.product(e, x, e)],
    )
    verify_package(package)
    return package


def enlargement_from_equivalence(package: EquivalencePackage) -> EnlargementWitness:
    """e = g(1') is an enlargement and h(m) = mu f(m) eps inverts g on eMe.

    Raises:
        VerificationFailed: naming the first equation that fails
    """
    f, g = package.f, package.g
    M, M2 = package.source, package.target
    e = g.image_of_one
    if not is_idempotent(M, e):
        raise VerificationFailed("e = g(1') is idempotent")
    if M.product(package.eta.alpha, e, g(f.image_of_one), package.beta) != M.one:
        raise VerificationFailed("1 = eta e g(f(1)) beta")
    if not is_enlargement(M, e):
        raise VerificationFailed("MeM = M")

    corner, embedding = corner_monoid(M, e)
    position = {v: i for i, v in enumerate(embedding)}

    def h(m: int) -> int:
        return M2.product(package.mu, f(m), package.eps.alpha)

    iso = []
    for m2 in M2.elements:
        image = g(m2)
        if image not in position:
            raise VerificationFailed("g(m') lies in eMe", f"m' = {M2.label(m2)}")
        if h(image) != m2:
            raise VerificationFailed("h(g(m')) = m'", f"m' = {M2.label(m2)}")
        iso.append(position[image])
    inverse = []
    for c, m in enumerate(embedding):
        if g(h(m)) != M.product(e, m, e):
            raise VerificationFailed("g(h(m)) = e m e", f"m = {M.label(m)}")
        inverse.append(h(m))
    if not check_homomorphism(Homomorphism(M2, corner, tuple(iso))):
        raise VerificationFailed("M' -> eMe preserves products")
    return EnlargementWitness(
        idempotent=e,
        corner=corner,
        embedding=embedding,
        iso=tuple(iso),
        inverse=tuple(inverse),
    )


# =============================================================================
# Decision Procedures
# =============================================================================

def decide_morita(
    monoid: FiniteSemigroup,
    other: FiniteSemigroup,
    budget: "int | SearchBudget | None" = None,
) -> MoritaWitness | None:
    """Search both monoids for an enlargement idempotent whose corner matches the other.

    Raises:
        NotAMonoid: if either input has no identity
        BudgetExceeded: if the shared candidate budget runs out
    """
    if not (monoid.is_monoid and other.is_monoid):
        raise NotAMonoid("Morita equivalence is defined for monoids")
    budget = as_budget(budget, "Morita search")
    for side, holder, rival in (("source", monoid, other), ("target", other, monoid)):
        for e in idempotents(holder):
            budget.spend()
            if not is_enlargement(holder, e):
                continue
            corner, embedding = corner_monoid(holder, e)
            iso = find_isomorphism(corner, rival, budget)
            if iso is not None:
                logger.debug("Morita witness on the %s side at e = %d", side, e)
                return MoritaWitness(
                    side=side,
                    idempotent=e,
                    corner_elements=list(embedding),
                    isomorphism=iso,
                )
    return None


def find_adjoint_equivalence(
    monoid: FiniteSemigroup,
    other: FiniteSemigroup,
    budget: "int | SearchBudget | None" = None,
) -> EquivalencePackage | None:
    """Search hom pairs and conjugation elements for a verified adjoint equivalence.

    Raises:
        NotAMonoid: if either input has no identity
        BudgetExceeded: if the shared candidate budget runs out
    """
    if not (monoid.is_monoid and other.is_monoid):
        raise NotAMonoid("adjoint equivalences are between monoids")
    budget = as_budget(budget, "adjoint equivalence search")
    forward = enumerate_homomorphisms(monoid, other, budget)
    backward = enumerate_homomorphisms(other, monoid, budget)
    id_m, id_m2 = identity_homomorphism(monoid), identity_homomorphism(other)

    for f in forward:
        for g in backward:
            budget.spend()
            gf, fg = compose_homomorphisms(f, g), compose_homomorphisms(g, f)
            etas = []
            for x in monoid.elements:
                if is_conjugation(id_m, gf, x):
                    inverse = invert_conjugation(Conjugation(id_m, gf, x))
                    if inverse is not None:
                        etas.append((Conjugation(id_m, gf, x), inverse.beta))
            if not etas:
                continue
            epss = []
            for y in other.elements:
                if is_conjugation(fg, id_m2, y):
                    inverse = invert_conjugation(Conjugation(fg, id_m2, y))
                    if inverse is not None:
                        epss.append((Conjugation(fg, id_m2, y), inverse.beta))
            for eta, beta in etas:
                for eps, mu in epss:
                    budget.spend()
                    if check_triangle_identities(f, g, eta, eps):
                        package = EquivalencePackage(f, g, eta, eps, beta, mu)
                        verify_package(package)
                        return package
    return None
