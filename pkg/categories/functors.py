"""Functors between finite categories and the natural transformations between them."""

import logging

from categories.core import composable_pairs, guard_size
from categories.sfs import is_proper, is_thin
from categories.structures import FinCategory, Functor, NatTransf, SfsCategory, underlying
from models.budget import SearchBudget, as_budget
from models.errors import InternalDisagreement, MissingUnit, NotComposable, PreconditionFailed
from models.schemas import CheckReport, FunctorReport

logger = logging.getLogger(__name__)


# =============================================================================
# Functors
# =============================================================================

def identity_functor(category: "FinCategory | SfsCategory") -> Functor:
    cat = underlying(category)
    return Functor(category, category, tuple(cat.objects), tuple(range(cat.arrow_count)))


def compose_functors(first: Functor, second: Functor) -> Functor:
    """first then second.

    Raises:
        NotComposable: if first.target is not second.source
    """
    if first.target_cat != second.source_cat:
        raise NotComposable("target of the first functor is not the source of the second")
    return Functor(
        first.source,
        second.target,
        tuple(second.object_map[a] for a in first.object_map),
        tuple(second.arrow_map[f] for f in first.arrow_map),
    )


def _check_laws(report: FunctorReport, functor: Functor) -> None:
    src, tgt = functor.source_cat, functor.target_cat
    if len(functor.object_map) != src.object_count or len(functor.arrow_map) != src.arrow_count:
        report.add("shape", [], "maps do not cover the source category")
        return
    if any(not 0 <= b < tgt.object_count for b in functor.object_map) or \
            any(not 0 <= g < tgt.arrow_count for g in functor.arrow_map):
        report.add("shape", [], "maps leave the target category")
        return

    for f, (a, b) in enumerate(src.arrows):
        image = tgt.arrows[functor.arrow_map[f]]
        if image != (functor.object_map[a], functor.object_map[b]):
            report.add("endpoints", [f], f"image of arrow {f} has the wrong endpoints")
    for a in src.objects:
        if functor.arrow_map[src.identity_of[a]] != tgt.identity_of[functor.object_map[a]]:
            report.add("identities", [a], f"identity of object {a} is not sent to an identity")
    if report.violations:
        return
    for f, g in composable_pairs(src):
        image = functor.arrow_map[src.compose[(f, g)]]
        if image != tgt.compose[(functor.arrow_map[f], functor.arrow_map[g])]:
            report.add("composition", [f, g], "F(fg) differs from F(f)F(g)")


def _semi_pointed_forms(functor: Functor, report: FunctorReport) -> bool:
    """The three readings of semi-pointedness, which must agree on thin proper targets.

    (a) H(zeta) >-> zeta' ->> H(zeta) is the identity of H(zeta);
    (b) zeta' ->> H(zeta) >-> zeta' is idempotent;
    (c) H(zeta) * H(zeta) = H(zeta), with * read off the factorization.
    """
    src, tgt = functor.source, functor.target
    zeta, zeta2 = src.zeta, tgt.zeta
    cat = tgt.cat
    hz = functor.object_map[zeta]
    m = tgt.unique_m(hz, zeta2)
    e = tgt.unique_e(zeta2, hz)
    if m is None or e is None:
        report.add("semi_pointed", [hz], "target is not unital at its unit")
        return False

    round_trip = cat.compose[(m, e)]
    form_a = round_trip == cat.identity_of[hz]
    loop = cat.compose[(e, m)]
    form_b = cat.compose[(loop, loop)] == loop
    try:
        form_c = tgt.middle_object(round_trip) == hz
    except NotComposable:
        form_c = False

    if is_thin(tgt.e_arrows) and is_thin(tgt.m_arrows) and is_proper(tgt):
        if not form_a == form_b == form_c:
            raise InternalDisagreement(
                f"semi-pointed readings disagree: round trip {form_a}, loop {form_b}, star {form_c}"
            )
    if not form_a:
        report.add("semi_pointed", [m, e], "H(zeta) >-> zeta' ->> H(zeta) is not the identity")
    return form_a


def check_functor(
    functor: Functor,
    sfs_preserving: bool = False,
    pointed: bool = False,
    semi_pointed: bool = False,
) -> FunctorReport:
    """Check the functor laws and each requested SFS flag.

    Raises:
        PreconditionFailed: if a flag is requested between plain categories
        MissingUnit: if pointed or semi_pointed is requested without units
    """
    guard_size(functor.source_cat)
    report = FunctorReport(name="functor")
    _check_laws(report, functor)
    if not (sfs_preserving or pointed or semi_pointed):
        return report

    src, tgt = functor.source, functor.target
    if not (isinstance(src, SfsCategory) and isinstance(tgt, SfsCategory)):
        raise PreconditionFailed("SFS flags need SFS categories on both sides")
    if (pointed or semi_pointed) and (src.unit is None or tgt.unit is None):
        raise MissingUnit("pointedness needs a unit on both sides")
    if report.violations:
        return report

    if sfs_preserving:
        bad_e = [f for f in src.e_arrows if functor.arrow_map[f] not in tgt.e_arrows]
        bad_m = [f for f in src.m_arrows if functor.arrow_map[f] not in tgt.m_arrows]
        for f in bad_e:
            report.add("sfs_preserving", [f], f"E-arrow {f} is sent outside E'")
        for f in bad_m:
            report.add("sfs_preserving", [f], f"M-arrow {f} is sent outside M'")
        report.sfs_preserving = not (bad_e or bad_m)
    if pointed:
        report.pointed = functor.object_map[src.unit] == tgt.unit
        if not report.pointed:
            report.add("pointed", [src.unit], "H(zeta) differs from zeta'")
    if semi_pointed:
        report.semi_pointed = _semi_pointed_forms(functor, report)
    return report


# =============================================================================
# Natural Transformations
# =============================================================================

def _same_ends(first: Functor, second: Functor) -> bool:
    return first.source_cat == second.source_cat and first.target_cat == second.target_cat


def check_natural_transformation(nat: NatTransf) -> CheckReport:
    """alpha_a: F(a) -> G(a) and F(f) alpha_b = alpha_a G(f) for every f: a -> b."""
    F, G = nat.source_functor, nat.target_functor
    report = CheckReport(name="natural_transformation")
    if not _same_ends(F, G):
        report.add("signature", [], "functors do not share source and target")
        return report
    src, tgt = F.source_cat, F.target_cat
    for a in src.objects:
        if tgt.arrows[nat.components[a]] != (F.object_map[a], G.object_map[a]):
            report.add("component", [a], f"component at {a} does not run F(a) -> G(a)")
    if report.violations:
        return report
    for f, (a, b) in enumerate(src.arrows):
        left = tgt.compose[(F.arrow_map[f], nat.components[b])]
        right = tgt.compose[(nat.components[a], G.arrow_map[f])]
        if left != right:
            report.add("naturality", [f], f"naturality square of arrow {f} does not commute")
    return report


def identity_natural_transformation(functor: Functor) -> NatTransf:
    tgt = functor.target_cat
    return NatTransf(functor, functor, tuple(tgt.identity_of[b] for b in functor.object_map))


def vcompose_nat(first: NatTransf, second: NatTransf) -> NatTransf:
    """Componentwise composite of F => G and G => H.

    Raises:
        NotComposable: if first.target_functor is not second.source_functor
    """
    if first.target_functor != second.source_functor:
        raise NotComposable("natural transformations do not share the middle functor")
    tgt = first.source_functor.target_cat
    return NatTransf(
        first.source_functor,
        second.target_functor,
        tuple(tgt.compose[(x, y)] for x, y in zip(first.components, second.components)),
    )


def enumerate_natural_transformations(
    F: Functor,
    G: Functor,
    pointed: bool = False,
    budget: "int | SearchBudget | None" = None,
) -> list[NatTransf]:
    """Every natural transformation F => G, by backtracking over components.

    Args:
        pointed: Keep only transformations whose component at the unit is
            the identity of the target unit

    Raises:
        PreconditionFailed: if F and G do not share source and target
        MissingUnit: if `pointed` is set without units on both sides
    """
    if not _same_ends(F, G):
        raise PreconditionFailed("functors do not share source and target")
    src, tgt = F.source_cat, F.target_cat
    budget = as_budget(budget, "natural transformation enumeration")

    fixed: dict[int, int] = {}
    if pointed:
        if not (isinstance(F.source, SfsCategory) and isinstance(F.target, SfsCategory)) \
                or F.source.unit is None or F.target.unit is None:
            raise MissingUnit("pointed filter needs units on both sides")
        fixed[F.source.unit] = tgt.identity_of[F.target.unit]

    # arrows whose naturality square becomes checkable once object a is assigned
    checks_at: dict[int, list[int]] = {a: [] for a in src.objects}
    for f, (a, b) in enumerate(src.arrows):
        checks_at[max(a, b)].append(f)

    components: list[int] = [-1] * src.object_count
    found: list[NatTransf] = []

    def natural_at(a: int) -> bool:
        for f in checks_at[a]:
            x, y = src.arrows[f]
            left = tgt.compose[(F.arrow_map[f], components[y])]
            right = tgt.compose[(components[x], G.arrow_map[f])]
            if left != right:
                return False
        return True

    def search(a: int) -> None:
        if a == src.object_count:
            found.append(NatTransf(F, G, tuple(components)))
            return
        if a in fixed:
            candidates = [fixed[a]] if tgt.arrows[fixed[a]] == (F.object_map[a], G.object_map[a]) else []
        else:
            candidates = tgt.hom(F.object_map[a], G.object_map[a])
        for alpha in candidates:
            budget.spend(partial=found)
            components[a] = alpha
            if natural_at(a):
                search(a + 1)
        components[a] = -1

    search(0)
    logger.debug("found %d natural transformations", len(found))
    return found
