"""Strict factorization systems: unique factorization and the derived properties.

Arrows of E are drawn a ->> b and arrows of M a >-> b.
"""

import logging
from collections import Counter

from categories.core import guard_size, inverse_of, is_epi, is_mono, opposite
from categories.structures import SfsCategory, WideSubcategory
from models.errors import InternalDisagreement
from models.schemas import CheckReport, SfsReport

logger = logging.getLogger(__name__)


def _check_wide(report: CheckReport, name: str, sub: WideSubcategory) -> None:
    cat = sub.host
    for a in cat.objects:
        if cat.identity_of[a] not in sub:
            report.add(f"wide_{name}", [cat.identity_of[a]], f"{name.upper()} misses the identity of object {a}")
    for f in sub:
        for g in sub.out_arrows(cat.cod(f)):
            h = cat.compose[(f, g)]
            if h not in sub:
                report.add(f"wide_{name}", [f, g, h], f"{name.upper()} is not closed under composition")


# =============================================================================
# Unique Factorization
# =============================================================================

def verify_sfs(sfs: SfsCategory) -> SfsReport:
    """Check that E and M are wide subcategories and every arrow factors uniquely as e then m.

    Returns:
        A report carrying the factorization map when every check passes
    """
    guard_size(sfs.cat)
    report = SfsReport(name="sfs")
    _check_wide(report, "e", sfs.e_arrows)
    _check_wide(report, "m", sfs.m_arrows)

    factorization: dict[int, tuple[int, int]] = {}
    for f, pairs in sfs.factorizations.items():
        if not pairs:
            report.add("factorization", [f], f"arrow {f} has no E-then-M factorization")
        elif len(pairs) > 1:
            (e1, m1), (e2, m2) = pairs[:2]
            report.add("factorization", [f, e1, m1, e2, m2], f"arrow {f} has {len(pairs)} factorizations")
        else:
            factorization[f] = pairs[0]

    if report.passed:
        report.factorization = factorization
    else:
        logger.debug("sfs check found %d violations", len(report.violations))
    return report


def verify_grandis_properties(sfs: SfsCategory) -> CheckReport:
    """E and M meet only in identities, and E is orthogonal to M.

    Orthogonality: for every commuting square u m = e v with e in E and
    m in M there is exactly one diagonal d with e d = u and d m = v.
    """
    guard_size(sfs.cat)
    cat = sfs.cat
    report = CheckReport(name="grandis")

    for f in sorted(sfs.e_arrows.arrow_set & sfs.m_arrows.arrow_set):
        if not cat.is_identity(f):
            report.add("intersection", [f], f"arrow {f} lies in both E and M")

    for e in sfs.e_arrows:
        a, b = cat.arrows[e]
        for m in sfs.m_arrows:
            c, d = cat.arrows[m]
            # commuting squares grouped by their diagonal composite a -> d
            via_u: dict[int, list[int]] = {}
            for u in cat.hom(a, c):
                via_u.setdefault(cat.compose[(u, m)], []).append(u)
            diagonals = Counter((cat.compose[(e, x)], cat.compose[(x, m)]) for x in cat.hom(b, c))
            for v in cat.hom(b, d):
                for u in via_u.get(cat.compose[(e, v)], []):
                    count = diagonals[(u, v)]
                    if count != 1:
                        report.add("orthogonality", [e, m, u, v], f"square has {count} diagonals")
    return report


def spanned_ofs(sfs: SfsCategory) -> tuple[frozenset[int], frozenset[int]]:
    """The orthogonal factorization system spanned by (E, M) and the isomorphisms.

    Returns:
        ({e i : e in E, i iso}, {i m : i iso, m in M})
    """
    cat = sfs.cat
    isos = [f for f in range(cat.arrow_count) if inverse_of(cat, f) is not None]
    iso_out: dict[int, list[int]] = {}
    iso_in: dict[int, list[int]] = {}
    for i in isos:
        iso_out.setdefault(cat.dom(i), []).append(i)
        iso_in.setdefault(cat.cod(i), []).append(i)
    big_e = frozenset(cat.compose[(e, i)] for e in sfs.e_arrows for i in iso_out.get(cat.cod(e), []))
    big_m = frozenset(cat.compose[(i, m)] for m in sfs.m_arrows for i in iso_in.get(cat.dom(m), []))
    return big_e, big_m


def dual_sfs(sfs: SfsCategory) -> SfsCategory:
    """(C^op, M^op, E^op): reversing arrows swaps the roles of E and M."""
    return SfsCategory.build(
        opposite(sfs.cat),
        e_arrows=sfs.m_arrows.arrow_set,
        m_arrows=sfs.e_arrows.arrow_set,
        unit=sfs.unit,
    )


# =============================================================================
# Thin, Proper, Unital
# =============================================================================

def parallel_pair(sub: WideSubcategory) -> tuple[int, int] | None:
    """First two distinct arrows of the subcategory with the same ends, in index order."""
    seen: dict[tuple[int, int], int] = {}
    for f in sub:
        ends = tuple(sub.host.arrows[f])
        if ends in seen:
            return seen[ends], f
        seen[ends] = f
    return None


def is_thin(sub: WideSubcategory) -> bool:
    """At most one arrow of the subcategory between any two objects."""
    return parallel_pair(sub) is None


def is_proper(sfs: SfsCategory) -> bool:
    """Every E-arrow is epi and every M-arrow is mono."""
    guard_size(sfs.cat)
    return (all(is_epi(sfs.cat, e) for e in sfs.e_arrows)
            and all(is_mono(sfs.cat, m) for m in sfs.m_arrows))


def is_unital_at(sfs: SfsCategory, zeta: int) -> bool:
    """Exactly one E-arrow zeta ->> a and one M-arrow a >-> zeta for every object a."""
    return all(
        len(sfs.e_arrows.hom(zeta, a)) == 1 and len(sfs.m_arrows.hom(a, zeta)) == 1
        for a in sfs.cat.objects
    )


def first_unital_object(sfs: SfsCategory) -> int | None:
    """Least object at which the SFS is unital."""
    for zeta in sfs.cat.objects:
        if is_unital_at(sfs, zeta):
            return zeta
    return None


# =============================================================================
# Completeness
# =============================================================================

def _completes_spans(sfs: SfsCategory) -> bool:
    """Every e: a ->> b, m: a >-> c fills to e m' = m e' with e': c ->> d, m': b >-> d."""
    cat = sfs.cat
    for e in sfs.e_arrows:
        a, b = cat.arrows[e]
        m_outs = sfs.m_arrows.out_arrows(b)
        for m in sfs.m_arrows.out_arrows(a):
            c = cat.cod(m)
            targets = {cat.compose[(m, e2)] for e2 in sfs.e_arrows.out_arrows(c)}
            if not any(cat.compose[(e, m2)] in targets for m2 in m_outs):
                logger.debug("span (%d, %d) has no completion", e, m)
                return False
    return True


def _completes_cospans(sfs: SfsCategory) -> bool:
    """Every e': c ->> d, m': b >-> d fills to e m' = m e' with e: a ->> b, m: a >-> c."""
    cat = sfs.cat
    for e2 in sfs.e_arrows:
        c, d = cat.arrows[e2]
        targets = {cat.compose[(m, e2)] for m in sfs.m_arrows.in_arrows(c)}
        for m2 in sfs.m_arrows.in_arrows(d):
            b = cat.dom(m2)
            if not any(cat.compose[(e, m2)] in targets for e in sfs.e_arrows.in_arrows(b)):
                logger.debug("cospan (%d, %d) has no completion", e2, m2)
                return False
    return True


def _completes_through_unit(sfs: SfsCategory, zeta: int) -> bool:
    """Completeness read off the unit.

    Every e: a ->> x has some m': x >-> u with e m' = (a >-> zeta ->> u), and
    every m': x >-> b has some e: v ->> x with e m' = (v >-> zeta ->> b).
    """
    cat = sfs.cat

    def through_unit(a: int, b: int) -> int:
        return cat.compose[(sfs.unique_m(a, zeta), sfs.unique_e(zeta, b))]

    for e in sfs.e_arrows:
        a, x = cat.arrows[e]
        if not any(cat.compose[(e, m2)] == through_unit(a, cat.cod(m2))
                   for m2 in sfs.m_arrows.out_arrows(x)):
            return False
    for m2 in sfs.m_arrows:
        x, b = cat.arrows[m2]
        if not any(cat.compose[(e, m2)] == through_unit(cat.dom(e), b)
                   for e in sfs.e_arrows.in_arrows(x)):
            return False
    return True


def is_complete(sfs: SfsCategory) -> bool:
    """Both square-completion conditions hold.

    With a unit at which the SFS is unital, completeness is also evaluated
    through the unit and the two answers must agree.

    Raises:
        InternalDisagreement: if the two evaluations differ
    """
    guard_size(sfs.cat)
    by_squares = _completes_spans(sfs) and _completes_cospans(sfs)
    if sfs.unit is not None and is_unital_at(sfs, sfs.unit):
        by_unit = _completes_through_unit(sfs, sfs.unit)
        if by_unit != by_squares:
            raise InternalDisagreement(
                f"completeness by squares is {by_squares} but through the unit is {by_unit}"
            )
    return by_squares
