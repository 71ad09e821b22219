"""Verification and elementary arrow properties of finite categories."""

import logging

import config
from categories.structures import FinCategory
from models.errors import BudgetExceeded
from models.schemas import CheckReport

logger = logging.getLogger(__name__)


def check_arrow_cap(count: int, what: str = "category", limit: int | None = None) -> None:
    """Refuse to build or check a category with more than the capped number of arrows.

    Raises:
        BudgetExceeded: if count is past the cap
    """
    cap = config.ARROW_CAP if limit is None else limit
    if count > cap:
        logger.warning("%s with %d arrows exceeds cap %d", what, count, cap)
        raise BudgetExceeded(f"{what}: {count} arrows exceed the cap of {cap}")


def guard_size(cat: FinCategory, limit: int | None = None) -> None:
    """Refuse brute-force checks on categories past the arrow cap."""
    check_arrow_cap(cat.arrow_count, limit=limit)


def composable_pairs(cat: FinCategory):
    """Yield every (f, g) with cod f = dom g, in index order."""
    for f in range(cat.arrow_count):
        for g in cat.out_arrows(cat.cod(f)):
            yield f, g


# =============================================================================
# Category Axioms
# =============================================================================

def verify_category(cat: FinCategory) -> CheckReport:
    """Check identities, the shape of the composition table and associativity.

    Returns:
        A report whose violations carry the offending arrows as witnesses
    """
    guard_size(cat)
    report = CheckReport(name="category")
    n = cat.arrow_count

    for f, (a, b) in enumerate(cat.arrows):
        if not (0 <= a < cat.object_count and 0 <= b < cat.object_count):
            report.add("arrow_ends", [f], f"arrow {f} has endpoints ({a}, {b})")
    if report.violations:
        return report

    if len(cat.identity_of) != cat.object_count:
        report.add("identities", [], f"{len(cat.identity_of)} identities for {cat.object_count} objects")
        return report
    for a, i in enumerate(cat.identity_of):
        if not 0 <= i < n or cat.arrows[i] != (a, a):
            report.add("identities", [a, i], f"identity of object {a} is not an endo-arrow on it")
    if report.violations:
        return report

    for (f, g), h in sorted(cat.compose.items()):
        if not (0 <= f < n and 0 <= g < n and 0 <= h < n):
            report.add("composition_domain", [f, g, h], "composition entry refers to a missing arrow")
        elif cat.cod(f) != cat.dom(g):
            report.add("composition_domain", [f, g, h], "composite defined on a non-composable pair")
        elif cat.arrows[h] != (cat.dom(f), cat.cod(g)):
            report.add("composition_domain", [f, g, h], "composite has the wrong endpoints")
    for f, g in composable_pairs(cat):
        if (f, g) not in cat.compose:
            report.add("composition_domain", [f, g], "composable pair has no composite")
    if report.violations:
        return report

    for f, (a, b) in enumerate(cat.arrows):
        if cat.compose[(cat.identity_of[a], f)] != f:
            report.add("identities", [cat.identity_of[a], f], "left identity law fails")
        if cat.compose[(f, cat.identity_of[b])] != f:
            report.add("identities", [f, cat.identity_of[b]], "right identity law fails")

    for f, g in composable_pairs(cat):
        fg = cat.compose[(f, g)]
        for h in cat.out_arrows(cat.cod(g)):
            if cat.compose[(fg, h)] != cat.compose[(f, cat.compose[(g, h)])]:
                report.add("associativity", [f, g, h], "(fg)h differs from f(gh)")

    if not report.passed:
        logger.debug("category check found %d violations", len(report.violations))
    return report


# =============================================================================
# Arrow Properties
# =============================================================================

def is_epi(cat: FinCategory, f: int) -> bool:
    """f g = f h implies g = h."""
    b = cat.cod(f)
    for c in cat.objects:
        composites = [cat.compose[(f, g)] for g in cat.hom(b, c)]
        if len(set(composites)) != len(composites):
            return False
    return True


def is_mono(cat: FinCategory, f: int) -> bool:
    """g f = h f implies g = h."""
    a = cat.dom(f)
    for c in cat.objects:
        composites = [cat.compose[(g, f)] for g in cat.hom(c, a)]
        if len(set(composites)) != len(composites):
            return False
    return True


def inverse_of(cat: FinCategory, f: int) -> int | None:
    """The two-sided inverse of f, if f is an isomorphism."""
    a, b = cat.arrows[f]
    for g in cat.hom(b, a):
        if cat.compose[(f, g)] == cat.identity_of[a] and cat.compose[(g, f)] == cat.identity_of[b]:
            return g
    return None


def isomorphisms(cat: FinCategory) -> list[int]:
    """Every invertible arrow, in index order."""
    return [f for f in range(cat.arrow_count) if inverse_of(cat, f) is not None]


def opposite(cat: FinCategory) -> FinCategory:
    """C^op on the same indices: arrows reversed, composition order swapped."""
    return FinCategory(
        object_count=cat.object_count,
        arrows=tuple((b, a) for a, b in cat.arrows),
        identity_of=cat.identity_of,
        compose={(g, f): h for (f, g), h in cat.compose.items()},
        arrow_labels=cat.arrow_labels,
        object_labels=cat.object_labels,
    )
