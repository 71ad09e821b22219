"""Isomorphism search between finite categories, SFS-preserving when both sides carry one."""

import logging
from collections import Counter

from categories.core import guard_size, is_epi, is_mono
from categories.structures import FinCategory, Functor, SfsCategory, underlying
from models.budget import SearchBudget, as_budget

logger = logging.getLogger(__name__)


def _membership(category: "FinCategory | SfsCategory", f: int) -> tuple[bool, bool]:
    if isinstance(category, SfsCategory):
        return f in category.e_arrows, f in category.m_arrows
    return False, False


def _object_invariants(category: "FinCategory | SfsCategory") -> list[tuple]:
    cat = underlying(category)
    result = []
    for a in cat.objects:
        out_sizes = sorted(len(cat.hom(a, b)) for b in cat.objects)
        in_sizes = sorted(len(cat.hom(b, a)) for b in cat.objects)
        kinds = Counter(_membership(category, f) for f in cat.out_arrows(a))
        result.append((len(cat.hom(a, a)), tuple(out_sizes), tuple(in_sizes), tuple(sorted(kinds.items()))))
    return result


def _arrow_invariants(category: "FinCategory | SfsCategory") -> list[tuple]:
    cat = underlying(category)
    factor_count = Counter(cat.compose.values())
    result = []
    for f, (a, b) in enumerate(cat.arrows):
        idempotent = a == b and cat.compose[(f, f)] == f
        result.append((
            cat.is_identity(f),
            idempotent,
            factor_count[f],
            is_epi(cat, f),
            is_mono(cat, f),
            _membership(category, f),
        ))
    return result


def find_category_isomorphism(
    first: "FinCategory | SfsCategory",
    second: "FinCategory | SfsCategory",
    budget: "int | SearchBudget | None" = None,
) -> tuple[Functor, Functor] | None:
    """Find an invertible functor first -> second together with its inverse.

    When both sides are SFS categories the functor must send E onto E' and
    M onto M'. Objects are matched first by hom-set size profiles, then
    arrows are assigned hom-set by hom-set with composition propagated.

    Returns:
        (forward, inverse) or None
    """
    A, B = underlying(first), underlying(second)
    if A.object_count != B.object_count or A.arrow_count != B.arrow_count:
        return None
    if isinstance(first, SfsCategory) != isinstance(second, SfsCategory):
        first, second = A, B
    if isinstance(first, SfsCategory) and (
        len(first.e_arrows) != len(second.e_arrows) or len(first.m_arrows) != len(second.m_arrows)
    ):
        return None
    guard_size(A)

    obj_a, obj_b = _object_invariants(first), _object_invariants(second)
    arr_a, arr_b = _arrow_invariants(first), _arrow_invariants(second)
    if Counter(obj_a) != Counter(obj_b) or Counter(arr_a) != Counter(arr_b):
        return None

    budget = as_budget(budget, "category isomorphism search")
    n_obj, n_arr = A.object_count, A.arrow_count
    obj_map = [-1] * n_obj
    obj_used = [False] * n_obj
    arrow_map = [-1] * n_arr
    arrow_used = [False] * n_arr

    def hom_sizes_match(a: int) -> bool:
        for b in range(a + 1):
            for x, y in ((a, b), (b, a)):
                if len(A.hom(x, y)) != len(B.hom(obj_map[x], obj_map[y])):
                    return False
        return True

    def assign(f: int, g: int, trail: list[int]) -> bool:
        """Set F(f) = g and propagate along composites."""
        pending = [(f, g)]
        while pending:
            f, g = pending.pop()
            if arrow_map[f] != -1:
                if arrow_map[f] != g:
                    return False
                continue
            if arrow_used[g] or arr_a[f] != arr_b[g]:
                return False
            if B.arrows[g] != (obj_map[A.dom(f)], obj_map[A.cod(f)]):
                return False
            arrow_map[f] = g
            arrow_used[g] = True
            trail.append(f)
            for h in A.in_arrows(A.dom(f)):
                if arrow_map[h] != -1:
                    pending.append((A.compose[(h, f)], B.compose[(arrow_map[h], g)]))
            for h in A.out_arrows(A.cod(f)):
                if arrow_map[h] != -1:
                    pending.append((A.compose[(f, h)], B.compose[(g, arrow_map[h])]))
        return True

    def undo(trail: list[int]) -> None:
        for f in trail:
            arrow_used[arrow_map[f]] = False
            arrow_map[f] = -1

    def search_arrows(start: int) -> bool:
        f = start
        while f < n_arr and arrow_map[f] != -1:
            f += 1
        if f == n_arr:
            return True
        a, b = A.arrows[f]
        for g in B.hom(obj_map[a], obj_map[b]):
            if arrow_used[g]:
                continue
            budget.spend()
            trail: list[int] = []
            if assign(f, g, trail) and search_arrows(f + 1):
                return True
            undo(trail)
        return False

    def search_objects(a: int) -> bool:
        if a == n_obj:
            trail: list[int] = []
            if all(assign(A.identity_of[x], B.identity_of[obj_map[x]], trail) for x in A.objects) \
                    and search_arrows(0):
                return True
            undo(trail)
            return False
        for b in B.objects:
            if obj_used[b] or obj_a[a] != obj_b[b]:
                continue
            budget.spend()
            obj_map[a], obj_used[b] = b, True
            if hom_sizes_match(a) and search_objects(a + 1):
                return True
            obj_map[a], obj_used[b] = -1, False
        return False

    if not search_objects(0):
        logger.debug("no isomorphism %r -> %r", A, B)
        return None

    inverse_objects = [0] * n_obj
    for a, b in enumerate(obj_map):
        inverse_objects[b] = a
    inverse_arrows = [0] * n_arr
    for f, g in enumerate(arrow_map):
        inverse_arrows[g] = f
    forward = Functor(first, second, tuple(obj_map), tuple(arrow_map))
    inverse = Functor(second, first, tuple(inverse_objects), tuple(inverse_arrows))
    return forward, inverse
