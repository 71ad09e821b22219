"""Semigroup homomorphisms: checking, composing and exhaustive enumeration."""

import itertools
import logging

import numpy as np

from models.budget import SearchBudget, as_budget
from models.errors import BudgetExceeded, SignatureMismatch
from semigroups.structures import FiniteSemigroup, Homomorphism

logger = logging.getLogger(__name__)


# =============================================================================
# Checking and Composition
# =============================================================================

def is_multiplicative(source: FiniteSemigroup, target: FiniteSemigroup, images: np.ndarray) -> bool:
    """map(ab) = map(a) map(b) for every pair."""
    return bool((images[source.array] == target.array[images[:, None], images[None, :]]).all())


def check_homomorphism(h: Homomorphism, monoid: bool = False) -> bool:
    """Check that h preserves products (and the identity when `monoid` is set).

    Raises:
        SignatureMismatch: if the map length differs from the source size
    """
    if len(h.map) != h.source.size:
        raise SignatureMismatch(f"map has {len(h.map)} entries for a source of size {h.source.size}")
    if any(not 0 <= v < h.target.size for v in h.map):
        return False
    if not is_multiplicative(h.source, h.target, h.array):
        return False
    if monoid:
        if not (h.source.is_monoid and h.target.is_monoid):
            return False
        return h.map[h.source.one] == h.target.one
    return True


def identity_homomorphism(semigroup: FiniteSemigroup) -> Homomorphism:
    return Homomorphism(semigroup, semigroup, tuple(semigroup.elements))


def compose_homomorphisms(first: Homomorphism, second: Homomorphism) -> Homomorphism:
    """second after first.

    Raises:
        SignatureMismatch: if first.target is not second.source
    """
    if first.target != second.source:
        raise SignatureMismatch("target of the first map is not the source of the second")
    return Homomorphism(first.source, second.target, tuple(second.map[v] for v in first.map))


# =============================================================================
# Generating Sets
# =============================================================================

def generating_set(semigroup: FiniteSemigroup) -> tuple[list[int], list[int], dict[int, tuple[int, int]]]:
    """Greedy generating set with a derivation for every other element.

    Returns:
        (generators, order, derivation): `order` lists every element with
        generators first and each remaining element after its parent;
        derivation[q] = (p, g) means q = p*g with g a generator
    """
    gens: list[int] = []
    order: list[int] = []
    derivation: dict[int, tuple[int, int]] = {}
    for x in semigroup.elements:
        if x in derivation or x in gens:
            continue
        gens.append(x)
        order = list(gens)
        derivation = {}
        seen = set(gens)
        head = 0
        while head < len(order):
            p = order[head]
            head += 1
            for g in gens:
                q = semigroup.table[p][g]
                if q not in seen:
                    seen.add(q)
                    derivation[q] = (p, g)
                    order.append(q)
    return gens, order, derivation


def power_signature(semigroup: FiniteSemigroup, x: int) -> tuple[int, int]:
    """(index, period) of x: the least i, p with x^i = x^(i+p)."""
    powers = [x]
    position = {x: 1}
    while True:
        nxt = semigroup.table[powers[-1]][x]
        if nxt in position:
            index = position[nxt]
            return index, len(powers) + 1 - index
        powers.append(nxt)
        position[nxt] = len(powers)


def satisfies_power_relation(semigroup: FiniteSemigroup, t: int, index: int, period: int) -> bool:
    """t^index = t^(index + period)."""
    power = t
    for _ in range(index - 1):
        power = semigroup.table[power][t]
    lower = power
    for _ in range(period):
        power = semigroup.table[power][t]
    return power == lower


# =============================================================================
# Enumeration
# =============================================================================

def extend_from_generators(
    source: FiniteSemigroup,
    target: FiniteSemigroup,
    order: list[int],
    derivation: dict[int, tuple[int, int]],
    assignment: dict[int, int],
) -> np.ndarray:
    """Propagate generator images along the derivations."""
    images = np.zeros(source.size, dtype=np.int64)
    for q in order:
        if q in assignment:
            images[q] = assignment[q]
        else:
            p, g = derivation[q]
            images[q] = target.table[images[p]][images[g]]
    return images


def enumerate_homomorphisms(
    source: FiniteSemigroup,
    target: FiniteSemigroup,
    budget: "int | SearchBudget | None" = None,
) -> list[Homomorphism]:
    """All semigroup homomorphisms source -> target.

    Generator images are restricted to elements satisfying the same power
    relation, then every assignment is propagated and checked.

    Raises:
        BudgetExceeded: when the candidate budget runs out; `partial`
            holds the homomorphisms found so far
    """
    budget = as_budget(budget, "homomorphism enumeration")
    gens, order, derivation = generating_set(source)
    candidates = []
    for g in gens:
        index, period = power_signature(source, g)
        candidates.append([t for t in target.elements
                           if satisfies_power_relation(target, t, index, period)])

    found: list[Homomorphism] = []
    for choice in itertools.product(*candidates):
        try:
            budget.spend(partial=found)
        except BudgetExceeded:
            logger.warning("stopped after %d homomorphisms %r -> %r", len(found), source, target)
            raise
        images = extend_from_generators(source, target, order, derivation, dict(zip(gens, choice)))
        if is_multiplicative(source, target, images):
            found.append(Homomorphism(source, target, tuple(images.tolist())))

    logger.debug("found %d homomorphisms %r -> %r", len(found), source, target)
    return found
