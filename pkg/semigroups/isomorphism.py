"""Isomorphism search between finite semigroups."""

import logging
from collections import Counter

import numpy as np

from models.budget import SearchBudget, as_budget
from semigroups.core import green_classes, idempotents, left_ideal, right_ideal
from semigroups.homomorphisms import extend_from_generators, generating_set, is_multiplicative, power_signature
from semigroups.structures import FiniteSemigroup

logger = logging.getLogger(__name__)


def element_invariants(semigroup: FiniteSemigroup) -> list[tuple]:
    """Per-element data preserved by every isomorphism."""
    classes = green_classes(semigroup)
    l_size = {x: len(c) for c in classes.l_classes for x in c}
    r_size = {x: len(c) for c in classes.r_classes for x in c}
    d_size = {x: len(c) for c in classes.d_classes for x in c}
    arr = semigroup.array
    commuting = (arr == arr.T).sum(axis=1)
    return [
        (
            power_signature(semigroup, x),
            semigroup.table[x][x] == x,
            x == semigroup.identity,
            len(left_ideal(semigroup, x)),
            len(right_ideal(semigroup, x)),
            l_size[x],
            r_size[x],
            d_size[x],
            int(commuting[x]),
        )
        for x in semigroup.elements
    ]


def find_isomorphism(
    source: FiniteSemigroup,
    target: FiniteSemigroup,
    budget: "int | SearchBudget | None" = None,
) -> list[int] | None:
    """Find a multiplication-preserving bijection source -> target.

    Cheap invariants (sizes, idempotent counts, Green class sizes, power
    signatures) are compared first; then generator images are assigned by
    backtracking and propagated to the whole carrier.

    Returns:
        The bijection as a list of target indices, or None
    """
    if source.size != target.size:
        return None
    if len(idempotents(source)) != len(idempotents(target)):
        return None
    src_inv = element_invariants(source)
    tgt_inv = element_invariants(target)
    if Counter(src_inv) != Counter(tgt_inv):
        return None

    budget = as_budget(budget, "isomorphism search")
    gens, order, derivation = generating_set(source)
    by_invariant: dict[tuple, list[int]] = {}
    for t, inv in enumerate(tgt_inv):
        by_invariant.setdefault(inv, []).append(t)
    candidates = [by_invariant[src_inv[g]] for g in gens]

    assignment: dict[int, int] = {}

    def search(depth: int) -> np.ndarray | None:
        if depth == len(gens):
            budget.spend()
            images = extend_from_generators(source, target, order, derivation, assignment)
            if len(set(images.tolist())) == source.size and is_multiplicative(source, target, images):
                return images
            return None
        used = set(assignment.values())
        for t in candidates[depth]:
            if t in used:
                continue
            assignment[gens[depth]] = t
            found = search(depth + 1)
            if found is not None:
                return found
            del assignment[gens[depth]]
        return None

    images = search(0)
    if images is None:
        logger.debug("no isomorphism %r -> %r", source, target)
        return None
    return images.tolist()
