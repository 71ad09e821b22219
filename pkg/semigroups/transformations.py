"""Transformation monoids generated by closure.

Products are read left to right: (st)(x) = t(s(x)).
"""

import logging
from collections.abc import Sequence

import numpy as np

import config
from models.errors import ArityMismatch, ClosureBudgetExceeded
from semigroups.core import make_from_table
from semigroups.structures import FiniteSemigroup, Transformation

logger = logging.getLogger(__name__)


def _codes(images: np.ndarray, arity: int) -> np.ndarray:
    """Encode 0-based image rows as base-`arity` integers."""
    weights = arity ** np.arange(arity, dtype=np.int64)
    return images @ weights


def generate_transformation_monoid(
    arity: int,
    generators: Sequence[Transformation],
    include_identity: bool = True,
    budget: int | None = None,
) -> FiniteSemigroup:
    """Close a set of transformations under composition.

    Elements are numbered in discovery order: the identity first when
    included, then the generators, then breadth-first right multiples.

    Args:
        arity: Size of the underlying set {1..arity}
        generators: Transformations generating the semigroup
        include_identity: Whether to add the identity map
        budget: Maximum number of elements, defaults to SFS_CLOSURE_BUDGET

    Returns:
        The generated semigroup with labels like "(1 2 3 3)"

    Raises:
        ArityMismatch: if a generator has a different arity
        ClosureBudgetExceeded: if the closure grows past the budget
    """
    limit = config.CLOSURE_BUDGET if budget is None else budget
    for gen in generators:
        if gen.arity != arity:
            raise ArityMismatch(f"generator {gen.label} has arity {gen.arity}, expected {arity}")

    seeds = list(generators)
    if include_identity:
        seeds.insert(0, Transformation.identity_map(arity))

    elements: list[Transformation] = []
    seen: set[tuple[int, ...]] = set()
    for t in seeds:
        if t.images not in seen:
            seen.add(t.images)
            elements.append(t)
    if len(elements) > limit:
        raise ClosureBudgetExceeded(f"{len(elements)} seeds exceed {limit} elements", partial=len(elements))

    frontier = 0
    while frontier < len(elements):
        current = elements[frontier]
        frontier += 1
        for gen in generators:
            product = current.then(gen)
            if product.images not in seen:
                seen.add(product.images)
                elements.append(product)
                if len(elements) > limit:
                    raise ClosureBudgetExceeded(
                        f"closure exceeded {limit} elements",
                        partial=len(elements),
                    )

    logger.debug("closure of %d generators on %d points has %d elements",
                 len(generators), arity, len(elements))

    # C[i, j, x] = t_j(t_i(x)) with 0-based images
    images = np.array([[v - 1 for v in t.images] for t in elements], dtype=np.int64)
    n = len(elements)
    composed = images[np.arange(n)[None, :, None], images[:, None, :]]
    codes = _codes(images, arity)
    order = np.argsort(codes)
    positions = np.searchsorted(codes[order], _codes(composed, arity))
    table = order[positions]

    return make_from_table(table.tolist(), labels=[t.label for t in elements])


def transformation_of(semigroup: FiniteSemigroup, x: int) -> Transformation:
    """Recover the transformation behind an element of a generated monoid."""
    return Transformation.of(semigroup.label(x).strip("()").split())
