"""The Schutzenberger category D(S) of a finite semigroup and its canonical SFS.

Objects are the elements of S. An arrow a -> b is a triple (a, x, b) with
x in aS^1 and x in S^1 b. E holds the triples (a, x, x), M the triples
(x, x, b), and every (a, x, b) factors as (a, x, x) then (x, x, b).
"""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import numpy as np

import config
from categories.core import check_arrow_cap
from categories.structures import FinCategory, Functor, SfsCategory, WideSubcategory
from models.errors import InternalDisagreement, InvalidHomomorphism, NotComposable
from semigroups.core import ideal_intersection_sizes, left_ideal, right_ideal
from semigroups.homomorphisms import check_homomorphism
from semigroups.structures import FiniteSemigroup, Homomorphism

logger = logging.getLogger(__name__)

# stands for the adjoined identity of S^1 in witness lists
ONE = None


@dataclass(frozen=True, order=True)
class DTriple:
    """An arrow dom -> cod of D(S) labelled by an element of S."""

    dom: int
    label: int
    cod: int

    def is_valid(self, semigroup: FiniteSemigroup) -> bool:
        return (self.label in right_ideal(semigroup, self.dom)
                and self.label in left_ideal(semigroup, self.cod))


@dataclass(frozen=True)
class DCategory(SfsCategory):
    """D(S) as an SFS category, remembering the triple behind each arrow."""

    semigroup: FiniteSemigroup | None = None
    triples: tuple[DTriple, ...] = field(default=())
    # None for all of D(S); otherwise the objects whose arrows are kept
    support: frozenset[int] | None = None

    @cached_property
    def index(self) -> dict[DTriple, int]:
        return {t: i for i, t in enumerate(self.triples)}

    def arrow_of(self, dom: int, label: int, cod: int) -> int:
        """Arrow index of the triple (dom, label, cod).

        Raises:
            KeyError: if the triple is not an arrow of D(S)
        """
        return self.index[DTriple(dom, label, cod)]

    def __repr__(self) -> str:
        kept = "all" if self.support is None else len(self.support)
        return f"DCategory({self.semigroup!r}, arrows={len(self.triples)}, support={kept})"


# =============================================================================
# Composition
# =============================================================================

def witnesses(b: int, y: int, semigroup: FiniteSemigroup) -> list[int | None]:
    """Every w in S^1 with b w = y, the adjoined identity first."""
    found: list[int | None] = [ONE] if y == b else []
    found.extend(w for w in semigroup.elements if semigroup.table[b][w] == y)
    return found


def _times(semigroup: FiniteSemigroup, x: int, w: int | None) -> int:
    return x if w is ONE else semigroup.table[x][w]


def all_witness_labels(f: DTriple, g: DTriple, semigroup: FiniteSemigroup) -> set[int]:
    """Composite labels f.label * w over every admissible witness w."""
    return {_times(semigroup, f.label, w) for w in witnesses(g.dom, g.label, semigroup)}


def compose_d(
    f: DTriple,
    g: DTriple,
    semigroup: FiniteSemigroup,
    check_witnesses: bool = False,
) -> DTriple:
    """(a, x, b) then (b, y, c) is (a, x w, c) for any w in S^1 with b w = y.

    Raises:
        NotComposable: if f.cod differs from g.dom
        InternalDisagreement: if check_witnesses is set and two witnesses
            give different labels
    """
    if f.cod != g.dom:
        raise NotComposable(f"{f} ends at {f.cod} but {g} starts at {g.dom}")
    choices = witnesses(g.dom, g.label, semigroup)
    if not choices:
        raise NotComposable(f"{g} is not an arrow of D(S)")
    if check_witnesses:
        labels = all_witness_labels(f, g, semigroup)
        if len(labels) != 1:
            raise InternalDisagreement(f"witnesses for {f} then {g} give labels {sorted(labels)}")
    return DTriple(f.dom, _times(semigroup, f.label, choices[0]), g.cod)


# =============================================================================
# Construction
# =============================================================================

def _triple_label(semigroup: FiniteSemigroup, t: DTriple) -> str:
    return f"{semigroup.label(t.dom)} -{semigroup.label(t.label)}-> {semigroup.label(t.cod)}"


def d_arrow_count(semigroup: FiniteSemigroup, support: frozenset[int] | None = None) -> int:
    """Arrows of D(S), or of its restriction to `support`, counted without building it."""
    counts = ideal_intersection_sizes(semigroup)
    if support is None:
        return int(counts.sum())
    keep = sorted(support)
    return int(counts[np.ix_(keep, keep)].sum()) + semigroup.size - len(keep)


def _triples(semigroup: FiniteSemigroup, support: frozenset[int] | None) -> tuple[DTriple, ...]:
    rights = [right_ideal(semigroup, a) for a in semigroup.elements]
    lefts = [left_ideal(semigroup, b) for b in semigroup.elements]
    triples = []
    for a in semigroup.elements:
        for b in semigroup.elements:
            if support is None or (a in support and b in support):
                triples.extend(DTriple(a, x, b) for x in sorted(rights[a] & lefts[b]))
            elif a == b:
                triples.append(DTriple(a, a, a))
    return tuple(triples)


@lru_cache(maxsize=64)
def _build(semigroup: FiniteSemigroup, check_witnesses: bool, support: frozenset[int] | None) -> DCategory:
    triples = _triples(semigroup, support)
    index = {t: i for i, t in enumerate(triples)}
    arrows = tuple((t.dom, t.cod) for t in triples)

    # first witness per (b, y); the adjoined identity wins when y = b
    first_witness: dict[tuple[int, int], int | None] = {(b, b): ONE for b in semigroup.elements}
    for b in semigroup.elements:
        for w in semigroup.elements:
            first_witness.setdefault((b, semigroup.table[b][w]), w)

    outgoing: dict[int, list[DTriple]] = {}
    for t in triples:
        outgoing.setdefault(t.dom, []).append(t)

    compose: dict[tuple[int, int], int] = {}
    for f in triples:
        for g in outgoing.get(f.cod, []):
            if check_witnesses:
                labels = all_witness_labels(f, g, semigroup)
                if len(labels) != 1:
                    raise InternalDisagreement(f"witnesses for {f} then {g} give labels {sorted(labels)}")
            label = _times(semigroup, f.label, first_witness[(g.dom, g.label)])
            compose[(index[f], index[g])] = index[DTriple(f.dom, label, g.cod)]

    cat = FinCategory(
        object_count=semigroup.size,
        arrows=arrows,
        identity_of=tuple(index[DTriple(a, a, a)] for a in semigroup.elements),
        compose=compose,
        arrow_labels=tuple(_triple_label(semigroup, t) for t in triples),
        object_labels=semigroup.labels,
    )
    e_arrows = frozenset(i for i, t in enumerate(triples) if t.label == t.cod)
    m_arrows = frozenset(i for i, t in enumerate(triples) if t.label == t.dom)
    logger.debug("D(S) for %r has %d arrows", semigroup, len(triples))
    return DCategory(
        cat=cat,
        e_arrows=WideSubcategory(cat, e_arrows),
        m_arrows=WideSubcategory(cat, m_arrows),
        unit=semigroup.identity,
        semigroup=semigroup,
        triples=triples,
        support=support,
    )


def build_d_category(
    semigroup: FiniteSemigroup,
    check_witnesses: bool | None = None,
    support: Iterable[int] | None = None,
) -> DCategory:
    """Build D(S) with E = {(a, x, x)}, M = {(x, x, b)} and unit 1 when S is a monoid.

    Arrows are ordered by (dom, cod, label).

    Args:
        check_witnesses: Evaluate every witness of every composite; defaults
            to SFS_DEBUG_WITNESS_CHECK
        support: Keep only the arrows between these elements (the identity
            of S is always added); every other object keeps just its identity

    Raises:
        BudgetExceeded: if the category would have more than SFS_ARROW_CAP arrows
        InternalDisagreement: if witness checking finds a composite whose
            label depends on the witness
    """
    if check_witnesses is None:
        check_witnesses = config.DEBUG_WITNESS_CHECK
    if support is not None:
        support = frozenset(support)
        if semigroup.identity is not None:
            support |= {semigroup.identity}
    check_arrow_cap(d_arrow_count(semigroup, support), what=f"D(S) of {semigroup!r}")
    return _build(semigroup, bool(check_witnesses), support)


def d_category_for(semigroup: FiniteSemigroup, homs: Sequence[Homomorphism]) -> DCategory:
    """D(S) in full when it fits under the arrow cap, else restricted to the images of `homs`."""
    if d_arrow_count(semigroup) <= config.ARROW_CAP:
        return build_d_category(semigroup)
    support = frozenset(h(x) for h in homs for x in h.source.elements)
    logger.debug("restricting D(S) of %r to %d objects", semigroup, len(support))
    return build_d_category(semigroup, support=support)


def d_functor(
    h: Homomorphism,
    source_d: DCategory | None = None,
    target_d: DCategory | None = None,
) -> Functor:
    """D(h): (a, x, b) goes to (h(a), h(x), h(b)).

    Without an explicit target, D of the target past the arrow cap is
    restricted to the image of h and the identity.

    Raises:
        InvalidHomomorphism: if h does not preserve products
    """
    if not check_homomorphism(h):
        raise InvalidHomomorphism(f"{h!r} does not preserve products")
    source_d = source_d or build_d_category(h.source)
    target_d = target_d or d_category_for(h.target, [h])
    arrow_map = tuple(
        target_d.arrow_of(h(t.dom), h(t.label), h(t.cod)) for t in source_d.triples
    )
    return Functor(source_d, target_d, h.map, arrow_map)
