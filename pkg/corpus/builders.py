"""Constructors for the built-in semigroups, categories and bundles."""

import itertools
from collections.abc import Mapping
from dataclasses import dataclass, field, fields
from types import MappingProxyType

from categories.structures import FinCategory, SfsCategory
from models.errors import ClosureBudgetExceeded, NotConstructible
from semigroups.core import make_from_table
from semigroups.structures import FiniteSemigroup, Homomorphism, Transformation
from semigroups.transformations import generate_transformation_monoid
from two_cells.conjugations import Conjugation


@dataclass(frozen=True)
class ExampleBundle:
    """Named semigroups, homomorphisms, conjugations and elements built together."""

    semigroups: Mapping[str, FiniteSemigroup] = field(default_factory=dict)
    homomorphisms: Mapping[str, Homomorphism] = field(default_factory=dict)
    conjugations: Mapping[str, Conjugation] = field(default_factory=dict)
    elements: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        # shared through the registry cache
        for f in fields(self):
            object.__setattr__(self, f.name, MappingProxyType(dict(getattr(self, f.name))))


# =============================================================================
# Semigroups
# =============================================================================

def trivial() -> FiniteSemigroup:
    return make_from_table([[0]], identity=0, labels=["1"])


def cyclic(n: int) -> FiniteSemigroup:
    """Z/n under addition, identity 0."""
    return make_from_table([[(i + j) % n for j in range(n)] for i in range(n)], identity=0)


def min_monoid(n: int) -> FiniteSemigroup:
    """{0..n} under min, identity n."""
    return make_from_table([[min(i, j) for j in range(n + 1)] for i in range(n + 1)], identity=n)


def left_zero(n: int) -> FiniteSemigroup:
    """n elements with xy = x."""
    return make_from_table([[i] * n for i in range(n)])


def semilattice2() -> FiniteSemigroup:
    """{1, a} with aa = a."""
    return make_from_table([[0, 1], [1, 1]], identity=0, labels=["1", "a"])


def _transposition(k: int) -> Transformation:
    return Transformation.of([2, 1] + list(range(3, k + 1)))


def _cycle(k: int) -> Transformation:
    return Transformation.of(list(range(2, k + 1)) + [1])


def _collapse(k: int) -> Transformation:
    return Transformation.of([1, 1] + list(range(3, k + 1)))


def sym_group(k: int) -> FiniteSemigroup:
    """The symmetric group on {1..k} as transformations."""
    gens = [] if k == 1 else [_transposition(k), _cycle(k)]
    return generate_transformation_monoid(k, gens)


def t_monoid(k: int) -> FiniteSemigroup:
    """The full transformation monoid T(k)."""
    gens = [] if k == 1 else [_transposition(k), _cycle(k), _collapse(k)]
    return generate_transformation_monoid(k, gens)


def submonoids_t3() -> list[FiniteSemigroup]:
    """Every submonoid of T(3) with at most four elements, ordered by size then carrier."""
    others = [t for t in itertools.product(range(1, 4), repeat=3) if t != (1, 2, 3)]
    found: dict[frozenset, FiniteSemigroup] = {}
    for count in range(4):
        for gens in itertools.combinations(others, count):
            try:
                monoid = generate_transformation_monoid(3, [Transformation.of(g) for g in gens], budget=4)
            except ClosureBudgetExceeded:
                continue
            found.setdefault(frozenset(monoid.labels), monoid)
    return sorted(found.values(), key=lambda m: (m.size, sorted(m.labels)))


# =============================================================================
# Categories
# =============================================================================

def _subset(mask: int, k: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(k) if mask >> i & 1)


def _subset_label(points: tuple[int, ...]) -> str:
    return "{" + ",".join(str(p) for p in points) + "}"


def powerset(k: int) -> SfsCategory:
    """Subsets of {1..k} and all functions between them.

    E holds the surjections and M the inclusions; there is no unit.
    """
    subsets = [_subset(mask, k) for mask in range(2 ** k)]
    arrows: list[tuple[int, int]] = []
    images: list[dict[int, int]] = []
    labels: list[str] = []
    for a, dom in enumerate(subsets):
        for b, cod in enumerate(subsets):
            for values in itertools.product(cod, repeat=len(dom)):
                arrows.append((a, b))
                images.append(dict(zip(dom, values)))
                body = " ".join(f"{p}:{v}" for p, v in zip(dom, values))
                labels.append(f"{_subset_label(dom)} -> {_subset_label(cod)} [{body}]")

    index = {(arrows[f], tuple(sorted(images[f].items()))): f for f in range(len(arrows))}
    compose: dict[tuple[int, int], int] = {}
    outgoing: dict[int, list[int]] = {}
    for f, (a, _) in enumerate(arrows):
        outgoing.setdefault(a, []).append(f)
    for f, (a, b) in enumerate(arrows):
        for g in outgoing.get(b, []):
            c = arrows[g][1]
            composite = tuple(sorted((p, images[g][v]) for p, v in images[f].items()))
            compose[(f, g)] = index[((a, c), composite)]

    identity_of = tuple(index[((a, a), tuple((p, p) for p in dom))] for a, dom in enumerate(subsets))
    cat = FinCategory(
        object_count=len(subsets),
        arrows=tuple(arrows),
        identity_of=identity_of,
        compose=compose,
        arrow_labels=tuple(labels),
        object_labels=tuple(_subset_label(s) for s in subsets),
    )
    surjections = [f for f, (_, b) in enumerate(arrows) if set(images[f].values()) == set(subsets[b])]
    inclusions = [f for f in range(len(arrows)) if all(p == v for p, v in images[f].items())]
    return SfsCategory.build(cat, surjections, inclusions)


def chain_min(n: int) -> SfsCategory:
    """Objects 0..n, arrows a -x-> b for x <= min(a, b), composed by min.

    a -x-> b factors as a ->> x >-> b; the unit is n.
    """
    triples = [(a, x, b) for a in range(n + 1) for b in range(n + 1) for x in range(min(a, b) + 1)]
    index = {t: i for i, t in enumerate(triples)}
    compose = {
        (index[(a, x, b)], index[(b, y, c)]): index[(a, min(x, y), c)]
        for (a, x, b) in triples
        for (b2, y, c) in triples
        if b2 == b
    }
    cat = FinCategory(
        object_count=n + 1,
        arrows=tuple((a, b) for a, _, b in triples),
        identity_of=tuple(index[(a, a, a)] for a in range(n + 1)),
        compose=compose,
        arrow_labels=tuple(f"{a} -{x}-> {b}" for a, x, b in triples),
    )
    e_arrows = [i for i, (a, x, b) in enumerate(triples) if x == b]
    m_arrows = [i for i, (a, x, b) in enumerate(triples) if x == a]
    return SfsCategory.build(cat, e_arrows, m_arrows, unit=n)


# =============================================================================
# Bundles
# =============================================================================

def paper_s2_t4() -> ExampleBundle:
    """S(2) -> T(4) with f(a b) = (a b 3 4), g(a b) = (a b 3 3), h(a b) = (a b 4 4).

    alpha = (1 2 3 3) is a conjugation f => g and h => g; beta = (1 2 4 4)
    inverts it as a conjugation h => g.
    """
    s2, t4 = sym_group(2), t_monoid(4)

    def extend(tail: str) -> Homomorphism:
        images = tuple(t4.index_of(s2.label(x)[:-1] + " " + tail + ")") for x in s2.elements)
        return Homomorphism(s2, t4, images)

    f, g, h = extend("3 4"), extend("3 3"), extend("4 4")
    alpha, beta = t4.index_of("(1 2 3 3)"), t4.index_of("(1 2 4 4)")
    return ExampleBundle(
        semigroups={"s2": s2, "t4": t4},
        homomorphisms={"f": f, "g": g, "h": h},
        conjugations={"alpha_fg": Conjugation(f, g, alpha), "alpha_hg": Conjugation(h, g, alpha)},
        elements={"alpha": alpha, "beta": beta},
    )


def submonoid_bundle() -> ExampleBundle:
    return ExampleBundle(semigroups={f"m{i}": m for i, m in enumerate(submonoids_t3())})


def naturals_add():
    """(N, +, 0) has an infinite carrier."""
    raise NotConstructible("naturals_add has an infinite carrier and is registered for reference only")
