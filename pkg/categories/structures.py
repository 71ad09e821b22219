"""Finite categories, wide subcategories, SFS categories, functors and natural transformations.

Arrows are dense indices into `arrows`; composition is diagrammatic, so
compose[(f, g)] is "f then g" and needs cod f = dom g.
"""

from dataclasses import dataclass
from functools import cached_property

from models.errors import MissingUnit, NotComposable


@dataclass(frozen=True)
class FinCategory:
    """A finite category with an explicit composition table."""

    object_count: int
    arrows: tuple[tuple[int, int], ...]
    identity_of: tuple[int, ...]
    compose: dict[tuple[int, int], int]
    arrow_labels: tuple[str, ...] | None = None
    object_labels: tuple[str, ...] | None = None

    @property
    def objects(self) -> range:
        return range(self.object_count)

    @property
    def arrow_count(self) -> int:
        return len(self.arrows)

    def dom(self, f: int) -> int:
        return self.arrows[f][0]

    def cod(self, f: int) -> int:
        return self.arrows[f][1]

    def comp(self, f: int, g: int) -> int:
        """The composite f then g.

        Raises:
            NotComposable: if the pair has no entry in the table
        """
        try:
            return self.compose[(f, g)]
        except KeyError:
            raise NotComposable(f"arrows {f} and {g} do not compose") from None

    def is_identity(self, f: int) -> bool:
        return self.identity_of[self.dom(f)] == f

    def hom(self, a: int, b: int) -> list[int]:
        """Arrows a -> b in index order."""
        return self._hom_index.get((a, b), [])

    def out_arrows(self, a: int) -> list[int]:
        return self._out_index.get(a, [])

    def in_arrows(self, b: int) -> list[int]:
        return self._in_index.get(b, [])

    @cached_property
    def _hom_index(self) -> dict[tuple[int, int], list[int]]:
        index: dict[tuple[int, int], list[int]] = {}
        for f, ends in enumerate(self.arrows):
            index.setdefault(tuple(ends), []).append(f)
        return index

    @cached_property
    def _out_index(self) -> dict[int, list[int]]:
        index: dict[int, list[int]] = {}
        for f, (a, _) in enumerate(self.arrows):
            index.setdefault(a, []).append(f)
        return index

    @cached_property
    def _in_index(self) -> dict[int, list[int]]:
        index: dict[int, list[int]] = {}
        for f, (_, b) in enumerate(self.arrows):
            index.setdefault(b, []).append(f)
        return index

    def arrow_label(self, f: int) -> str:
        if self.arrow_labels is not None:
            return self.arrow_labels[f]
        return str(f)

    def object_label(self, a: int) -> str:
        if self.object_labels is not None:
            return self.object_labels[a]
        return str(a)

    def __repr__(self) -> str:
        return f"FinCategory(objects={self.object_count}, arrows={self.arrow_count})"


@dataclass(frozen=True)
class WideSubcategory:
    """A set of arrows of a host category, meant to hold every object."""

    host: FinCategory
    arrow_set: frozenset[int]

    def __contains__(self, f: int) -> bool:
        return f in self.arrow_set

    def __iter__(self):
        return iter(sorted(self.arrow_set))

    def __len__(self) -> int:
        return len(self.arrow_set)

    def hom(self, a: int, b: int) -> list[int]:
        return [f for f in self.host.hom(a, b) if f in self.arrow_set]

    def out_arrows(self, a: int) -> list[int]:
        return [f for f in self.host.out_arrows(a) if f in self.arrow_set]

    def in_arrows(self, b: int) -> list[int]:
        return [f for f in self.host.in_arrows(b) if f in self.arrow_set]

    def __repr__(self) -> str:
        return f"WideSubcategory(arrows={len(self.arrow_set)} of {self.host.arrow_count})"


@dataclass(frozen=True)
class SfsCategory:
    """A category with two wide subcategories (E, M) and an optional unit object."""

    cat: FinCategory
    e_arrows: WideSubcategory
    m_arrows: WideSubcategory
    unit: int | None = None

    @classmethod
    def build(
        cls,
        cat: FinCategory,
        e_arrows,
        m_arrows,
        unit: int | None = None,
    ) -> "SfsCategory":
        """Wrap raw arrow collections as wide subcategories of `cat`."""
        return cls(
            cat=cat,
            e_arrows=WideSubcategory(cat, frozenset(e_arrows)),
            m_arrows=WideSubcategory(cat, frozenset(m_arrows)),
            unit=unit,
        )

    @property
    def zeta(self) -> int:
        """The declared unit.

        Raises:
            MissingUnit: if none was declared
        """
        if self.unit is None:
            raise MissingUnit("category declares no unit object")
        return self.unit

    def unique_e(self, a: int, b: int) -> int | None:
        """The E-arrow a ->> b when there is exactly one."""
        arrows = self.e_arrows.hom(a, b)
        return arrows[0] if len(arrows) == 1 else None

    def unique_m(self, a: int, b: int) -> int | None:
        """The M-arrow a >-> b when there is exactly one."""
        arrows = self.m_arrows.hom(a, b)
        return arrows[0] if len(arrows) == 1 else None

    @cached_property
    def factorizations(self) -> dict[int, list[tuple[int, int]]]:
        """Every (e, m) with e in E, m in M and e then m defined, bucketed by composite."""
        buckets: dict[int, list[tuple[int, int]]] = {f: [] for f in range(self.cat.arrow_count)}
        for e in self.e_arrows:
            for m in self.m_arrows.out_arrows(self.cat.cod(e)):
                composite = self.cat.compose.get((e, m))
                if composite is not None:
                    buckets[composite].append((e, m))
        return buckets

    def factorize(self, f: int) -> tuple[int, int]:
        """The unique (e, m) with e then m equal to f.

        Raises:
            NotComposable: if f has no factorization or more than one
        """
        pairs = self.factorizations[f]
        if len(pairs) != 1:
            raise NotComposable(f"arrow {f} has {len(pairs)} factorizations")
        return pairs[0]

    def middle_object(self, f: int) -> int:
        """Object through which the factorization of f passes."""
        e, _ = self.factorize(f)
        return self.cat.cod(e)

    def __repr__(self) -> str:
        return (f"SfsCategory(objects={self.cat.object_count}, arrows={self.cat.arrow_count}, "
                f"E={len(self.e_arrows)}, M={len(self.m_arrows)}, unit={self.unit})")


def underlying(category: "FinCategory | SfsCategory") -> FinCategory:
    """The plain category behind either kind of value."""
    if isinstance(category, SfsCategory):
        return category.cat
    return category


@dataclass(frozen=True)
class Functor:
    """Object and arrow maps between two finite categories."""

    source: "FinCategory | SfsCategory"
    target: "FinCategory | SfsCategory"
    object_map: tuple[int, ...]
    arrow_map: tuple[int, ...]

    @property
    def source_cat(self) -> FinCategory:
        return underlying(self.source)

    @property
    def target_cat(self) -> FinCategory:
        return underlying(self.target)

    def on_object(self, a: int) -> int:
        return self.object_map[a]

    def on_arrow(self, f: int) -> int:
        return self.arrow_map[f]

    def __repr__(self) -> str:
        return f"Functor({self.source_cat!r} -> {self.target_cat!r})"


@dataclass(frozen=True)
class NatTransf:
    """Components alpha_a: F(a) -> G(a), one target arrow per source object."""

    source_functor: Functor
    target_functor: Functor
    components: tuple[int, ...]

    def __getitem__(self, a: int) -> int:
        return self.components[a]

    def __repr__(self) -> str:
        return f"NatTransf(components={list(self.components)})"
