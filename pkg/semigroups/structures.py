"""Finite semigroups, transformations and homomorphisms.

Elements are dense indices 0..n-1 into a Cayley table; labels are only for
display. Row i of the table holds the products i*j.
"""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from models.errors import NotAMonoid


@dataclass(frozen=True)
class FiniteSemigroup:
    """A finite semigroup given by its Cayley table."""

    size: int
    table: tuple[tuple[int, ...], ...]
    identity: int | None = None
    labels: tuple[str, ...] | None = None

    def mul(self, a: int, b: int) -> int:
        """Product a*b."""
        return self.table[a][b]

    def product(self, *elements: int) -> int:
        """Left-to-right product of one or more elements."""
        result = elements[0]
        for x in elements[1:]:
            result = self.table[result][x]
        return result

    @property
    def elements(self) -> range:
        return range(self.size)

    @property
    def is_monoid(self) -> bool:
        return self.identity is not None

    @property
    def one(self) -> int:
        """The identity element.

        Raises:
            NotAMonoid: if the semigroup has no identity
        """
        if self.identity is None:
            raise NotAMonoid("semigroup has no identity element")
        return self.identity

    def label(self, x: int) -> str:
        """Display string for an element."""
        if self.labels is not None:
            return self.labels[x]
        return str(x)

    def index_of(self, label: str) -> int:
        """Element index for a display label.

        Raises:
            KeyError: if no element carries the label
        """
        return self._label_index[label]

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {self.label(x): x for x in self.elements}

    @cached_property
    def array(self) -> np.ndarray:
        """Read-only numpy view of the Cayley table."""
        arr = np.array(self.table, dtype=np.int64).reshape(self.size, self.size)
        arr.setflags(write=False)
        return arr

    def __repr__(self) -> str:
        kind = "monoid" if self.is_monoid else "semigroup"
        return f"FiniteSemigroup({kind}, size={self.size})"


@dataclass(frozen=True)
class Transformation:
    """A full transformation of {1..arity}, written by its image list."""

    arity: int
    images: tuple[int, ...]

    def __post_init__(self):
        if self.arity < 1:
            raise ValueError("arity must be positive")
        if len(self.images) != self.arity:
            raise ValueError(f"expected {self.arity} images, got {len(self.images)}")
        if any(not 1 <= v <= self.arity for v in self.images):
            raise ValueError(f"images must lie in 1..{self.arity}: {self.images}")

    @classmethod
    def of(cls, images) -> "Transformation":
        """Build from any sequence of 1-based images."""
        images = tuple(int(v) for v in images)
        return cls(arity=len(images), images=images)

    @classmethod
    def identity_map(cls, arity: int) -> "Transformation":
        return cls(arity=arity, images=tuple(range(1, arity + 1)))

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def then(self, other: "Transformation") -> "Transformation":
        """Product self*other: apply self first, then other."""
        return Transformation(self.arity, tuple(other(self(x)) for x in range(1, self.arity + 1)))

    @property
    def label(self) -> str:
        return "(" + " ".join(str(v) for v in self.images) + ")"


@dataclass(frozen=True)
class Homomorphism:
    """A map between finite semigroups, one target index per source element."""

    source: FiniteSemigroup
    target: FiniteSemigroup
    map: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.map[x]

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.array(self.map, dtype=np.int64)
        arr.setflags(write=False)
        return arr

    @property
    def image_of_one(self) -> int:
        """Image of the source identity."""
        return self.map[self.source.one]

    def __repr__(self) -> str:
        return f"Homomorphism({self.source!r} -> {self.target!r}, map={list(self.map)})"
