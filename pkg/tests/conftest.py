"""Shared fixtures for the sfs-monoids test suite."""

import pytest

from corpus import build_example
from semigroups.structures import Homomorphism


# =============================================================================
# Corpus Monoids
# =============================================================================

# (name, params) of the corpus monoids with at most four elements
SMALL_MONOIDS = [
    ("trivial", ()),
    ("cyclic", (2,)),
    ("cyclic", (3,)),
    ("cyclic", (4,)),
    ("min_monoid", (1,)),
    ("min_monoid", (2,)),
    ("min_monoid", (3,)),
    ("semilattice2", ()),
    ("sym_group", (2,)),
    ("t_monoid", (2,)),
]

# corpus monoids of five or six elements, still within the exhaustive range
MEDIUM_MONOIDS = [
    ("cyclic", (5,)),
    ("cyclic", (6,)),
    ("min_monoid", (4,)),
    ("min_monoid", (5,)),
    ("sym_group", (3,)),
]


def monoid_id(case: tuple[str, tuple[int, ...]]) -> str:
    name, params = case
    return name + "".join(f"-{p}" for p in params)


def build_monoid(case: tuple[str, tuple[int, ...]]):
    name, params = case
    return build_example(name, *params)


@pytest.fixture
def s2():
    return build_example("sym_group", 2)


@pytest.fixture
def t2():
    return build_example("t_monoid", 2)


@pytest.fixture
def t3():
    return build_example("t_monoid", 3)


@pytest.fixture
def semilattice():
    return build_example("semilattice2")


@pytest.fixture
def s2_t4_bundle():
    return build_example("paper_s2_t4")


# =============================================================================
# Homomorphisms into T(2)
# =============================================================================

@pytest.fixture
def point_maps(t2):
    """Homomorphisms from the trivial monoid picking out each idempotent of T(2)."""
    trivial = build_example("trivial")

    def pick(label: str) -> Homomorphism:
        return Homomorphism(trivial, t2, (t2.index_of(label),))

    return {label: pick(label) for label in ("(1 2)", "(1 1)", "(2 2)")}
