"""Registered corpus examples, their parameter bounds and verified construction."""

import logging
from collections.abc import Callable
from dataclasses import dataclass
from functools import lru_cache

from categories.core import verify_category
from categories.sfs import verify_sfs
from categories.structures import SfsCategory
from corpus import builders
from models.errors import ParamOutOfRange, UnknownExample, VerificationFailed
from models.schemas import ExampleInfo, ExampleKind, ExampleSpec
from semigroups.homomorphisms import check_homomorphism
from two_cells.conjugations import is_conjugation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CorpusEntry:
    """A registered example and the function that builds it."""

    info: ExampleInfo
    builder: Callable


def _entry(name: str, kind: ExampleKind, description: str, builder: Callable,
           bounds: list[tuple[int, int]] | None = None) -> CorpusEntry:
    info = ExampleInfo(name=name, kind=kind, description=description, param_bounds=bounds or [])
    return CorpusEntry(info=info, builder=builder)


CORPUS: list[CorpusEntry] = [
    _entry("trivial", ExampleKind.SEMIGROUP, "One-element monoid", builders.trivial),
    _entry("cyclic", ExampleKind.SEMIGROUP, "Cyclic group Z/n", builders.cyclic, [(1, 8)]),
    _entry("min_monoid", ExampleKind.SEMIGROUP, "{0..n} under min with identity n", builders.min_monoid, [(0, 7)]),
    _entry("left_zero", ExampleKind.SEMIGROUP, "n-element left-zero semigroup", builders.left_zero, [(1, 6)]),
    _entry("semilattice2", ExampleKind.SEMIGROUP, "Two-element semilattice monoid {1, a}", builders.semilattice2),
    _entry("sym_group", ExampleKind.SEMIGROUP, "Symmetric group S(k) as transformations", builders.sym_group, [(1, 4)]),
    _entry("t_monoid", ExampleKind.SEMIGROUP, "Full transformation monoid T(k)", builders.t_monoid, [(1, 4)]),
    _entry("powerset", ExampleKind.CATEGORY, "Subsets of {1..k} with (surjections, inclusions)", builders.powerset, [(0, 3)]),
    _entry("chain_min", ExampleKind.CATEGORY, "Chain category on {0..n} composed by min, unit n", builders.chain_min, [(0, 6)]),
    _entry("paper_s2_t4", ExampleKind.BUNDLE, "Homomorphisms f, g, h: S(2) -> T(4) with alpha and beta",
           builders.paper_s2_t4),
    _entry("submonoids_t3", ExampleKind.BUNDLE, "Submonoids of T(3) with at most four elements",
           builders.submonoid_bundle),
    _entry("naturals_add", ExampleKind.DOCUMENTATION, "(N, +, 0): infinite, reference only", builders.naturals_add),
]


def get_entry(name: str) -> CorpusEntry:
    """Look up a registered example.

    Raises:
        UnknownExample: if no example has that name
    """
    for entry in CORPUS:
        if entry.info.name == name:
            return entry
    raise UnknownExample(f"no corpus example named {name!r}")


def list_examples() -> list[ExampleInfo]:
    """Every registered example, in registration order."""
    return [entry.info for entry in CORPUS]


def _verify(name: str, value) -> None:
    if isinstance(value, SfsCategory):
        report = verify_category(value.cat)
        if not report.passed:
            raise VerificationFailed(f"{name} satisfies the category axioms", str(report.failed_checks()))
        if not verify_sfs(value).passed:
            raise VerificationFailed(f"{name} has unique factorizations")
    elif isinstance(value, builders.ExampleBundle):
        for key, h in value.homomorphisms.items():
            if not check_homomorphism(h):
                raise VerificationFailed(f"{name}.{key} preserves products")
        for key, c in value.conjugations.items():
            if not is_conjugation(c.f, c.g, c.alpha):
                raise VerificationFailed(f"{name}.{key} is a conjugation")


@lru_cache(maxsize=128)
def _build(name: str, params: tuple[int, ...]):
    entry = get_entry(name)
    bounds = entry.info.param_bounds
    if len(params) != len(bounds):
        raise ParamOutOfRange(f"{name} takes {len(bounds)} parameters, got {len(params)}")
    for value, (low, high) in zip(params, bounds):
        if not low <= value <= high:
            raise ParamOutOfRange(f"{name} parameter {value} is outside {low}..{high}")
    value = entry.builder(*params)
    _verify(name, value)
    logger.debug("built corpus example %s%s", name, params)
    return value


def build_example(spec: "ExampleSpec | str", *params: int):
    """Build and verify a registered example.

    Accepts an ExampleSpec or a name followed by its integer parameters.

    Raises:
        UnknownExample: for an unregistered name
        ParamOutOfRange: for a wrong parameter count or value
        NotConstructible: for documentation-only entries
    """
    if isinstance(spec, ExampleSpec):
        return _build(spec.name, tuple(spec.params))
    return _build(spec, tuple(int(p) for p in params))
