from .equivalence import (
    EnlargementWitness,
    EquivalencePackage,
    corner_monoid,
    decide_morita,
    enlargement_from_equivalence,
    equivalence_from_enlargement,
    find_adjoint_equivalence,
    is_enlargement,
    verify_package,
)

__all__ = [
    "EnlargementWitness",
    "EquivalencePackage",
    "corner_monoid",
    "decide_morita",
    "enlargement_from_equivalence",
    "equivalence_from_enlargement",
    "find_adjoint_equivalence",
    "is_enlargement",
    "verify_package",
]
