from .core import (
    adjoin_identity,
    green_classes,
    green_leq,
    idempotents,
    ideal_intersection_sizes,
    is_idempotent,
    isomorphic_idempotents,
    make_from_table,
)
from .homomorphisms import (
    check_homomorphism,
    compose_homomorphisms,
    enumerate_homomorphisms,
    identity_homomorphism,
)
from .isomorphism import find_isomorphism
from .structures import FiniteSemigroup, Homomorphism, Transformation
from .transformations import generate_transformation_monoid

__all__ = [
    "FiniteSemigroup",
    "Homomorphism",
    "Transformation",
    "adjoin_identity",
    "check_homomorphism",
    "compose_homomorphisms",
    "enumerate_homomorphisms",
    "find_isomorphism",
    "generate_transformation_monoid",
    "green_classes",
    "green_leq",
    "ideal_intersection_sizes",
    "idempotents",
    "identity_homomorphism",
    "is_idempotent",
    "isomorphic_idempotents",
    "make_from_table",
]
