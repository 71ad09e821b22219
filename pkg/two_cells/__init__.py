from .conjugations import (
    Conjugation,
    InverseWitness,
    check_triangle_identities,
    conj_to_nat,
    enumerate_conjugations,
    identity_conjugation,
    invert_conjugation,
    is_conjugation,
    make_conjugation,
    nat_to_conj,
    vcompose,
)

__all__ = [
    "Conjugation",
    "InverseWitness",
    "check_triangle_identities",
    "conj_to_nat",
    "enumerate_conjugations",
    "identity_conjugation",
    "invert_conjugation",
    "is_conjugation",
    "make_conjugation",
    "nat_to_conj",
    "vcompose",
]
