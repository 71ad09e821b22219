from .core import inverse_of, is_epi, is_mono, isomorphisms, opposite, verify_category
from .functors import (
    check_functor,
    check_natural_transformation,
    compose_functors,
    enumerate_natural_transformations,
    identity_functor,
    identity_natural_transformation,
    vcompose_nat,
)
from .isomorphism import find_category_isomorphism
from .sfs import (
    dual_sfs,
    first_unital_object,
    is_complete,
    is_proper,
    is_thin,
    is_unital_at,
    parallel_pair,
    spanned_ofs,
    verify_grandis_properties,
    verify_sfs,
)
from .structures import FinCategory, Functor, NatTransf, SfsCategory, WideSubcategory

__all__ = [
    "FinCategory",
    "Functor",
    "NatTransf",
    "SfsCategory",
    "WideSubcategory",
    "check_functor",
    "check_natural_transformation",
    "compose_functors",
    "dual_sfs",
    "enumerate_natural_transformations",
    "find_category_isomorphism",
    "first_unital_object",
    "identity_functor",
    "identity_natural_transformation",
    "inverse_of",
    "is_complete",
    "is_epi",
    "is_mono",
    "is_proper",
    "is_thin",
    "is_unital_at",
    "isomorphisms",
    "opposite",
    "parallel_pair",
    "spanned_ofs",
    "vcompose_nat",
    "verify_category",
    "verify_grandis_properties",
    "verify_sfs",
]
