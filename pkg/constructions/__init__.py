from .freyd import build_freyd_quotient
from .schutzenberger import (
    DCategory,
    DTriple,
    all_witness_labels,
    build_d_category,
    compose_d,
    d_arrow_count,
    d_category_for,
    d_functor,
)
from .sigma import (
    UcCtsfs,
    certify_sfs,
    counit_pair,
    hom_monoid_iso,
    sigma_functor,
    sigma_monoid,
    star,
    unit_is_identity,
)

__all__ = [
    "DCategory",
    "DTriple",
    "UcCtsfs",
    "all_witness_labels",
    "build_d_category",
    "build_freyd_quotient",
    "certify_sfs",
    "compose_d",
    "counit_pair",
    "d_arrow_count",
    "d_category_for",
    "d_functor",
    "hom_monoid_iso",
    "sigma_functor",
    "sigma_monoid",
    "star",
    "unit_is_identity",
]
