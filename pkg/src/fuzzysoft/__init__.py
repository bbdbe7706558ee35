"""Fuzzy soft sets with exact grades, defined through their image families."""

from .fuzzy import (
    FuzzySet,
    Universe,
    format_grade,
    fs_algebraic_sum,
    fs_complement,
    fs_intersection,
    fs_is_empty,
    fs_is_universal,
    fs_product,
    fs_proper_subset,
    fs_subset,
    fs_union,
    parse_grade,
)
from .softset import (
    Family,
    FuzzySoftSet,
    approx_external,
    approx_external_strict,
    approx_internal,
    approx_internal_strict,
    equiv_external,
    equiv_internal,
    equiv_weak,
    flatten_params,
    make,
    make_absolute,
    make_empty,
    make_null,
    max_family,
    min_family,
    ss_complement,
    ss_equal,
    ss_equivalent,
    ss_intersection,
    ss_isomorphic,
    ss_product,
    ss_sum,
    ss_union,
    tau,
)

__version__ = "0.1.0"
