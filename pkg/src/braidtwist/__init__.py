"""Braid words, the Dehornoy order, and fractional Dehn twist coefficients."""

from .braid import (
    BraidWord,
    Permutation,
    closure_components,
    detect_destabilizable,
    exponent_counts,
    format_word,
    free_reduce,
    garside_delta,
    make_positive,
    parse_word,
    permutation,
    positive_braid_genus,
)
from .ordering import (
    OrderSign,
    ReductionCapError,
    compare,
    handle_reduce,
    order_sign,
    syntactic_sigma_class,
)

__all__ = [
    "BraidWord",
    "OrderSign",
    "Permutation",
    "ReductionCapError",
    "closure_components",
    "compare",
    "detect_destabilizable",
    "exponent_counts",
    "format_word",
    "free_reduce",
    "garside_delta",
    "handle_reduce",
    "make_positive",
    "order_sign",
    "parse_word",
    "permutation",
    "positive_braid_genus",
]
