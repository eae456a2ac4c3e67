"""Regular necklaces and disjoint cycle packings of shift graphs."""

from ._core import (
    GuardExceeded,
    TheoremViolation,
    build_packing,
    canonical,
    count_regular,
    decompose,
    differential_set,
    differential_set_closed_form,
    dual,
    enumerate_balanced,
    exact_nu0,
    find_regular,
    find_regular_word,
    from_word,
    is_balanced,
    is_regular,
    is_symmetric,
    rotation_order,
    run_cli,
    to_dot,
    to_word,
    verify_disjoint,
)

__all__ = [
    "GuardExceeded",
    "TheoremViolation",
    "build_packing",
    "canonical",
    "count_regular",
    "decompose",
    "differential_set",
    "differential_set_closed_form",
    "dual",
    "enumerate_balanced",
    "exact_nu0",
    "find_regular",
    "find_regular_word",
    "from_word",
    "is_balanced",
    "is_regular",
    "is_symmetric",
    "rotation_order",
    "run_cli",
    "to_dot",
    "to_word",
    "verify_disjoint",
]
