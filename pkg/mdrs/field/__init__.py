"""
Finite field package
Canonical GF(p^m) arithmetic on integer element codes
"""

from .galois_field import (
    MAX_FIELD_ORDER,
    Element,
    FieldSpec,
    add,
    beta_array,
    element_codes,
    elements,
    field_for_order,
    field_new,
    inv,
    mul,
    neg,
    pow,
)

__all__ = [
    # Types
    "FieldSpec",
    "Element",
    "MAX_FIELD_ORDER",

    # Construction / enumeration
    "field_new",
    "field_for_order",
    "elements",
    "element_codes",
    "beta_array",

    # Arithmetic
    "add",
    "mul",
    "neg",
    "inv",
    "pow",
]
