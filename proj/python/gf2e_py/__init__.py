"""Dense linear algebra over GF(2^e) for 2 <= e <= 10."""

from ._gf2e import (
    Field,
    FieldError,
    Matrix,
    ParseError,
    SingularMatrixError,
    count_products,
    echelonize,
    multiply,
    parse,
    ple,
    serialize,
    slice,
    trsm_lower_left,
    trsm_upper_left,
)

__all__ = [
    "Field",
    "FieldError",
    "Matrix",
    "ParseError",
    "SingularMatrixError",
    "count_products",
    "echelonize",
    "multiply",
    "parse",
    "ple",
    "serialize",
    "slice",
    "trsm_lower_left",
    "trsm_upper_left",
]
