"""Poincare series of joint covariants and invariants of binary forms.

Series come back as dicts with ``numerator`` ([{coeff, exponents}]),
``denominator`` ([{base_exponents, multiplicity}]), ``text`` and ``latex``.
Exponent vectors list z1..zn, then t.
"""

from ._core import (
    covariants,
    dimension,
    dimension_by_extraction,
    expand,
    invariants,
    normalize,
    omega_count,
    series_equal,
    verify,
)

__all__ = [
    "covariants",
    "dimension",
    "dimension_by_extraction",
    "expand",
    "invariants",
    "normalize",
    "omega_count",
    "series_equal",
    "verify",
]
