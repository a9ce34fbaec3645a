"""Exact algebra for Frobenius factorizations in characteristic p.

Rational function fields F_p(t1..tm), polynomials in x-variables over
them, the coefficient/variable split of the Frobenius map, Hasse
derivatives, bounded-coefficient subrings, and a finite Hahn series model.
"""

from .fields import (
    PPowerDecomposition,
    RationalFunctionField,
    RatFunc,
    in_kp_span,
    kp_independent,
    ppow_decompose,
)
from .frobfactor import INF, Obstruction, f4_decompose, frobenius, level, phi, sigma, sigma_preimage
from .parsing import ParseError, parse_field_element, parse_xpoly
from .poly import XPoly, homogeneous_components, in_positive_ideal

__all__ = [
    "INF",
    "Obstruction",
    "PPowerDecomposition",
    "ParseError",
    "RatFunc",
    "RationalFunctionField",
    "XPoly",
    "f4_decompose",
    "frobenius",
    "homogeneous_components",
    "in_kp_span",
    "in_positive_ideal",
    "kp_independent",
    "level",
    "parse_field_element",
    "parse_xpoly",
    "phi",
    "ppow_decompose",
    "sigma",
    "sigma_preimage",
]
