"""Exact scalars, polynomials and rational functions over Q(i)."""

from .expr import ExprSyntaxError, parse_poly, parse_ratfun, parse_vector
from .poly import Poly, format_poly
from .ratfun import ONE, ZERO, PoleAtZero, RatFun, limit_at_zero, substitute
from .scalar import Q, Scalar, format_number, number, parse_number

__all__ = [
    "ExprSyntaxError",
    "ONE",
    "PoleAtZero",
    "Poly",
    "Q",
    "RatFun",
    "Scalar",
    "ZERO",
    "format_number",
    "format_poly",
    "limit_at_zero",
    "number",
    "parse_number",
    "parse_poly",
    "parse_ratfun",
    "parse_vector",
    "substitute",
]
