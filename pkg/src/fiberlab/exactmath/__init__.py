"""Exact scalars, polynomials and linear algebra."""

from .cyclotomic import ONE, ZERO, Scalar, as_scalar, root_of_unity
from .matrix import Matrix, bareiss_det, det, in_span, inverse, kernel, rank, rref, solve, span_basis
from .perron import PerronEstimate, perron_eigenvalue
from .poly import Poly, poly_gcd_monic

__all__ = [
    "ONE",
    "ZERO",
    "Scalar",
    "as_scalar",
    "root_of_unity",
    "scalar_arith",
    "Matrix",
    "bareiss_det",
    "det",
    "in_span",
    "inverse",
    "kernel",
    "rank",
    "rref",
    "solve",
    "span_basis",
    "PerronEstimate",
    "perron_eigenvalue",
    "Poly",
    "poly_gcd_monic",
]


def scalar_arith(a, b, op: str) -> Scalar:
    """Apply ``op`` (add, sub, mul or div) to two scalars."""
    a, b = as_scalar(a), as_scalar(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")
