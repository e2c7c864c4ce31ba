"""Traces over the central ring, Cayley-Hamilton checks and discriminant ideals."""

from __future__ import annotations

from .ideals import (
    IdealDescriptor,
    LevelCertificate,
    ZeroLocus,
    celem_to_poly,
    discriminant,
    discriminant_ideal_sub,
    ideal_contains,
    lowest_level,
    modified_discriminant_ideal,
    poly_to_celem,
    sd_zero_locus,
    zero_locus,
)
from .trace import (
    CHReport,
    NewtonCoefficients,
    OverC,
    TraceData,
    newton_coefficients,
    regular_trace_over_C,
    verify_cayley_hamilton,
)

__all__ = [
    "IdealDescriptor",
    "LevelCertificate",
    "ZeroLocus",
    "celem_to_poly",
    "discriminant",
    "discriminant_ideal_sub",
    "ideal_contains",
    "lowest_level",
    "modified_discriminant_ideal",
    "poly_to_celem",
    "sd_zero_locus",
    "zero_locus",
    "CHReport",
    "NewtonCoefficients",
    "OverC",
    "TraceData",
    "newton_coefficients",
    "regular_trace_over_C",
    "verify_cayley_hamilton",
]
