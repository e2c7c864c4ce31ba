"""Grothendieck-ring data of fibers and the structural theorem checks."""

from __future__ import annotations

from .fusion import (
    FPdim,
    FusionData,
    RegularCheck,
    action_matrices,
    chevalley_locus_membership,
    fiber_irreps,
    fpdim,
    regular_identity_check,
    tensor_multiplicities,
)
from .orbits import OrbitData, coset_orbit_check, recognize_value, restricted_characters, subgroup_I
from .theorems import ANCHORS, level_equivalence, sd_profile, theorem_checkers

__all__ = [
    "FPdim",
    "FusionData",
    "RegularCheck",
    "action_matrices",
    "chevalley_locus_membership",
    "fiber_irreps",
    "fpdim",
    "regular_identity_check",
    "tensor_multiplicities",
    "OrbitData",
    "coset_orbit_check",
    "recognize_value",
    "restricted_characters",
    "subgroup_I",
    "ANCHORS",
    "level_equivalence",
    "sd_profile",
    "theorem_checkers",
]
