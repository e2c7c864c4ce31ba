"""Presentations of Hopf algebras over a central Hopf subalgebra."""

from .central import (
    FREE_GROUPLIKE,
    PRIMITIVE,
    TORSION,
    CElem,
    CentralCharacter,
    CentralDescriptor,
    CentralSymbol,
    CharacterSpace,
    convolve,
    inverse_char,
)
from .hopf import HopfPresentation, build_fiber, characters_of_C, normal_form, total_algebra
from .parser import parse_presentation
from .reps import (
    Representation,
    basis_action,
    direct_sum,
    dual_rep,
    evaluate,
    rep_from_basis_action,
    tensor_rep,
    trivial_rep,
    verify_rep,
)
from .words import NCPoly, RewriteRule, RewriteSystem, TensorPoly


def critical_pairs_check(pres: HopfPresentation, max_overlap_len: int | None = None) -> list[dict]:
    """Overlaps between rule left-hand sides that fail to join."""
    return pres.system.critical_pairs(max_overlap_len)


__all__ = [
    "FREE_GROUPLIKE",
    "PRIMITIVE",
    "TORSION",
    "CElem",
    "CentralCharacter",
    "CentralDescriptor",
    "CentralSymbol",
    "CharacterSpace",
    "convolve",
    "inverse_char",
    "HopfPresentation",
    "build_fiber",
    "characters_of_C",
    "normal_form",
    "total_algebra",
    "parse_presentation",
    "critical_pairs_check",
    "Representation",
    "basis_action",
    "direct_sum",
    "dual_rep",
    "evaluate",
    "rep_from_basis_action",
    "tensor_rep",
    "trivial_rep",
    "verify_rep",
    "NCPoly",
    "RewriteRule",
    "RewriteSystem",
    "TensorPoly",
]
