"""Finite-dimensional algebra analysis over structure constants."""

from __future__ import annotations

from .algebra import Coalgebra, StructureConstAlgebra
from .analysis import (
    BlockData,
    ChevalleyResult,
    RadicalData,
    abelianization,
    block_dims,
    center_basis,
    chevalley_property,
    composition_multiplicities,
    ideal_closure,
    irr_count,
    irreducible_reps,
    is_semisimple_module,
    jacobson_radical,
    one_dim_rep_count,
    quotient_algebra,
    regular_rep,
    sd,
    semisimple_quotient,
    trace_form,
)

__all__ = [
    "Coalgebra",
    "StructureConstAlgebra",
    "BlockData",
    "ChevalleyResult",
    "RadicalData",
    "abelianization",
    "block_dims",
    "center_basis",
    "chevalley_property",
    "composition_multiplicities",
    "ideal_closure",
    "irr_count",
    "irreducible_reps",
    "is_semisimple_module",
    "jacobson_radical",
    "one_dim_rep_count",
    "quotient_algebra",
    "regular_rep",
    "sd",
    "semisimple_quotient",
    "trace_form",
]
