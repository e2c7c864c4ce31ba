"""Tensor-action matrices on Grothendieck groups of fibers and FP dimensions."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import CertificationFailed, IdentityViolation
from ..exactmath import PerronEstimate, perron_eigenvalue
from ..findim import (
    StructureConstAlgebra,
    chevalley_property,
    composition_multiplicities,
    irreducible_reps,
    is_semisimple_module,
    sd,
)
from ..presentation import HopfPresentation
from ..presentation.central import CentralCharacter
from ..presentation.reps import Representation, basis_action, rep_from_basis_action, tensor_rep

__all__ = [
    "FusionData",
    "FPdim",
    "RegularCheck",
    "fiber_irreps",
    "action_matrices",
    "fpdim",
    "regular_identity_check",
    "chevalley_locus_membership",
    "tensor_multiplicities",
]

PERRON_TOL = 1e-9


@dataclass(frozen=True)
class FusionData:
    character: CentralCharacter
    irr_labels: tuple[tuple[str, int], ...]  # identity-fiber irreducibles with dimensions
    target_labels: tuple[tuple[str, int], ...]  # irreducibles of the target fiber
    action_matrices: dict  # label -> integer ndarray, entry (k, j) = [V (x) W_j : W_k]
    regular_matrix: np.ndarray
    fpdim_values: dict  # label -> float


@dataclass(frozen=True)
class FPdim:
    value: float | int
    method: str  # "fusion" (exact) or "perron"
    tol: float = 0.0
    estimate: PerronEstimate | None = None


@dataclass(frozen=True)
class RegularCheck:
    status: str  # "pass" or "skipped"
    regular_matrix: np.ndarray | None = None
    sd_identity: int | None = None
    reason: str = ""


def fiber_irreps(pres: HopfPresentation, chi: CentralCharacter, seed: int = 0) -> tuple[StructureConstAlgebra, list[Representation]]:
    """The fiber at ``chi`` and one numeric representative of each irreducible."""
    A = pres.build_fiber(chi)
    reps = [rep_from_basis_action(pres, chi, A, mats) for mats in irreducible_reps(A, seed)]
    return A, reps


def tensor_multiplicities(
    pres: HopfPresentation, A: StructureConstAlgebra, rep: Representation, seed: int = 0
) -> tuple[int, ...]:
    """Composition multiplicities of a module over the fiber ``A``."""
    return composition_multiplicities(A, basis_action(pres, rep.numeric()), seed)


def action_matrices(pres: HopfPresentation, chi: CentralCharacter, seed: int = 0) -> FusionData:
    """How identity-fiber irreducibles act by tensoring on the fiber at ``chi``."""
    memo = pres.__dict__.setdefault("_fusion", {})
    if (chi, seed) in memo:
        return memo[(chi, seed)]
    ident = pres.identity_character()
    _, V = fiber_irreps(pres, ident, seed)
    A, W = fiber_irreps(pres, chi, seed)
    wdims = [w.dim for w in W]
    labels = tuple((f"V{i + 1}", v.dim) for i, v in enumerate(V))
    targets = tuple((f"W{j + 1}", d) for j, d in enumerate(wdims))
    mats = {}
    for (label, dv), v in zip(labels, V):
        cols = []
        for j, w in enumerate(W):
            mult = tensor_multiplicities(pres, A, tensor_rep(pres, v, w), seed)
            if sum(m * d for m, d in zip(mult, wdims)) != dv * wdims[j]:
                raise CertificationFailed(f"dimension count fails for {label} (x) W{j + 1}")
            cols.append(mult)
        mats[label] = np.array(cols, dtype=np.int64).T.reshape(len(W), len(W))
    regular = sum((dv * mats[label] for label, dv in labels), np.zeros((len(W), len(W)), dtype=np.int64))
    fp = {}
    for label, dv in labels:
        fp[label] = float(dv) if chi != ident else perron_eigenvalue(mats[label]).value
    data = FusionData(chi, labels, targets, mats, regular, fp)
    memo[(chi, seed)] = data
    return data


def fpdim(pres: HopfPresentation, seed: int = 0) -> FPdim:
    """Frobenius-Perron dimension of the Grothendieck ring of the identity fiber."""
    A0 = pres.identity_fiber()
    if chevalley_property(A0).holds:
        return FPdim(sd(A0), "fusion")
    fd = action_matrices(pres, pres.identity_character(), seed)
    est = perron_eigenvalue(fd.regular_matrix, tol=PERRON_TOL)
    return FPdim(est.value, "perron", max(est.upper - est.lower, PERRON_TOL), est)


def regular_identity_check(pres: HopfPresentation, chi: CentralCharacter, seed: int = 0) -> RegularCheck:
    """Exact identities for the regular element acting on the fiber at ``chi``."""
    A0 = pres.identity_fiber()
    if not chevalley_property(A0).holds:
        return RegularCheck("skipped", reason="identity fiber lacks the Chevalley property")
    s0 = sd(A0)
    T = action_matrices(pres, chi, seed).regular_matrix
    if not np.array_equal(T @ T, s0 * T):
        raise IdentityViolation(f"T_R^2 != {s0} T_R at {chi.label()}: T_R = {T.tolist()}")
    if int(np.trace(T)) != s0:
        raise IdentityViolation(f"trace(T_R) = {int(np.trace(T))} != {s0} at {chi.label()}")
    if not (T > 0).all():
        raise IdentityViolation(f"T_R has a nonpositive entry at {chi.label()}: {T.tolist()}")
    return RegularCheck("pass", T, s0)


def chevalley_locus_membership(pres: HopfPresentation, chi: CentralCharacter, seed: int = 0) -> bool:
    """Whether every identity-fiber irreducible tensored with every fiber irreducible is semisimple."""
    _, V = fiber_irreps(pres, pres.identity_character(), seed)
    A, W = fiber_irreps(pres, chi, seed)
    for v in V:
        for w in W:
            if not is_semisimple_module(A, basis_action(pres, tensor_rep(pres, v, w))):
                return False
    return True
