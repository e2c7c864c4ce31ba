"""Matrix representations of a presentation, their tensor products and duals.

Action matrices are either exact :class:`Matrix` values or complex numpy
arrays; the helpers below dispatch on the type so the same code serves the
explicit exact modules and the numerically extracted irreducibles.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from ..exactmath import ZERO, Matrix, Scalar
from .central import CentralCharacter, convolve, inverse_char
from .hopf import HopfPresentation
from .words import NCPoly, TensorPoly

__all__ = [
    "Representation",
    "RepCheck",
    "trivial_rep",
    "verify_rep",
    "evaluate",
    "basis_action",
    "tensor_rep",
    "dual_rep",
    "rep_from_basis_action",
    "direct_sum",
    "word_matrix",
    "NUMERIC_TOL",
]

NUMERIC_TOL = 1e-8


def _is_exact(a) -> bool:
    return isinstance(a, Matrix)


def _eye(n: int, exact: bool):
    return Matrix.identity(n) if exact else np.eye(n, dtype=complex)


def _zeros(n: int, exact: bool):
    return Matrix.zeros(n, n) if exact else np.zeros((n, n), dtype=complex)


def _scale(c: Scalar, a):
    return a * c if _is_exact(a) else complex(c) * a


def _mm(a, b):
    return a @ b


def _kron(a, b):
    return a.kron(b) if _is_exact(a) else np.kron(a, b)


def _transpose(a):
    return a.T


def _is_zero(a, tol: float) -> bool:
    if _is_exact(a):
        return a.is_zero()
    return bool(np.max(np.abs(a), initial=0.0) < tol)


def _to_numpy(a) -> np.ndarray:
    return a.to_numpy() if _is_exact(a) else np.asarray(a, dtype=complex)


@dataclass(frozen=True, eq=False)
class Representation:
    character: CentralCharacter
    dim: int
    action: Mapping[str, object]  # generator name -> Matrix | ndarray

    @property
    def exact(self) -> bool:
        return all(_is_exact(m) for m in self.action.values())

    def numeric(self) -> Representation:
        return Representation(self.character, self.dim, {g: _to_numpy(m) for g, m in self.action.items()})


@dataclass(frozen=True)
class RepCheck:
    ok: bool
    violated: str | None = None

    def __bool__(self):
        return self.ok


def word_matrix(pres: HopfPresentation, rep: Representation, w: Sequence[int]):
    exact = rep.exact
    out = _eye(rep.dim, exact)
    for g in w:
        out = _mm(out, rep.action[pres.generators[g]] if exact else _to_numpy(rep.action[pres.generators[g]]))
    return out


def evaluate(pres: HopfPresentation, rep: Representation, p: NCPoly):
    """Matrix of an element, central monomials specialized at the rep's character."""
    exact = rep.exact
    out = _zeros(rep.dim, exact)
    for (m, w), c in p.terms.items():
        coeff = c * rep.character.evaluate(m)
        if coeff.is_zero():
            continue
        out = out + _scale(coeff, word_matrix(pres, rep, w))
    return out


def verify_rep(pres: HopfPresentation, rep: Representation, tol: float = NUMERIC_TOL) -> RepCheck:
    """Check every rule and the central action as matrix identities."""
    for g in pres.generators:
        if g not in rep.action:
            return RepCheck(False, f"no matrix for generator {g}")
        shape = rep.action[g].shape
        if tuple(shape) != (rep.dim, rep.dim):
            return RepCheck(False, f"matrix for {g} has shape {tuple(shape)}")
    for r in pres.rules:
        diff = evaluate(pres, rep, pres.poly(r.lhs)) - evaluate(pres, rep, r.rhs)
        if not _is_zero(diff, tol):
            return RepCheck(False, f"{pres.format_word(r.lhs)} -> {pres.format_poly(r.rhs)}")
    for i, s in enumerate(pres.central.symbols):
        value = rep.character.values[i]
        diff = word_matrix(pres, rep, s.word) - _scale(value, _eye(rep.dim, rep.exact))
        if not _is_zero(diff, tol):
            return RepCheck(False, f"central symbol {s.name} does not act by {value}")
    return RepCheck(True)


def trivial_rep(pres: HopfPresentation) -> Representation:
    chi = pres.identity_character()
    return Representation(chi, 1, {g: Matrix([[pres.counit[i]]]) for i, g in enumerate(pres.generators)})


def basis_action(pres: HopfPresentation, rep: Representation) -> list:
    """Matrices of the fiber basis words, in basis order."""
    return [word_matrix(pres, rep, w) for w in pres.fiber_basis]


def rep_from_basis_action(pres: HopfPresentation, chi: CentralCharacter, fiber, mats: Sequence) -> Representation:
    """Generator action from matrices of the fiber basis elements."""
    dim = mats[0].shape[0]
    exact = _is_exact(mats[0])
    action = {}
    for g, coords in fiber.generator_coords.items():
        acc = _zeros(dim, exact)
        for c, m in zip(coords, mats):
            if not c.is_zero():
                acc = acc + _scale(c, m)
        action[g] = acc
    return Representation(chi, dim, action)


def _tensor_eval(pres: HopfPresentation, t: TensorPoly, V: Representation, W: Representation):
    exact = V.exact and W.exact
    if not exact:
        V, W = V.numeric(), W.numeric()
    out = _zeros(V.dim * W.dim, exact)
    for ((m1, w1), (m2, w2)), c in t.terms.items():
        coeff = c * V.character.evaluate(m1) * W.character.evaluate(m2)
        if coeff.is_zero():
            continue
        out = out + _scale(coeff, _kron(word_matrix(pres, V, w1), word_matrix(pres, W, w2)))
    return out


def tensor_rep(pres: HopfPresentation, V: Representation, W: Representation) -> Representation:
    """``V (x) W`` with generators acting through their coproducts."""
    action = {g: _tensor_eval(pres, pres.coproduct[i], V, W) for i, g in enumerate(pres.generators)}
    return Representation(convolve(V.character, W.character, pres), V.dim * W.dim, action)


def dual_rep(pres: HopfPresentation, W: Representation) -> Representation:
    """Left dual: ``g`` acts by the transpose of ``W(S(g))``."""
    action = {g: _transpose(evaluate(pres, W, pres.antipode[i])) for i, g in enumerate(pres.generators)}
    return Representation(inverse_char(W.character, pres), W.dim, action)


def direct_sum(V: Representation, W: Representation) -> Representation:
    exact = V.exact and W.exact
    if not exact:
        V, W = V.numeric(), W.numeric()
    action = {}
    for g in V.action:
        a, b = V.action[g], W.action[g]
        if exact:
            n, m = V.dim, W.dim
            rows = [list(r) + [ZERO] * m for r in a.data] + [[ZERO] * n + list(r) for r in b.data]
            action[g] = Matrix(rows)
        else:
            action[g] = np.block(
                [[a, np.zeros((V.dim, W.dim))], [np.zeros((W.dim, V.dim)), b]]
            ).astype(complex)
    return Representation(V.character, V.dim + W.dim, action)

