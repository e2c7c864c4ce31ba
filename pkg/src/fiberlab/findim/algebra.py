"""Finite-dimensional algebras given by structure constants."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from ..exactmath import ONE, ZERO, Matrix, Scalar

__all__ = ["Coalgebra", "StructureConstAlgebra", "Vector"]

Vector = tuple  # tuple[Scalar, ...]


@dataclass(frozen=True)
class Coalgebra:
    """Coproduct, counit and antipode on the basis.

    ``delta`` has shape ``(dim*dim, dim)``: column ``i`` holds the coordinates
    of ``Delta(b_i)`` in the basis ``b_j (x) b_k`` at index ``j*dim + k``.
    """

    delta: Matrix
    epsilon: tuple
    antipode: Matrix


@dataclass(frozen=True, eq=False)
class StructureConstAlgebra:
    dim: int
    basis_labels: tuple[str, ...]
    sc: tuple  # sc[i][j] = coordinates of b_i b_j
    unit: tuple
    coalgebra: Coalgebra | None = None
    generator_coords: dict = field(default_factory=dict)
    label: str = ""

    @cached_property
    def _sparse(self) -> list[list[list[tuple[int, Scalar]]]]:
        return [[[(k, c) for k, c in enumerate(v) if not c.is_zero()] for v in row] for row in self.sc]

    def basis_vector(self, i: int) -> tuple:
        return tuple(ONE if k == i else ZERO for k in range(self.dim))

    def mul(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> tuple:
        out = [ZERO] * self.dim
        sp = self._sparse
        for i, a in enumerate(u):
            if a.is_zero():
                continue
            row = sp[i]
            for j, b in enumerate(v):
                if b.is_zero():
                    continue
                ab = a * b
                for k, c in row[j]:
                    out[k] = out[k] + ab * c
        return tuple(out)

    def regular_rep(self) -> list[Matrix]:
        """Left multiplication matrices; column j of L_i is b_i b_j."""
        return [Matrix.from_columns([self.sc[i][j] for j in range(self.dim)]) for i in range(self.dim)]

    def left_mult(self, u: Sequence[Scalar]) -> Matrix:
        return Matrix.from_columns([self.mul(u, self.basis_vector(j)) for j in range(self.dim)])

    def right_mult(self, u: Sequence[Scalar]) -> Matrix:
        return Matrix.from_columns([self.mul(self.basis_vector(j), u) for j in range(self.dim)])

    @cached_property
    def regular_traces(self) -> tuple:
        """tr(L_{b_i}) for each basis element."""
        return tuple(sum((self.sc[i][j][j] for j in range(self.dim)), ZERO) for i in range(self.dim))

    @cached_property
    def numeric_sc(self) -> np.ndarray:
        """Complex array ``S[i, j, k]`` of the structure constants."""
        out = np.zeros((self.dim, self.dim, self.dim), dtype=complex)
        for i, j in np.ndindex(self.dim, self.dim):
            for k, c in self._sparse[i][j]:
                out[i, j, k] = complex(c)
        return out

    @cached_property
    def numeric_left(self) -> np.ndarray:
        """Stack of left multiplication matrices ``L[i] = (S[i, j, k])_{k, j}``."""
        return np.transpose(self.numeric_sc, (0, 2, 1)).copy()

    # -- validation ---------------------------------------------------
    def associativity_violations(self) -> list[tuple[int, int, int]]:
        bad = []
        e = [self.basis_vector(i) for i in range(self.dim)]
        prods = [[self.sc[i][j] for j in range(self.dim)] for i in range(self.dim)]
        for i in range(self.dim):
            for j in range(self.dim):
                for k in range(self.dim):
                    if self.mul(prods[i][j], e[k]) != self.mul(e[i], prods[j][k]):
                        bad.append((i, j, k))
        return bad

    def unit_ok(self) -> bool:
        return all(
            self.mul(self.unit, self.basis_vector(i)) == self.basis_vector(i)
            and self.mul(self.basis_vector(i), self.unit) == self.basis_vector(i)
            for i in range(self.dim)
        )

    def hopf_violations(self) -> list[str]:
        """Coassociativity, counit, multiplicativity and antipode axioms on the basis."""
        if self.coalgebra is None:
            return ["no coalgebra data"]
        d = self.dim
        co = self.coalgebra
        delta = [co.delta.column(i) for i in range(d)]
        out = []
        for i in range(d):
            t = delta[i]
            # (Delta (x) id) Delta == (id (x) Delta) Delta
            left = [ZERO] * (d**3)
            right = [ZERO] * (d**3)
            for jk, c in enumerate(t):
                if c.is_zero():
                    continue
                j, k = divmod(jk, d)
                for ab, c2 in enumerate(delta[j]):
                    if not c2.is_zero():
                        left[ab * d + k] += c * c2
                for ab, c2 in enumerate(delta[k]):
                    if not c2.is_zero():
                        right[j * d * d + ab] += c * c2
            if left != right:
                out.append(f"coassociativity fails on {self.basis_labels[i]}")
            # counit
            lhs = [ZERO] * d
            rhs = [ZERO] * d
            for jk, c in enumerate(t):
                if c.is_zero():
                    continue
                j, k = divmod(jk, d)
                lhs[k] += c * co.epsilon[j]
                rhs[j] += c * co.epsilon[k]
            if tuple(lhs) != self.basis_vector(i) or tuple(rhs) != self.basis_vector(i):
                out.append(f"counit axiom fails on {self.basis_labels[i]}")
            # antipode: m(S (x) id) Delta = eps 1 = m(id (x) S) Delta
            s_cols = [co.antipode.column(j) for j in range(d)]
            acc1 = [ZERO] * d
            acc2 = [ZERO] * d
            for jk, c in enumerate(t):
                if c.is_zero():
                    continue
                j, k = divmod(jk, d)
                p1 = self.mul(s_cols[j], self.basis_vector(k))
                p2 = self.mul(self.basis_vector(j), s_cols[k])
                acc1 = [a + c * b for a, b in zip(acc1, p1)]
                acc2 = [a + c * b for a, b in zip(acc2, p2)]
            target = tuple(co.epsilon[i] * u for u in self.unit)
            if tuple(acc1) != target or tuple(acc2) != target:
                out.append(f"antipode axiom fails on {self.basis_labels[i]}")
        # Delta and epsilon are algebra maps
        for i in range(d):
            for j in range(d):
                prod = self.sc[i][j]
                lhs = [ZERO] * (d * d)
                for k, c in enumerate(prod):
                    if not c.is_zero():
                        lhs = [a + c * b for a, b in zip(lhs, delta[k])]
                rhs = [ZERO] * (d * d)
                for ab, c1 in enumerate(delta[i]):
                    if c1.is_zero():
                        continue
                    a1, a2 = divmod(ab, d)
                    for cd, c2 in enumerate(delta[j]):
                        if c2.is_zero():
                            continue
                        b1, b2 = divmod(cd, d)
                        left = self.sc[a1][b1]
                        right = self.sc[a2][b2]
                        cc = c1 * c2
                        for p, x in enumerate(left):
                            if x.is_zero():
                                continue
                            for q, y in enumerate(right):
                                if not y.is_zero():
                                    rhs[p * d + q] += cc * x * y
                if lhs != rhs:
                    out.append(f"coproduct not multiplicative on ({self.basis_labels[i]}, {self.basis_labels[j]})")
                eps_prod = sum((c * co.epsilon[k] for k, c in enumerate(prod)), ZERO)
                if eps_prod != co.epsilon[i] * co.epsilon[j]:
                    out.append(f"counit not multiplicative on ({self.basis_labels[i]}, {self.basis_labels[j]})")
        return out
