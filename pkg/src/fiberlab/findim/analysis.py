"""Radical, semisimple quotient, blocks, irreducibles and module tests.

Everything with an integer answer is computed exactly where possible; block
sizes, irreducible matrices and composition multiplicities go through a
seeded numeric step and are certified against the exact dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..errors import CertificationFailed, MissingCoalgebraData
from ..exactmath import ONE, ZERO, Matrix, Scalar, inverse, kernel, span_basis
from ..exactmath.matrix import _rref_rows
from .algebra import StructureConstAlgebra

__all__ = [
    "RadicalData",
    "BlockData",
    "ChevalleyResult",
    "regular_rep",
    "jacobson_radical",
    "quotient_algebra",
    "semisimple_quotient",
    "center_basis",
    "sd",
    "irr_count",
    "block_dims",
    "irreducible_reps",
    "composition_multiplicities",
    "is_semisimple_module",
    "abelianization",
    "one_dim_rep_count",
    "chevalley_property",
    "ideal_closure",
    "trace_form",
    "CLUSTER_GAP",
    "ROUND_TOL",
]

CLUSTER_GAP = 1e-8
ROUND_TOL = 1e-6
REP_TOL = 1e-8
MAX_DRAWS = 25


@dataclass(frozen=True)
class RadicalData:
    radical_basis: tuple[tuple[Scalar, ...], ...]
    ss_dim: int
    quotient_projection: Matrix  # ss_dim x dim
    complement: tuple[tuple[Scalar, ...], ...]  # lifts of the quotient basis


@dataclass(frozen=True)
class BlockData:
    block_dims: tuple[int, ...]
    central_idempotents: tuple[np.ndarray, ...]  # quotient coordinates
    irr_count: int
    lifted_idempotents: tuple[np.ndarray, ...]  # coordinates in the algebra


@dataclass(frozen=True)
class ChevalleyResult:
    holds: bool
    failed: str | None = None  # "counit", "coproduct" or "antipode"
    witness: tuple[Scalar, ...] | None = None
    witness_image: object = None

    def __bool__(self):
        return self.holds


def _cache(A: StructureConstAlgebra) -> dict:
    return A.__dict__.setdefault("_analysis_cache", {})


def regular_rep(A: StructureConstAlgebra) -> list[Matrix]:
    return A.regular_rep()


# -- exact subspace helpers --------------------------------------------
def _complement(basis: Sequence[Sequence[Scalar]], dim: int) -> list[tuple[Scalar, ...]]:
    """Unit vectors spanning a complement of an echelon basis."""
    pivots = set()
    for b in basis:
        pivots.add(next(i for i, x in enumerate(b) if not x.is_zero()))
    return [tuple(ONE if k == p else ZERO for k in range(dim)) for p in range(dim) if p not in pivots]


def ideal_closure(A: StructureConstAlgebra, vectors: Sequence[Sequence[Scalar]]) -> list[tuple[Scalar, ...]]:
    """Echelon basis of the two-sided ideal generated by ``vectors``."""
    n = A.dim
    basis = span_basis([tuple(v) for v in vectors], n)
    e = [A.basis_vector(i) for i in range(n)]
    while True:
        new = list(basis)
        for v in basis:
            for b in e:
                new.append(A.mul(b, v))
                new.append(A.mul(v, b))
        nb = span_basis(new, n)
        if len(nb) == len(basis):
            return nb
        basis = nb


def quotient_algebra(A: StructureConstAlgebra, ideal: Sequence[Sequence[Scalar]], label: str = ""):
    """Quotient by an ideal given by an echelon basis; returns (Q, P, complement)."""
    n = A.dim
    comp = _complement(ideal, n)
    q = len(comp)
    if q == 0:
        empty = StructureConstAlgebra(0, (), (), (), None, {}, label)
        return empty, Matrix.zeros(0, n), ()
    full = Matrix.from_columns(list(comp) + [tuple(v) for v in ideal])
    inv = inverse(full)
    P = Matrix._raw(inv.data[:q], q, n)
    sc = []
    for a in comp:
        row = []
        for b in comp:
            row.append(P.apply(A.mul(a, b)))
        sc.append(tuple(row))
    unit = P.apply(A.unit)
    labels = tuple(A.basis_labels[next(i for i, x in enumerate(c) if not x.is_zero())] for c in comp)
    gens = {g: P.apply(v) for g, v in A.generator_coords.items()}
    return StructureConstAlgebra(q, labels, tuple(sc), unit, None, gens, label), P, tuple(comp)


# -- radical -------------------------------------------------------------
def trace_form(A: StructureConstAlgebra) -> Matrix:
    t = A.regular_traces
    n = A.dim
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = ZERO
            for k, c in A._sparse[i][j]:
                acc = acc + c * t[k]
            row.append(acc)
        rows.append(row)
    return Matrix(rows)


def jacobson_radical(A: StructureConstAlgebra) -> RadicalData:
    """Radical as the kernel of the trace form ``(a, b) -> tr(L_a L_b)``."""
    cache = _cache(A)
    if "radical" in cache:
        return cache["radical"]
    ker = kernel(trace_form(A))
    basis = span_basis(ker, A.dim) if ker else []
    Q, P, comp = quotient_algebra(A, basis, label=f"{A.label}/J")
    data = RadicalData(tuple(basis), A.dim - len(basis), P, comp)
    cache["radical"] = data
    cache["quotient"] = Q
    return data


def semisimple_quotient(A: StructureConstAlgebra) -> StructureConstAlgebra:
    jacobson_radical(A)
    return _cache(A)["quotient"]


def sd(A: StructureConstAlgebra) -> int:
    return jacobson_radical(A).ss_dim


def center_basis(A: StructureConstAlgebra) -> list[tuple[Scalar, ...]]:
    n = A.dim
    if n == 0:
        return []
    rows = []
    for j in range(n):
        # z -> z b_j - b_j z, as a matrix acting on z
        for k in range(n):
            rows.append([A.sc[i][j][k] - A.sc[j][i][k] for i in range(n)])
    return kernel(Matrix(rows))


def irr_count(A: StructureConstAlgebra) -> int:
    cache = _cache(A)
    if "irr_count" not in cache:
        cache["irr_count"] = len(center_basis(semisimple_quotient(A)))
    return cache["irr_count"]


# -- blocks ----------------------------------------------------------------
def _rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(np.uint64(seed % (1 << 64)))


def _min_poly_degree_and_coeffs(Q: StructureConstAlgebra, c: tuple[Scalar, ...], bound: int):
    """Exact monic minimal polynomial of ``c`` (lowest degree first)."""
    powers = [Q.unit]
    for d in range(1, bound + 2):
        powers.append(Q.mul(powers[-1], c))
        # solve powers[d] = sum_{i<d} a_i powers[i]
        mat = Matrix.from_columns(powers[:d])
        aug = [list(r) + [v] for r, v in zip(mat.data, powers[d])]
        red, piv = _rref_rows(aug, d + 1)
        if d not in piv:
            sol = [ZERO] * d
            for i, p in enumerate(piv):
                sol[p] = red[i][d]
            return d, [-s for s in sol] + [ONE]
    return None, None


def block_dims(A: StructureConstAlgebra, seed: int = 0) -> BlockData:
    cache = _cache(A)
    key = ("blocks", seed)
    if key in cache:
        return cache[key]
    rad = jacobson_radical(A)
    Q = semisimple_quotient(A)
    s = Q.dim
    r = irr_count(A)
    zb = center_basis(Q)
    rng = _rng(seed)
    L = Q.numeric_left
    idems: list[np.ndarray] = []
    if r == 1:
        idems = [np.array([complex(x) for x in Q.unit])]
    else:
        for _ in range(MAX_DRAWS):
            coeffs = rng.integers(-9, 10, size=len(zb))
            c = tuple(sum((int(a) * v[k] for a, v in zip(coeffs, zb)), ZERO) for k in range(s))
            deg, mp = _min_poly_degree_and_coeffs(Q, c, r)
            if deg != r:
                continue
            roots = np.roots([complex(x) for x in reversed(mp)])
            gaps = [abs(a - b) for i, a in enumerate(roots) for b in roots[i + 1 :]]
            if gaps and min(gaps) < CLUSTER_GAP:
                continue
            cn = np.array([complex(x) for x in c])
            Lc = np.tensordot(cn, L, axes=1)
            unit = np.array([complex(x) for x in Q.unit])
            idems = []
            for i, lam in enumerate(roots):
                e = unit.copy()
                for j, mu in enumerate(roots):
                    if j != i:
                        e = (Lc @ e - mu * e) / (lam - mu)
                idems.append(e)
            break
        else:
            raise CertificationFailed("could not draw a central element generating the center")
    dims = []
    for e in idems:
        tr = np.trace(np.tensordot(e, L, axes=1))
        root = np.sqrt(tr.real) if tr.real > 0 else 0.0
        n = int(round(root))
        if n < 1 or abs(tr - n * n) > ROUND_TOL:
            raise CertificationFailed(f"block trace {tr} is not a perfect square")
        dims.append(n)
    if sum(n * n for n in dims) != rad.ss_dim or len(dims) != r:
        raise CertificationFailed(
            f"block sizes {dims} do not certify against ss_dim {rad.ss_dim} and {r} central blocks"
        )
    order = sorted(
        range(len(dims)),
        key=lambda i: (dims[i], tuple(np.round(idems[i].real, 6)), tuple(np.round(idems[i].imag, 6))),
    )
    dims = [dims[i] for i in order]
    idems = [idems[i] for i in order]
    comp = np.array([[complex(x) for x in c] for c in rad.complement]).reshape(s, A.dim)
    lifted = tuple(e @ comp for e in idems)
    data = BlockData(tuple(dims), tuple(idems), r, lifted)
    cache[key] = data
    return data


def irreducible_reps(A: StructureConstAlgebra, seed: int = 0) -> list[list[np.ndarray]]:
    """One numeric irreducible per block, as matrices of the basis of ``A``."""
    cache = _cache(A)
    key = ("irreps", seed)
    if key in cache:
        return cache[key]
    blocks = block_dims(A, seed)
    rad = jacobson_radical(A)
    Q = semisimple_quotient(A)
    L = Q.numeric_left
    S = Q.numeric_sc
    P = rad.quotient_projection.to_numpy().reshape(Q.dim, A.dim)
    rng = _rng(seed + 1)
    reps = []
    for n, e in zip(blocks.block_dims, blocks.central_idempotents):
        Le = np.tensordot(e, L, axes=1)
        u, sv, _ = np.linalg.svd(Le)
        img = u[:, : n * n]
        if n == 1:
            U = img
        else:
            for _ in range(MAX_DRAWS):
                y = Le @ (rng.standard_normal(Q.dim) + 1j * rng.standard_normal(Q.dim))
                Ry = np.einsum("jik,i->kj", S, y)
                R = img.conj().T @ Ry @ img
                scale = max(np.linalg.norm(R, 2), 1.0)
                evals = np.linalg.eigvals(R)
                # a generic right multiplication has n-fold eigenvalues; average the cluster
                lam = np.mean(evals[np.argsort(np.abs(evals - evals[0]))[:n]])
                _, s2, vh = np.linalg.svd(R - lam * np.eye(n * n))
                if s2[-n] < 1e-7 * scale and s2[-n - 1] > 1e-4 * scale:
                    U = img @ vh[-n:].conj().T
                    break
            else:
                raise CertificationFailed("could not isolate an irreducible left ideal")
            U, _ = np.linalg.qr(U)
        rho_q = [U.conj().T @ L[a] @ U for a in range(Q.dim)]
        for a in range(Q.dim):
            if np.max(np.abs(L[a] @ U - U @ rho_q[a]), initial=0.0) > REP_TOL * max(1.0, np.linalg.norm(L[a], 2)):
                raise CertificationFailed("extracted subspace is not invariant")
        rho = [sum(P[a, k] * rho_q[a] for a in range(Q.dim)) for k in range(A.dim)]
        reps.append([np.asarray(m, dtype=complex).reshape(n, n) for m in rho])
    _check_rep(A, reps)
    cache[key] = reps
    return reps


def _check_rep(A: StructureConstAlgebra, reps) -> None:
    S = A.numeric_sc
    for rho in reps:
        stack = np.array(rho)
        norms = np.array([np.linalg.norm(m, 2) for m in rho])
        for i in range(A.dim):
            for j in range(A.dim):
                lhs = rho[i] @ rho[j]
                rhs = np.tensordot(S[i, j], stack, axes=1)
                # backward-error scale: size of the two sides before cancellation
                scale = max(1.0, norms[i] * norms[j] + float(np.abs(S[i, j]) @ norms))
                if np.max(np.abs(lhs - rhs), initial=0.0) > REP_TOL * scale:
                    raise CertificationFailed("irreducible matrices violate the structure constants")


def _module_trace(M: Sequence, coeffs: np.ndarray) -> complex:
    tr = 0j
    for c, m in zip(coeffs, M):
        if c != 0:
            tr += c * complex(np.trace(m.to_numpy() if isinstance(m, Matrix) else m))
    return tr


def composition_multiplicities(A: StructureConstAlgebra, M: Sequence, seed: int = 0) -> tuple[int, ...]:
    """Multiplicities of each block's irreducible in a module of basis matrices."""
    blocks = block_dims(A, seed)
    dim_m = M[0].shape[0] if len(M) else 0
    out = []
    for n, e in zip(blocks.block_dims, blocks.lifted_idempotents):
        val = _module_trace(M, e) / n
        m = int(round(val.real))
        if abs(val - m) > ROUND_TOL or m < 0:
            raise CertificationFailed(f"multiplicity estimate {val} is not a nonnegative integer")
        out.append(m)
    if sum(m * n for m, n in zip(out, blocks.block_dims)) != dim_m:
        raise CertificationFailed("multiplicities do not account for the module dimension")
    return tuple(out)


def is_semisimple_module(A: StructureConstAlgebra, M: Sequence, tol: float = REP_TOL) -> bool:
    """True iff every radical element acts as zero."""
    rad = jacobson_radical(A)
    exact = all(isinstance(m, Matrix) for m in M)
    for r in rad.radical_basis:
        if exact:
            acc = None
            for c, m in zip(r, M):
                if not c.is_zero():
                    acc = m * c if acc is None else acc + m * c
            if acc is not None and not acc.is_zero():
                return False
        else:
            acc = sum(complex(c) * np.asarray(m.to_numpy() if isinstance(m, Matrix) else m) for c, m in zip(r, M) if not c.is_zero())
            if np.max(np.abs(acc), initial=0.0) > tol:
                return False
    return True


def abelianization(A: StructureConstAlgebra) -> StructureConstAlgebra:
    cache = _cache(A)
    if "abelianization" not in cache:
        n = A.dim
        comm = []
        for i in range(n):
            for j in range(i + 1, n):
                v = tuple(a - b for a, b in zip(A.sc[i][j], A.sc[j][i]))
                if any(not x.is_zero() for x in v):
                    comm.append(v)
        ideal = ideal_closure(A, comm) if comm else []
        cache["abelianization"] = quotient_algebra(A, ideal, label=f"{A.label}/[A,A]")[0]
    return cache["abelianization"]


def one_dim_rep_count(A: StructureConstAlgebra) -> int:
    ab = abelianization(A)
    return sd(ab) if ab.dim else 0


def chevalley_property(A: StructureConstAlgebra) -> ChevalleyResult:
    """Whether the radical is a Hopf ideal, with a violating radical vector if not."""
    if A.coalgebra is None:
        raise MissingCoalgebraData("the Chevalley test needs coproduct, counit and antipode")
    rad = jacobson_radical(A)
    n = A.dim
    P = rad.quotient_projection
    co = A.coalgebra
    for r in rad.radical_basis:
        eps = sum((c * e for c, e in zip(r, co.epsilon)), ZERO)
        if not eps.is_zero():
            return ChevalleyResult(False, "counit", r, eps)
        d = co.delta.apply(r)
        D = Matrix([d[i * n : (i + 1) * n] for i in range(n)])
        img = P @ D @ P.T
        if not img.is_zero():
            return ChevalleyResult(False, "coproduct", r, img)
        s = P.apply(co.antipode.apply(r))
        if any(not x.is_zero() for x in s):
            return ChevalleyResult(False, "antipode", r, s)
    return ChevalleyResult(True)
