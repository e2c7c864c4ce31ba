"""Exact dense matrices over cyclotomic scalars, with elimination routines."""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .cyclotomic import ONE, ZERO, Scalar, as_scalar
from ..errors import NonSquare

__all__ = [
    "Matrix",
    "rref",
    "rank",
    "kernel",
    "det",
    "bareiss_det",
    "solve",
    "inverse",
    "span_basis",
    "in_span",
]


class Matrix:
    """Immutable ``rows x cols`` matrix of :class:`Scalar` entries."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Iterable[Iterable], cols: int | None = None):
        data = tuple(tuple(as_scalar(x) for x in row) for row in data)
        self.data = data
        self.rows = len(data)
        self.cols = len(data[0]) if data else (cols or 0)
        if any(len(r) != self.cols for r in data):
            raise ValueError("ragged matrix")

    @classmethod
    def _raw(cls, data, rows: int, cols: int) -> Matrix:
        m = cls.__new__(cls)
        m.data, m.rows, m.cols = data, rows, cols
        return m

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls._raw(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)), n, n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls._raw(tuple((ZERO,) * cols for _ in range(rows)), rows, cols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> Matrix:
        if not columns:
            return cls.zeros(rows or 0, 0)
        return cls(zip(*columns))

    @property
    def entries(self) -> tuple[Scalar, ...]:
        return tuple(x for row in self.data for x in row)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def column(self, j: int) -> tuple[Scalar, ...]:
        return tuple(r[j] for r in self.data)

    @property
    def T(self) -> Matrix:
        return Matrix._raw(tuple(zip(*self.data)) if self.rows else (), self.cols, self.rows)

    def __add__(self, other: Matrix) -> Matrix:
        return Matrix._raw(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.data, other.data)),
            self.rows,
            self.cols,
        )

    def __sub__(self, other: Matrix) -> Matrix:
        return self + other * -1

    def __neg__(self):
        return self * -1

    def __mul__(self, c) -> Matrix:
        c = as_scalar(c)
        if c is NotImplemented:
            return NotImplemented
        return Matrix._raw(tuple(tuple(c * a for a in r) for r in self.data), self.rows, self.cols)

    __rmul__ = __mul__

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols = other.T.data
        out = []
        for r in self.data:
            nz = [(k, a) for k, a in enumerate(r) if not a.is_zero()]
            row = []
            for c in cols:
                acc = ZERO
                for k, a in nz:
                    b = c[k]
                    if not b.is_zero():
                        acc = acc + a * b
                row.append(acc)
            out.append(tuple(row))
        return Matrix._raw(tuple(out), self.rows, other.cols)

    def apply(self, vec: Sequence[Scalar]) -> tuple[Scalar, ...]:
        out = []
        for r in self.data:
            acc = ZERO
            for a, b in zip(r, vec):
                if not a.is_zero() and not b.is_zero():
                    acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def kron(self, other: Matrix) -> Matrix:
        data = []
        for r in self.data:
            for s in other.data:
                data.append(tuple(a * b for a in r for b in s))
        return Matrix._raw(tuple(data), self.rows * other.rows, self.cols * other.cols)

    def trace(self) -> Scalar:
        acc = ZERO
        for i in range(min(self.rows, self.cols)):
            acc = acc + self.data[i][i]
        return acc

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self.data for x in r)

    def to_numpy(self) -> np.ndarray:
        return np.array([[complex(x) for x in r] for r in self.data], dtype=complex).reshape(
            self.rows, self.cols
        )

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __repr__(self):
        return "Matrix([" + ", ".join("[" + ", ".join(map(str, r)) + "]" for r in self.data) + "])"


def _rref_rows(rows: list[list[Scalar]], ncols: int):
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if not rows[i][c].is_zero()), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv if not x.is_zero() else x for x in rows[r]]
        pr = rows[r]
        for i in range(nrows):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [x - f * y if not y.is_zero() else x for x, y in zip(rows[i], pr)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rref(m: Matrix) -> tuple[Matrix, int, tuple[int, ...]]:
    """Reduced row echelon form, rank and pivot columns."""
    rows, piv = _rref_rows([list(r) for r in m.data], m.cols)
    return Matrix._raw(tuple(tuple(r) for r in rows), m.rows, m.cols), len(piv), tuple(piv)


def rank(m: Matrix) -> int:
    return rref(m)[1]


def kernel(m: Matrix) -> list[tuple[Scalar, ...]]:
    """Basis of the right null space ``{v : m v = 0}``."""
    red, rk, piv = rref(m)
    free = [c for c in range(m.cols) if c not in piv]
    basis = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for i, p in enumerate(piv):
            v[p] = -red.data[i][f]
        basis.append(tuple(v))
    return basis


def bareiss_det(rows: Sequence[Sequence], one, is_zero, exact_div):
    """Fraction-free determinant over an integral domain with exact division."""
    a = [list(r) for r in rows]
    n = len(a)
    if any(len(r) != n for r in a):
        raise NonSquare("determinant of a non-square matrix")
    if n == 0:
        return one
    sign = 1
    prev = one
    for k in range(n - 1):
        if is_zero(a[k][k]):
            p = next((i for i in range(k + 1, n) if not is_zero(a[i][k])), None)
            if p is None:
                return a[k][k] * 0
            a[k], a[p] = a[p], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                a[i][j] = exact_div(akk * a[i][j] - aik * a[k][j], prev)
        prev = akk
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def det(m: Matrix) -> Scalar:
    if m.rows != m.cols:
        raise NonSquare("determinant of a non-square matrix")
    return bareiss_det(m.data, ONE, Scalar.is_zero, lambda x, y: x / y)


def solve(m: Matrix, b: Sequence[Scalar]) -> tuple[Scalar, ...] | None:
    """One solution of ``m x = b``, or None when inconsistent."""
    aug = [list(r) + [as_scalar(v)] for r, v in zip(m.data, b)]
    rows, piv = _rref_rows(aug, m.cols + 1)
    if m.cols in piv:
        return None
    x = [ZERO] * m.cols
    for i, p in enumerate(piv):
        x[p] = rows[i][m.cols]
    return tuple(x)


def inverse(m: Matrix) -> Matrix:
    n = m.rows
    if n != m.cols:
        raise NonSquare("inverse of a non-square matrix")
    aug = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(m.data)]
    rows, piv = _rref_rows(aug, n)
    if len(piv) < n or piv[-1] >= n:
        raise ZeroDivisionError("singular matrix")
    return Matrix._raw(tuple(tuple(r[n:]) for r in rows), n, n)


def span_basis(vectors: Sequence[Sequence[Scalar]], dim: int) -> list[tuple[Scalar, ...]]:
    """Reduced echelon basis of the span of ``vectors`` in a ``dim``-space."""
    if not vectors:
        return []
    rows, piv = _rref_rows([list(v) for v in vectors], dim)
    return [tuple(rows[i]) for i in range(len(piv))]


def in_span(basis: Sequence[Sequence[Scalar]], v: Sequence[Scalar]) -> bool:
    """Membership test against a reduced echelon basis from :func:`span_basis`."""
    v = list(v)
    for b in basis:
        p = next(i for i, x in enumerate(b) if not x.is_zero())
        if not v[p].is_zero():
            f = v[p]
            v = [x - f * y for x, y in zip(v, b)]
    return all(x.is_zero() for x in v)
