"""Regular trace over the central ring, Newton coefficients and the
Cayley-Hamilton identity."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import CHViolation, UnsupportedCentralShape
from ..exactmath import Matrix
from ..presentation.central import CElem, CentralCharacter, CentralDescriptor
from ..presentation.hopf import HopfPresentation

__all__ = [
    "TraceData",
    "NewtonCoefficients",
    "CHReport",
    "CVec",
    "regular_trace_over_C",
    "newton_coefficients",
    "verify_cayley_hamilton",
    "OverC",
]

CVec = tuple  # tuple[CElem, ...]


@dataclass(frozen=True)
class TraceData:
    base: CentralDescriptor
    trace_on_basis: tuple[CElem, ...]
    gram: tuple[tuple[CElem, ...], ...]

    @property
    def shape(self) -> str:
        return self.base.shape

    @property
    def size(self) -> int:
        return len(self.trace_on_basis)

    def gram_at(self, chi: CentralCharacter) -> Matrix:
        return Matrix([[g.evaluate(chi) for g in row] for row in self.gram])


@dataclass(frozen=True)
class NewtonCoefficients:
    values: tuple

    def __getitem__(self, k: int):
        return self.values[k - 1]

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class CHReport:
    degree: int
    samples: int
    trace_of_one: CElem
    max_degree: int  # largest central-polynomial degree seen in intermediate values
    ok: bool


class OverC:
    """The presentation's algebra as a free module over its central ring."""

    def __init__(self, pres: HopfPresentation):
        self.pres = pres
        self.desc = pres.central
        self.n = pres.dim
        self.sc = [
            [[(k, pres.celem(d)) for k, d in sorted(row[j].items())] for j in range(self.n)]
            for row in pres.sc_over_C
        ]
        self.zero = CElem(self.desc)

    def mul(self, u: CVec, v: CVec) -> CVec:
        out = [self.zero] * self.n
        for i, a in enumerate(u):
            if a.is_zero():
                continue
            for j, b in enumerate(v):
                if b.is_zero():
                    continue
                ab = a * b
                for k, c in self.sc[i][j]:
                    out[k] = out[k] + ab * c
        return tuple(out)

    def basis_vector(self, i: int) -> CVec:
        one = CElem.constant(self.desc, 1)
        return tuple(one if k == i else self.zero for k in range(self.n))

    def from_scalars(self, coeffs: Sequence) -> CVec:
        return tuple(CElem.constant(self.desc, c) for c in coeffs)


def regular_trace_over_C(pres: HopfPresentation) -> TraceData:
    """Trace of left multiplication on the fiber basis, kept symbolic in C."""
    if pres.central.shape == "mixed":
        raise UnsupportedCentralShape("symbolic traces need at most one free central symbol")
    ring = OverC(pres)
    n = ring.n
    trace = []
    for i in range(n):
        acc = ring.zero
        for j in range(n):
            for k, c in ring.sc[i][j]:
                if k == j:
                    acc = acc + c
        trace.append(acc)
    gram = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = ring.zero
            for k, c in ring.sc[i][j]:
                acc = acc + c * trace[k]
            row.append(acc)
        gram.append(tuple(row))
    return TraceData(pres.central, tuple(trace), tuple(gram))


def newton_coefficients(power_traces: Sequence) -> NewtonCoefficients:
    """Elementary symmetric functions from power sums ``p_1 .. p_n``.

    ``k c_k = sum_{i=1..k} (-1)^(i-1) c_{k-i} p_i`` with ``c_0 = 1``; works for
    any coefficient type supporting ring operations and scaling by a
    :class:`Fraction`.
    """
    p = list(power_traces)
    if not p:
        raise ValueError("need at least one power trace")
    c = [None] * (len(p) + 1)
    one = p[0] * 0 + 1
    c[0] = one
    for k in range(1, len(p) + 1):
        acc = p[0] * 0
        for i in range(1, k + 1):
            term = c[k - i] * p[i - 1]
            acc = acc + term if i % 2 else acc - term
        c[k] = acc * Fraction(1, k) if not isinstance(acc, int) else Fraction(acc, k)
    return NewtonCoefficients(tuple(c[1:]))


def _trace_of(td: TraceData, v: CVec) -> CElem:
    acc = CElem(td.base)
    for a, t in zip(v, td.trace_on_basis):
        if not a.is_zero():
            acc = acc + a * t
    return acc


def _degree(e: CElem) -> int:
    return max((sum(abs(x) for x in m) for m in e.terms), default=0)


def verify_cayley_hamilton(
    pres: HopfPresentation, degree: int, sample_count: int = 100, seed: int = 0
) -> CHReport:
    """Check ``tr(1) = degree`` and ``p_{n,a}(a) = 0`` on seeded random elements."""
    td = regular_trace_over_C(pres)
    ring = OverC(pres)
    t1 = td.trace_on_basis[pres.unit_index]
    if t1 != CElem.constant(pres.central, degree):
        raise CHViolation(f"tr(1) = {t1}, not {degree}", element="1")
    rng = random.Random(seed)
    n = degree
    max_deg = 0
    unit = ring.basis_vector(pres.unit_index)
    for _ in range(sample_count):
        coeffs = [rng.randint(-3, 3) for _ in range(ring.n)]
        a = ring.from_scalars(coeffs)
        powers = [unit, a]
        for _ in range(n - 1):
            powers.append(ring.mul(powers[-1], a))
        traces = [_trace_of(td, powers[i]) for i in range(1, n + 1)]
        c = newton_coefficients(traces).values
        # p(a) = a^n - c1 a^(n-1) + c2 a^(n-2) - ... + (-1)^n c_n
        val = list(powers[n])
        for k in range(1, n + 1):
            ck = c[k - 1] if k % 2 == 0 else -c[k - 1]
            val = [x + ck * y for x, y in zip(val, powers[n - k])]
        for v in list(c) + [x for p in powers for x in p]:
            max_deg = max(max_deg, _degree(v))
        if any(not x.is_zero() for x in val):
            label = " + ".join(f"{q}*{pres.basis_labels[i]}" for i, q in enumerate(coeffs) if q)
            raise CHViolation(f"p_{n},a(a) != 0 for a = {label}", element=tuple(coeffs))
    return CHReport(degree, sample_count, t1, max_deg, True)
