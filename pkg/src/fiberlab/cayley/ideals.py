"""Discriminant-type ideals of the central ring and their zero loci.

Ideals are kept in a normal form that depends on the shape of the central
ring: unit/zero flags over a field, a monic generator over a univariate
polynomial (or Laurent) ring, and a reduced echelon span over a finite
group algebra.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

import numpy as np

from ..errors import ConsistencyViolation, UnrecognizedRoot, UnsupportedCentralShape
from ..exactmath import ONE, ZERO, Matrix, Poly, Scalar, bareiss_det, det, in_span, poly_gcd_monic, rank, root_of_unity, span_basis
from ..presentation.central import FREE_GROUPLIKE, CElem, CentralCharacter, CentralDescriptor, CharacterSpace
from ..presentation.hopf import HopfPresentation
from .trace import TraceData, regular_trace_over_C

__all__ = [
    "IdealDescriptor",
    "ZeroLocus",
    "modified_discriminant_ideal",
    "discriminant_ideal_sub",
    "discriminant",
    "zero_locus",
    "sd_zero_locus",
    "lowest_level",
    "LevelCertificate",
    "ideal_contains",
    "celem_to_poly",
    "poly_to_celem",
]

MAX_ROOT_ORDER = 24


@dataclass(frozen=True)
class IdealDescriptor:
    base: CentralDescriptor
    form: str  # "unit", "zero", "principal" or "subspace"
    generator: Poly | None = None
    basis: tuple = ()
    sub: bool = False
    sandwich: str | None = None  # "certified" / "not certified" for sub-ideals

    def describe(self) -> str:
        if self.form in ("unit", "zero"):
            return "(1)" if self.form == "unit" else "(0)"
        if self.form == "principal":
            return f"({self.generator.format(self.base.names[0])})"
        gens = [str(_vec_to_celem(self.base, v)) for v in self.basis]
        return "(" + ", ".join(gens) + ")"


@dataclass(frozen=True)
class ZeroLocus:
    kind: str  # "empty", "points" or "all"
    points: tuple[CentralCharacter, ...] = ()
    residual: str | None = None

    def contains(self, chi: CentralCharacter) -> bool:
        if self.kind == "all":
            return True
        return chi in self.points

    def is_empty(self) -> bool:
        return self.kind == "empty"


# -- conversions ----------------------------------------------------------
def _is_laurent(desc: CentralDescriptor) -> bool:
    return desc.symbols[0].kind == FREE_GROUPLIKE


def celem_to_poly(e: CElem, shift: int = 0) -> Poly:
    coeffs: dict[int, Scalar] = {}
    for (k,), c in e.terms.items():
        if k + shift < 0:
            raise ValueError("negative exponent after shift")
        coeffs[k + shift] = c
    top = max(coeffs, default=-1)
    return Poly([coeffs.get(i, ZERO) for i in range(top + 1)])


def poly_to_celem(desc: CentralDescriptor, p: Poly, shift: int = 0) -> CElem:
    return CElem(desc, {(i - shift,): c for i, c in enumerate(p.coeffs) if not c.is_zero()})


def _strip_var(p: Poly) -> Poly:
    """Remove factors of the variable (a unit in a Laurent ring)."""
    k = 0
    while k < len(p.coeffs) and p.coeffs[k].is_zero():
        k += 1
    return Poly(p.coeffs[k:])


def _poly_gram(td: TraceData) -> tuple[list[list[Poly]], int]:
    shift = 0
    if _is_laurent(td.base):
        low = min((m[0] for row in td.gram for e in row for m in e.terms), default=0)
        shift = max(0, -low)
    return [[celem_to_poly(e, shift) for e in row] for row in td.gram], shift


def _pdet(rows) -> Poly:
    return bareiss_det(rows, Poly.constant(1), Poly.is_zero, Poly.exact_div)


def _vec_to_celem(desc: CentralDescriptor, v: Sequence[Scalar]) -> CElem:
    return CElem(desc, dict(zip(desc.torsion_monos(), v)))


def _idempotent(desc: CentralDescriptor, chi: CentralCharacter) -> tuple[Scalar, ...]:
    monos = desc.torsion_monos()
    inv = Fraction(1, len(monos))
    return tuple(chi.evaluate(m).inverse() * inv for m in monos)


def _require_shape(td: TraceData) -> str:
    shape = td.base.shape
    if shape == "mixed":
        raise UnsupportedCentralShape("ideals need a field, one free symbol, or only torsion symbols")
    return shape


def _finite_chars(desc: CentralDescriptor) -> list[CentralCharacter]:
    return CharacterSpace(desc).torsion_characters()


def _span_ideal(desc: CentralDescriptor, chars: Sequence[CentralCharacter], sub: bool = False) -> IdealDescriptor:
    n = len(desc.torsion_monos())
    if not chars:
        return IdealDescriptor(desc, "zero", sub=sub)
    if len(chars) == n:
        return IdealDescriptor(desc, "unit", sub=sub)
    basis = span_basis([_idempotent(desc, c) for c in chars], n)
    return IdealDescriptor(desc, "subspace", basis=tuple(basis), sub=sub)


def _principal(desc: CentralDescriptor, g: Poly | None, sub: bool = False) -> IdealDescriptor:
    if g is None or g.is_zero():
        return IdealDescriptor(desc, "zero", sub=sub)
    if _is_laurent(desc):
        g = _strip_var(g)
    g = g.monic()
    if g.degree == 0:
        return IdealDescriptor(desc, "unit", sub=sub)
    return IdealDescriptor(desc, "principal", generator=g, sub=sub)


# -- minors ----------------------------------------------------------------
def _nonzero_lines(M: list[list[Poly]]) -> tuple[list[int], list[int]]:
    rows = [i for i, r in enumerate(M) if any(not x.is_zero() for x in r)]
    cols = [j for j in range(len(M[0]) if M else 0) if any(not M[i][j].is_zero() for i in range(len(M)))]
    return rows, cols


def _minor_gcd(M: list[list[Poly]], k: int, principal: bool) -> Poly | None:
    """Monic gcd of the k x k minors; stops early once the gcd is constant."""
    rows, cols = _nonzero_lines(M)
    g: Poly | None = None
    for R in combinations(rows, k):
        if principal:
            col_sets = [R] if all(c in cols for c in R) else []
        else:
            live = [c for c in cols if any(not M[r][c].is_zero() for r in R)]
            if len(live) < k:
                continue
            col_sets = combinations(live, k)
        for C in col_sets:
            d = _pdet([[M[r][c] for c in C] for r in R])
            if d.is_zero():
                continue
            g = d.monic() if g is None else poly_gcd_monic(g, d)
            if g.degree == 0:
                return g
    return g


def _has_nonzero_principal_minor(m: Matrix, k: int) -> bool:
    data = m.data
    for S in combinations(range(m.rows), k):
        if not det(Matrix([[data[i][j] for j in S] for i in S])).is_zero():
            return True
    return False


def modified_discriminant_ideal(td: TraceData, k: int) -> IdealDescriptor:
    """Ideal of C generated by all k x k minors of the Gram matrix."""
    shape = _require_shape(td)
    n = td.size
    if k < 1:
        raise ValueError("k must be positive")
    if k > n:
        return IdealDescriptor(td.base, "zero")
    if shape == "field":
        point = CentralCharacter((), ())
        return IdealDescriptor(td.base, "unit" if rank(td.gram_at(point)) >= k else "zero")
    if shape == "finite":
        chars = [c for c in _finite_chars(td.base) if rank(td.gram_at(c)) >= k]
        return _span_ideal(td.base, chars)
    M, _ = _poly_gram(td)
    return _principal(td.base, _minor_gcd(M, k, principal=False))


def discriminant_ideal_sub(td: TraceData, k: int, char_space: CharacterSpace | None = None) -> IdealDescriptor:
    """Sub-ideal generated by principal minors, with the zero-locus sandwich status."""
    shape = _require_shape(td)
    n = td.size
    if k > n:
        sub = IdealDescriptor(td.base, "zero", sub=True)
    elif shape == "field":
        point = CentralCharacter((), ())
        ok = _has_nonzero_principal_minor(td.gram_at(point), k)
        sub = IdealDescriptor(td.base, "unit" if ok else "zero", sub=True)
    elif shape == "finite":
        chars = [c for c in _finite_chars(td.base) if _has_nonzero_principal_minor(td.gram_at(c), k)]
        sub = _span_ideal(td.base, chars, sub=True)
    else:
        M, _ = _poly_gram(td)
        sub = _principal(td.base, _minor_gcd(M, k, principal=True), sub=True)
    md = modified_discriminant_ideal(td, k)
    if not ideal_contains(md, sub):
        raise ConsistencyViolation(f"principal-minor ideal is not inside MD_{k}")
    space = char_space or CharacterSpace(td.base)
    same = _same_locus(zero_locus(sub, space), zero_locus(md, space))
    status = "certified" if same else "not certified"
    return IdealDescriptor(sub.base, sub.form, sub.generator, sub.basis, True, status)


def _same_locus(a: ZeroLocus, b: ZeroLocus) -> bool:
    if a.kind != b.kind:
        return False
    if a.kind != "points":
        return True
    return set(a.points) == set(b.points)


def ideal_contains(big: IdealDescriptor, small: IdealDescriptor) -> bool:
    """Exact containment ``small <= big`` between ideals in normal form."""
    if small.form == "zero" or big.form == "unit":
        return True
    if big.form == "zero":
        return False
    if small.form == "unit":
        return False
    if big.form == "principal":
        return (small.generator % big.generator).is_zero()
    return all(in_span(big.basis, v) for v in small.basis)


def discriminant(td: TraceData) -> CElem:
    """Determinant of the full Gram matrix, as an element of C."""
    shape = _require_shape(td)
    desc = td.base
    if shape == "field":
        return CElem.constant(desc, det(td.gram_at(CentralCharacter((), ()))))
    if shape == "finite":
        acc = [ZERO] * len(desc.torsion_monos())
        for chi in _finite_chars(desc):
            d = det(td.gram_at(chi))
            if not d.is_zero():
                acc = [a + d * e for a, e in zip(acc, _idempotent(desc, chi))]
        return _vec_to_celem(desc, acc)
    M, shift = _poly_gram(td)
    return poly_to_celem(desc, _pdet(M), shift * td.size)


# -- zero loci -------------------------------------------------------------
def _recognize(z: complex, p: Poly) -> Scalar | None:
    """Exact cyclotomic value near ``z`` that is a root of ``p``, if any."""
    if abs(z) < 1e-9:
        return ZERO if p(ZERO).is_zero() else None
    r = abs(z)
    arg = cmath.phase(z)
    for order in range(1, MAX_ROOT_ORDER + 1):
        k = round(arg * order / (2 * cmath.pi)) % order
        zeta = root_of_unity(order, k)
        q = z / complex(zeta)
        if abs(q.imag) > 1e-7 * max(1.0, r):
            continue
        frac = Fraction(q.real).limit_denominator(10**6)
        cand = zeta * Scalar.from_rational(frac)
        if abs(complex(cand) - z) < 1e-7 * max(1.0, r) and p(cand).is_zero():
            return cand
    return None


def _exact_roots(p: Poly) -> tuple[list[Scalar], Poly]:
    roots: list[Scalar] = []
    rest = p
    while rest.degree > 0:
        numeric = np.roots([complex(c) for c in reversed(rest.coeffs)])
        found = None
        for z in numeric:
            found = _recognize(complex(z), rest)
            if found is not None:
                break
        if found is None:
            break
        if found not in roots:
            roots.append(found)
        rest = rest.exact_div(Poly((-found, ONE)))
    return roots, rest


def zero_locus(ideal: IdealDescriptor, char_space: CharacterSpace) -> ZeroLocus:
    """Exact vanishing set of an ideal on the character space of C."""
    if ideal.form == "unit":
        return ZeroLocus("empty")
    if ideal.form == "zero":
        return ZeroLocus("all")
    desc = ideal.base
    if ideal.form == "subspace":
        pts = tuple(
            chi
            for chi in char_space.torsion_characters()
            if all(_vec_to_celem(desc, v).evaluate(chi).is_zero() for v in ideal.basis)
        )
        return ZeroLocus("points", pts) if pts else ZeroLocus("empty")
    roots, rest = _exact_roots(ideal.generator)
    if rest.degree > 0:
        raise UnrecognizedRoot(
            f"factor {rest.format(desc.names[0])} has roots outside the recognizable cyclotomic values"
        )
    pts = tuple(sorted((char_space.make([r]) for r in roots), key=lambda c: complex(c.values[0]).real))
    return ZeroLocus("points", pts) if pts else ZeroLocus("empty")


def sd_zero_locus(
    pres: HopfPresentation,
    k: int,
    samples=None,
    td: TraceData | None = None,
    check: bool = True,
) -> tuple[CentralCharacter, ...]:
    """Sampled characters with Sd < k, gated against the MD_k zero locus."""
    from ..findim import sd

    space = pres.character_space(samples)
    out = []
    for chi in space.sampled():
        if sd(pres.build_fiber(chi)) < k:
            out.append(chi)
    if check and pres.central.shape != "mixed":
        td = td or regular_trace_over_C(pres)
        locus = zero_locus(modified_discriminant_ideal(td, k), space)
        for chi in space.sampled():
            if locus.contains(chi) != (chi in out):
                raise ConsistencyViolation(
                    f"Sd route and MD_{k} route disagree at {chi.label()}"
                )
    return tuple(out)


@dataclass(frozen=True)
class LevelCertificate:
    level: int
    scan_level: int
    fpdim_level: int | None  # None when the identity fiber lacks the Chevalley property
    sd_profile: dict = field(default_factory=dict)


def lowest_level(pres: HopfPresentation, samples=None, seed: int = 0) -> LevelCertificate:
    """Least k with a nonempty discriminant locus, found two ways."""
    from ..findim import chevalley_property, sd
    from ..grothendieck import fpdim

    space = pres.character_space(samples)
    profile = {chi: sd(pres.build_fiber(chi)) for chi in space.sampled()}
    scan = None
    for k in range(1, pres.dim + 2):
        if sd_zero_locus(pres, k, samples):
            scan = k
            break
    if scan is None:
        raise ConsistencyViolation("no level has a nonempty locus")
    via_fp = None
    if chevalley_property(pres.identity_fiber()).holds:
        fp = fpdim(pres, seed=seed)
        via_fp = int(fp.value) + 1
        if via_fp != scan:
            raise ConsistencyViolation(f"scan gives level {scan}, FPdim gives {via_fp}")
    return LevelCertificate(scan, scan, via_fp, profile)
