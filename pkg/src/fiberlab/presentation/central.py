"""The central Hopf subalgebra: symbols, monomials, elements and characters."""

from __future__ import annotations

import itertools
from math import comb
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from ..errors import UnknownSymbol
from ..exactmath import ONE, ZERO, Scalar, as_scalar, root_of_unity

__all__ = [
    "TORSION",
    "FREE_GROUPLIKE",
    "PRIMITIVE",
    "CentralSymbol",
    "CentralDescriptor",
    "CElem",
    "CentralCharacter",
    "CharacterSpace",
    "convolve",
    "inverse_char",
    "DEFAULT_PRIMITIVE_SAMPLES",
    "DEFAULT_FREE_GROUPLIKE_SAMPLES",
]

TORSION = "group-like-torsion"
FREE_GROUPLIKE = "group-like-free"
PRIMITIVE = "primitive-free"
KINDS = (TORSION, FREE_GROUPLIKE, PRIMITIVE)

DEFAULT_PRIMITIVE_SAMPLES: tuple[Scalar, ...] = tuple(
    as_scalar(v) for v in (0, 1, -1, 2, Fraction(1, 2))
)
DEFAULT_FREE_GROUPLIKE_SAMPLES: tuple[Scalar, ...] = tuple(as_scalar(v) for v in (1, -1, 2))

Mono = tuple  # exponent per central symbol


@dataclass(frozen=True)
class CentralSymbol:
    name: str
    kind: str
    order: int | None = None
    word: tuple[int, ...] | None = None  # defining word in generator indices

    @property
    def grouplike(self) -> bool:
        return self.kind != PRIMITIVE


@dataclass(frozen=True)
class CentralDescriptor:
    symbols: tuple[CentralSymbol, ...] = ()

    def __len__(self) -> int:
        return len(self.symbols)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(s.name for s in self.symbols)

    def index(self, name: str) -> int:
        for i, s in enumerate(self.symbols):
            if s.name == name:
                return i
        raise UnknownSymbol(f"unknown central symbol {name!r}")

    @property
    def one(self) -> Mono:
        return (0,) * len(self.symbols)

    def unit_mono(self, i: int, e: int = 1) -> Mono:
        return self.reduce(tuple(e if k == i else 0 for k in range(len(self.symbols))))

    def reduce(self, mono: Sequence[int]) -> Mono:
        return tuple(
            e % s.order if s.kind == TORSION else e for e, s in zip(mono, self.symbols)
        )

    def mul(self, a: Mono, b: Mono) -> Mono:
        if not self.symbols:
            return ()
        return self.reduce([x + y for x, y in zip(a, b)])

    @property
    def shape(self) -> str:
        """``field``, ``univariate``, ``finite`` or ``mixed``."""
        if not self.symbols:
            return "field"
        kinds = [s.kind for s in self.symbols]
        if all(k == TORSION for k in kinds):
            return "finite"
        if len(kinds) == 1:
            return "univariate"
        return "mixed"

    @property
    def torsion_indices(self) -> tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.symbols) if s.kind == TORSION)

    @property
    def free_indices(self) -> tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.symbols) if s.kind != TORSION)

    def torsion_monos(self) -> list[Mono]:
        """All monomials of a finite central group algebra, lexicographic."""
        if self.shape not in ("finite", "field"):
            raise ValueError("central ring is not finite-dimensional")
        return [tuple(m) for m in itertools.product(*(range(s.order) for s in self.symbols))]

    def format_mono(self, mono: Mono) -> str:
        parts = []
        for e, s in zip(mono, self.symbols):
            if e == 0:
                continue
            parts.append(s.name if e == 1 else f"{s.name}^{e}")
        return " ".join(parts)

    # -- Hopf structure on monomials ----------------------------------
    def counit(self, mono: Mono) -> Scalar:
        for e, s in zip(mono, self.symbols):
            if s.kind == PRIMITIVE and e:
                return ZERO
        return ONE

    def antipode(self, mono: Mono) -> tuple[Scalar, Mono]:
        sign = 1
        out = []
        for e, s in zip(mono, self.symbols):
            if s.kind == PRIMITIVE:
                sign *= (-1) ** e
                out.append(e)
            else:
                out.append(-e)
        return as_scalar(sign), self.reduce(out)

    def coproduct(self, mono: Mono) -> list[tuple[Scalar, Mono, Mono]]:
        """Terms ``c * m1 (x) m2`` of the coproduct of a monomial."""
        terms: list[tuple[Scalar, Mono, Mono]] = [(ONE, self.one, self.one)]
        for i, (e, s) in enumerate(zip(mono, self.symbols)):
            if e == 0:
                continue
            if s.grouplike:
                u = self.unit_mono(i, e)
                terms = [(c, self.mul(a, u), self.mul(b, u)) for c, a, b in terms]
            else:
                split = [(as_scalar(comb(e, k)), self.unit_mono(i, k), self.unit_mono(i, e - k)) for k in range(e + 1)]
                terms = [
                    (c * d, self.mul(a, x), self.mul(b, y)) for c, a, b in terms for d, x, y in split
                ]
        return terms


class CElem:
    """Element of the central ring: a finite sum of coefficient * monomial."""

    __slots__ = ("desc", "terms")

    def __init__(self, desc: CentralDescriptor, terms: Mapping[Mono, Scalar] | None = None):
        self.desc = desc
        self.terms = {m: c for m, c in (terms or {}).items() if not c.is_zero()}

    @classmethod
    def constant(cls, desc: CentralDescriptor, c) -> CElem:
        return cls(desc, {desc.one: as_scalar(c)})

    @classmethod
    def mono(cls, desc: CentralDescriptor, mono: Mono, c=ONE) -> CElem:
        return cls(desc, {desc.reduce(mono): as_scalar(c)})

    def is_zero(self) -> bool:
        return not self.terms

    def _coerce(self, other) -> CElem:
        if isinstance(other, CElem):
            return other
        s = as_scalar(other)
        if s is NotImplemented:
            return NotImplemented
        return CElem.constant(self.desc, s)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, ZERO) + c
        return CElem(self.desc, out)

    __radd__ = __add__

    def __neg__(self):
        return CElem(self.desc, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict = {}
        mul = self.desc.mul
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mul(m1, m2)
                out[m] = out.get(m, ZERO) + c1 * c2
        return CElem(self.desc, out)

    __rmul__ = __mul__

    def evaluate(self, chi: CentralCharacter) -> Scalar:
        acc = ZERO
        for m, c in self.terms.items():
            acc = acc + c * chi.evaluate(m)
        return acc

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"CElem({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            c = self.terms[m]
            ms = self.desc.format_mono(m)
            cs = str(c) if c.is_rational() else f"({c})"
            if not ms:
                parts.append(cs)
            elif c == 1:
                parts.append(ms)
            elif c == -1:
                parts.append("-" + ms)
            else:
                parts.append(f"{cs}*{ms}")
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


@dataclass(frozen=True)
class CentralCharacter:
    """A point of the maximal spectrum: a value for each central symbol."""

    names: tuple[str, ...]
    values: tuple[Scalar, ...]

    def __getitem__(self, name: str) -> Scalar:
        try:
            return self.values[self.names.index(name)]
        except ValueError:
            raise UnknownSymbol(f"unknown central symbol {name!r}") from None

    def evaluate(self, mono: Mono) -> Scalar:
        acc = ONE
        for v, e in zip(self.values, mono):
            if e:
                acc = acc * v**e
        return acc

    def label(self) -> str:
        if not self.names:
            return "(point)"
        return ", ".join(f"{n}={v}" for n, v in zip(self.names, self.values))

    def __str__(self):
        return self.label()


def _validate_value(sym: CentralSymbol, v: Scalar) -> None:
    if sym.kind == TORSION and v**sym.order != ONE:
        raise ValueError(f"{sym.name} must map to a root of unity of order dividing {sym.order}")
    if sym.kind == FREE_GROUPLIKE and v.is_zero():
        raise ValueError(f"{sym.name} must map to a nonzero value")


class CharacterSpace:
    """Enumerates torsion characters exactly and samples free parameters."""

    def __init__(self, desc: CentralDescriptor, samples: Sequence | None = None):
        self.desc = desc
        self.samples = None if samples is None else tuple(as_scalar(s) for s in samples)

    def make(self, values: Mapping[str, object] | Sequence) -> CentralCharacter:
        if isinstance(values, Mapping):
            unknown = set(values) - set(self.desc.names)
            if unknown:
                raise UnknownSymbol(f"unknown central symbol(s) {sorted(unknown)}")
            ident = self.identity()
            vals = tuple(
                as_scalar(values[n]) if n in values else ident.values[i]
                for i, n in enumerate(self.desc.names)
            )
        else:
            vals = tuple(as_scalar(v) for v in values)
        for s, v in zip(self.desc.symbols, vals):
            _validate_value(s, v)
        return CentralCharacter(self.desc.names, vals)

    def identity(self) -> CentralCharacter:
        return CentralCharacter(
            self.desc.names, tuple(ONE if s.grouplike else ZERO for s in self.desc.symbols)
        )

    def free_samples(self, sym: CentralSymbol) -> tuple[Scalar, ...]:
        if self.samples is not None:
            vals = self.samples
            if sym.kind == FREE_GROUPLIKE:
                vals = tuple(v for v in vals if not v.is_zero())
            return vals
        return DEFAULT_PRIMITIVE_SAMPLES if sym.kind == PRIMITIVE else DEFAULT_FREE_GROUPLIKE_SAMPLES

    def _axis(self, sym: CentralSymbol, sampled: bool) -> tuple[Scalar, ...]:
        if sym.kind == TORSION:
            return tuple(root_of_unity(sym.order, e) for e in range(sym.order))
        if not sampled:
            return (ONE if sym.grouplike else ZERO,)
        return self.free_samples(sym)

    def torsion_characters(self) -> list[CentralCharacter]:
        """All torsion characters, free parameters fixed at the identity."""
        axes = [self._axis(s, False) for s in self.desc.symbols]
        return [CentralCharacter(self.desc.names, tuple(v)) for v in itertools.product(*axes)]

    def sampled(self) -> list[CentralCharacter]:
        """Torsion characters times the free-parameter sample set."""
        axes = [self._axis(s, True) for s in self.desc.symbols]
        return [CentralCharacter(self.desc.names, tuple(v)) for v in itertools.product(*axes)]

    def is_finite(self) -> bool:
        return not self.desc.free_indices


def _desc_of(obj) -> CentralDescriptor:
    return obj if isinstance(obj, CentralDescriptor) else obj.central


def convolve(chi: CentralCharacter, psi: CentralCharacter, pres) -> CentralCharacter:
    """Group law on characters induced by the coproduct of the central ring."""
    desc = _desc_of(pres)
    vals = tuple(
        a * b if s.grouplike else a + b for s, a, b in zip(desc.symbols, chi.values, psi.values)
    )
    return CentralCharacter(desc.names, vals)


def inverse_char(chi: CentralCharacter, pres) -> CentralCharacter:
    desc = _desc_of(pres)
    vals = tuple(a.inverse() if s.grouplike else -a for s, a in zip(desc.symbols, chi.values))
    return CentralCharacter(desc.names, vals)

