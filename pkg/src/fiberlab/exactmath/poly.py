"""Dense univariate polynomials with :class:`Scalar` coefficients."""

from __future__ import annotations

from .cyclotomic import ONE, ZERO, Scalar, as_scalar
from ..errors import BothZero, DivisionByZero

__all__ = ["Poly", "poly_gcd_monic"]


def _trim(coeffs) -> tuple[Scalar, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    """Polynomial ``sum coeffs[i] * T**i``; the zero polynomial has no coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim(as_scalar(c) for c in coeffs)

    @classmethod
    def constant(cls, c) -> Poly:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c=1) -> Poly:
        return cls([ZERO] * degree + [as_scalar(c)])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def lead(self) -> Scalar:
        return self.coeffs[-1] if self.coeffs else ZERO

    def monic(self) -> Poly:
        if not self.coeffs:
            return self
        inv = self.lead.inverse()
        return Poly(c * inv for c in self.coeffs)

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        s = as_scalar(other)
        if s is NotImplemented:
            return NotImplemented
        return Poly((s,))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

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
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = Poly((ONE,))
        for _ in range(e):
            out = out * self
        return out

    def __divmod__(self, other: Poly):
        if not other.coeffs:
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        q = [ZERO] * max(0, len(rem) - len(other.coeffs) + 1)
        inv = other.lead.inverse()
        dd = other.degree
        for i in range(len(q) - 1, -1, -1):
            c = rem[i + dd] * inv
            q[i] = c
            if not c.is_zero():
                for j, b in enumerate(other.coeffs):
                    rem[i + j] = rem[i + j] - c * b
        return Poly(q), Poly(rem[:dd] if dd > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: Poly) -> Poly:
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def __call__(self, x):
        x = as_scalar(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> Poly:
        return Poly(c * i for i, c in enumerate(self.coeffs) if i)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({self.format()})"

    def __str__(self):
        return self.format()

    def format(self, var: str = "T") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            cs = str(c)
            if not mono:
                terms.append(cs if c.order == 1 else f"({cs})")
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append((cs if c.order == 1 else f"({cs})") + "*" + mono)
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out


def poly_gcd_monic(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor by the Euclidean algorithm."""
    if not p and not q:
        raise BothZero("gcd of two zero polynomials")
    a, b = p, q
    while b:
        a, b = b, a % b
    return a.monic()
