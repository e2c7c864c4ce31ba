"""Exact numbers in cyclotomic fields.

A :class:`Scalar` of order ``N`` stores integer coordinates over a common
denominator in the power basis ``1, z, ..., z^(phi(N)-1)`` of ``Q(z)`` where
``z = exp(2*pi*i/N)``.  Values are kept in canonical form: the order is the
smallest conductor of a cyclotomic field containing the value, so structural
equality is field equality.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from ..errors import DivisionByZero

__all__ = ["Scalar", "root_of_unity", "as_scalar", "ZERO", "ONE"]


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # integer polynomials, lowest degree first; den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    assert not any(num), "inexact cyclotomic division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, lowest first."""
    num = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        num = _poly_divexact(num, list(cyclotomic_poly(d)))
    return tuple(num)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Row e holds the power-basis coordinates of z^e for 0 <= e < n."""
    phi = euler_phi(n)
    poly = cyclotomic_poly(n)
    rows = []
    cur = [1] + [0] * (phi - 1)
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by z and reduce with z^phi = -sum poly[i] z^i
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(phi):
                cur[i] -= top * poly[i]
    return tuple(rows)


def _reduce(conv: list[int], n: int) -> list[int]:
    phi = euler_phi(n)
    table = _power_table(n)
    out = conv[:phi] + [0] * max(0, phi - len(conv))
    for e in range(phi, len(conv)):
        c = conv[e]
        if c:
            row = table[e % n]
            for i in range(phi):
                out[i] += c * row[i]
    return out


@lru_cache(maxsize=None)
def _subfield_solver(n: int, d: int):
    """Data to test membership of Q(z_n)-coordinates in the image of Q(z_d)."""
    table = _power_table(n)
    step = n // d
    cols = [table[(step * j) % n] for j in range(euler_phi(d))]
    phi_n, phi_d = euler_phi(n), euler_phi(d)
    # pick phi_d independent rows by exact elimination
    mat = [[Fraction(cols[j][i]) for j in range(phi_d)] for i in range(phi_n)]
    rows: list[int] = []
    basis: list[list[Fraction]] = []
    for i, row in enumerate(mat):
        vec = list(row)
        for piv, b in zip(_pivots(basis), basis):
            if vec[piv]:
                f = vec[piv] / b[piv]
                vec = [x - f * y for x, y in zip(vec, b)]
        if any(vec):
            rows.append(i)
            basis.append(vec)
        if len(rows) == phi_d:
            break
    square = [mat[i] for i in rows]
    inv = _invert(square)
    return cols, rows, inv


def _pivots(basis):
    return [next(i for i, x in enumerate(b) if x) for b in basis]


def _invert(m: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(m)
    aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(m)]
    for c in range(n):
        p = next(r for r in range(c, n) if aug[r][c])
        aug[c], aug[p] = aug[p], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [r[n:] for r in aug]


class Scalar:
    """Exact element of a cyclotomic field."""

    __slots__ = ("order", "nums", "den", "_hash")

    def __init__(self, order: int, nums, den: int = 1, *, _canonical: bool = False):
        if _canonical:
            self.order, self.nums, self.den = order, nums, den
            self._hash = None
            return
        nums = [int(x) for x in nums]
        if order < 1:
            raise ValueError("order must be positive")
        if len(nums) != euler_phi(order):
            nums = _reduce(nums, order)
        order, nums, den = _canonicalize(order, nums, int(den))
        self.order, self.nums, self.den = order, nums, den
        self._hash = None

    # -- construction -------------------------------------------------
    @classmethod
    def from_rational(cls, q) -> Scalar:
        q = Fraction(q)
        return cls(1, (q.numerator,), q.denominator, _canonical=True)

    @classmethod
    def from_fractions(cls, order: int, coeffs) -> Scalar:
        coeffs = [Fraction(c) for c in coeffs]
        den = 1
        for c in coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        return cls(order, [int(c * den) for c in coeffs], den)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.den) for x in self.nums)

    def is_rational(self) -> bool:
        return self.order == 1

    def to_fraction(self) -> Fraction:
        if self.order != 1:
            raise ValueError(f"{self} is not rational")
        return Fraction(self.nums[0], self.den)

    def is_zero(self) -> bool:
        return self.order == 1 and self.nums[0] == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic ---------------------------------------------------
    def _lift(self, m: int) -> list[int]:
        if m == self.order:
            return list(self.nums)
        step = m // self.order
        table = _power_table(m)
        out = [0] * euler_phi(m)
        for i, c in enumerate(self.nums):
            if c:
                row = table[(i * step) % m]
                for k, r in enumerate(row):
                    if r:
                        out[k] += c * r
        return out

    def __add__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        if self.order == 1 and other.order == 1:
            a, b, c, d = self.nums[0], self.den, other.nums[0], other.den
            return _rat(a * d + c * b, b * d)
        m = math.lcm(self.order, other.order)
        x, y = self._lift(m), other._lift(m)
        return Scalar(m, [a * other.den + b * self.den for a, b in zip(x, y)], self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.order, tuple(-x for x in self.nums), self.den, _canonical=True)

    def __sub__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        if self.order == 1 and other.order == 1:
            return _rat(self.nums[0] * other.nums[0], self.den * other.den)
        if self.order == 1 or other.order == 1:
            r, s = (self, other) if self.order == 1 else (other, self)
            k = r.nums[0]
            if k == 0:
                return ZERO
            return Scalar(s.order, [k * x for x in s.nums], r.den * s.den)
        m = math.lcm(self.order, other.order)
        x, y = self._lift(m), other._lift(m)
        conv = [0] * (len(x) + len(y) - 1)
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    if b:
                        conv[i + j] += a * b
        return Scalar(m, _reduce(conv, m), self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        if self.is_zero():
            raise DivisionByZero("division by zero scalar")
        if self.order == 1:
            return _rat(self.den, self.nums[0])
        # solve (multiplication by self) y = 1 over Q
        n, phi = self.order, euler_phi(self.order)
        cols = []
        for j in range(phi):
            conv = [0] * (phi + j)
            for i, a in enumerate(self.nums):
                conv[i + j] = a
            cols.append(_reduce(conv, n))
        mat = [[Fraction(cols[j][i], self.den) for j in range(phi)] for i in range(phi)]
        inv = _invert(mat)
        y = [row[0] for row in inv]
        return Scalar.from_fractions(n, y)

    def __truediv__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return as_scalar(other) * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self) -> Scalar:
        n = self.order
        if n == 1:
            return self
        table = _power_table(n)
        out = [0] * euler_phi(n)
        for i, c in enumerate(self.nums):
            if c:
                for k, r in enumerate(table[(-i) % n]):
                    out[k] += c * r
        return Scalar(n, out, self.den)

    # -- comparison / conversion ---------------------------------------
    def __eq__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self.order == other.order and self.den == other.den and self.nums == other.nums

    def __hash__(self):
        if self._hash is None:
            if self.order == 1:
                self._hash = hash(Fraction(self.nums[0], self.den))
            else:
                self._hash = hash((self.order, self.nums, self.den))
        return self._hash

    def __complex__(self) -> complex:
        if self.order == 1:
            return complex(self.nums[0] / self.den)
        w = cmath.exp(2j * cmath.pi / self.order)
        return sum(c * w**i for i, c in enumerate(self.nums)) / self.den

    def __float__(self) -> float:
        if self.order != 1:
            raise TypeError("non-rational scalar has no float value")
        return self.nums[0] / self.den

    def __repr__(self) -> str:
        return f"Scalar({self})"

    def __str__(self) -> str:
        if self.order == 1:
            return str(Fraction(self.nums[0], self.den))
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
                continue
            z = f"zeta({self.order},{i})"
            if c == 1:
                parts.append(z)
            elif c == -1:
                parts.append("-" + z)
            else:
                parts.append(f"{c}*{z}")
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


def _rat(num: int, den: int) -> Scalar:
    if den == 0:
        raise DivisionByZero("division by zero")
    if den < 0:
        num, den = -num, -den
    g = math.gcd(num, den)
    if g > 1:
        num //= g
        den //= g
    if num == 0:
        den = 1
    return Scalar(1, (num,), den, _canonical=True)


def _canonicalize(order: int, nums: list[int], den: int):
    if den == 0:
        raise DivisionByZero("zero denominator")
    if den < 0:
        nums, den = [-x for x in nums], -den
    g = math.gcd(den, *nums)
    if g > 1:
        nums, den = [x // g for x in nums], den // g
    if not any(nums):
        return 1, (0,), 1
    if order == 1 or not any(nums[1:]):
        if order != 1:
            g = math.gcd(nums[0], den)
            return 1, (nums[0] // g,), den // g
        return 1, tuple(nums), den
    for d in _divisors(order)[1:-1]:
        if d % 4 == 2:
            continue
        cols, rows, inv = _subfield_solver(order, d)
        sel = [nums[i] for i in rows]
        y = [sum(inv[r][c] * sel[c] for c in range(len(sel))) for r in range(len(sel))]
        if any(v.denominator != 1 for v in y):
            continue
        y = [int(v) for v in y]
        recon = [0] * len(nums)
        for j, c in enumerate(y):
            if c:
                for i, v in enumerate(cols[j]):
                    recon[i] += c * v
        if recon == nums:
            g = math.gcd(den, *y)
            return d, tuple(v // g for v in y), den // g
    return order, tuple(nums), den


def as_scalar(x):
    """Coerce ints, Fractions and Scalars; NotImplemented for anything else."""
    if isinstance(x, Scalar):
        return x
    if isinstance(x, bool):
        return NotImplemented
    if isinstance(x, int):
        return Scalar(1, (x,), 1, _canonical=True)
    if isinstance(x, (Fraction, Rational)):
        return Scalar.from_rational(x)
    return NotImplemented


def root_of_unity(order: int, exponent: int = 1) -> Scalar:
    """Return ``zeta_order ** exponent`` in canonical form."""
    if order < 1:
        raise ValueError("order must be positive")
    e = exponent % order
    row = _power_table(order)[e]
    return Scalar(order, row, 1)


ZERO = Scalar(1, (0,), 1, _canonical=True)
ONE = Scalar(1, (1,), 1, _canonical=True)
