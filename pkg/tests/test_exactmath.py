from __future__ import annotations

import cmath
import random
from fractions import Fraction

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from fiberlab.errors import BothZero, DivisionByZero, NonSquare
from fiberlab.exactmath import (
    ONE,
    ZERO,
    Matrix,
    Poly,
    Scalar,
    bareiss_det,
    det,
    in_span,
    inverse,
    kernel,
    perron_eigenvalue,
    poly_gcd_monic,
    rank,
    root_of_unity,
    rref,
    scalar_arith,
    span_basis,
)
from fiberlab.exactmath.cyclotomic import euler_phi

from oracles import leibniz_det, scalar_to_sympy

ORDERS = [1, 2, 3, 4, 5, 6, 8, 10, 12]


@st.composite
def scalars(draw, orders=ORDERS):
    n = draw(st.sampled_from(orders))
    nums = draw(st.lists(st.integers(-6, 6), min_size=euler_phi(n), max_size=euler_phi(n)))
    den = draw(st.integers(1, 5))
    return Scalar(n, nums, den)


def close(a: Scalar, z: complex) -> bool:
    return abs(complex(a) - z) < 1e-9 * max(1.0, abs(z))


# -- roots of unity and canonical forms ------------------------------------------
def test_root_of_unity_examples():
    assert root_of_unity(1, 0) == ONE
    assert root_of_unity(4, 1) ** 2 == -1
    assert root_of_unity(3, 1) + root_of_unity(3, 2) == -1


def test_scalar_arith_examples():
    assert scalar_arith(Fraction(1, 2), Fraction(1, 3), "add") == Fraction(5, 6)
    i = root_of_unity(4)
    assert scalar_arith(i, i, "mul") == -1
    z6 = root_of_unity(6)
    assert scalar_arith(z6, z6 - 1, "sub") == 1
    with pytest.raises(DivisionByZero):
        scalar_arith(ONE, ZERO, "div")


def test_zeta6_minimal_polynomial_against_sympy():
    z6 = root_of_unity(6)
    assert z6 * z6 - z6 + 1 == 0
    assert sp.simplify(scalar_to_sympy(z6) ** 2 - scalar_to_sympy(z6) + 1) == 0


@pytest.mark.parametrize("order", [1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 24])
def test_root_of_unity_has_dividing_order(order):
    for e in range(order):
        z = root_of_unity(order, e)
        assert z**order == ONE
        assert close(z, cmath.exp(2j * cmath.pi * e / order))


def test_equality_across_orders():
    # zeta_12^3 = zeta_4 and zeta_6^2 = zeta_3 must compare equal and hash alike
    assert root_of_unity(12, 3) == root_of_unity(4, 1)
    assert hash(root_of_unity(6, 2)) == hash(root_of_unity(3, 1))
    assert root_of_unity(8, 4) == -1
    assert root_of_unity(8, 4).is_rational()


def test_rational_canonical_form():
    s = Scalar(1, (6,), -4)
    assert s == Fraction(-3, 2)
    assert s.den == 2 and s.nums == (-3,)
    assert Scalar(5, (0, 0, 0, 0), 7).nums == (0,) and Scalar(5, (0, 0, 0, 0), 7).den == 1


@settings(max_examples=1000, deadline=None)
@given(scalars(), scalars(), scalars())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == ZERO and a + ZERO == a and a * ONE == a
    if not a.is_zero():
        assert a * a.inverse() == ONE
        assert (b / a) * a == b


@settings(max_examples=1000, deadline=None)
@given(scalars(), scalars())
def test_complex_embedding_is_a_homomorphism(a, b):
    za, zb = complex(a), complex(b)
    assert close(a + b, za + zb)
    assert close(a * b, za * zb)
    assert close(a.conjugate(), za.conjugate())
    # equality is decided exactly, so equal embeddings imply equal scalars
    if abs(za - zb) < 1e-12:
        assert a == b


@settings(max_examples=200, deadline=None)
@given(scalars())
def test_scalar_matches_sympy(a):
    assert abs(complex(sp.N(scalar_to_sympy(a), 30)) - complex(a)) < 1e-9


# -- matrices -------------------------------------------------------------------
def test_rref_examples():
    assert rank(Matrix([[1, 1], [1, 1]])) == 1
    red, rk, piv = rref(Matrix.identity(3))
    assert rk == 3 and piv == (0, 1, 2)
    i = root_of_unity(4)
    assert rank(Matrix([[ONE, i], [i, -ONE]])) == 1


def test_kernel_examples():
    assert kernel(Matrix.identity(3)) == []
    assert len(kernel(Matrix.zeros(2, 3))) == 3
    (v,) = kernel(Matrix([[1, 1]]))
    assert v[0] == -v[1] and not v[0].is_zero()


def test_det_examples():
    assert det(Matrix([[1, 2], [3, 4]])) == -2
    assert det(Matrix.identity(5)) == 1
    with pytest.raises(NonSquare):
        det(Matrix([[1, 2]]))


def test_poly_bareiss_diagonal_gram():
    T = Poly.monomial(1)
    rows = [[Poly.constant(0)] * 4 for _ in range(4)]
    for i, e in enumerate([Poly.constant(4), Poly.constant(4), T * 4, T * -4]):
        rows[i][i] = e
    d = bareiss_det(rows, Poly.constant(1), Poly.is_zero, Poly.exact_div)
    assert d == Poly.monomial(2, -256)


@st.composite
def rational_matrices(draw, rows=None, cols=None, lo=-3, hi=3):
    r = rows or draw(st.integers(1, 5))
    c = cols or draw(st.integers(1, 5))
    entries = draw(st.lists(st.integers(lo, hi), min_size=r * c, max_size=r * c))
    return Matrix([entries[i * c : (i + 1) * c] for i in range(r)])


@st.composite
def cyclotomic_matrices(draw, n):
    entries = draw(st.lists(scalars([1, 3, 4]), min_size=n * n, max_size=n * n))
    return Matrix([entries[i * n : (i + 1) * n] for i in range(n)])


@settings(max_examples=200, deadline=None)
@given(rational_matrices())
def test_rank_nullity(m):
    ker = kernel(m)
    assert rank(m) + len(ker) == m.cols
    for v in ker:
        assert all(x.is_zero() for x in m.apply(v))


@settings(max_examples=100, deadline=None)
@given(rational_matrices())
def test_rank_matches_sympy(m):
    ref = sp.Matrix([[sp.Rational(x.numerator, x.denominator) for x in (e.to_fraction() for e in row)] for row in m.data])
    assert rank(m) == ref.rank()


@settings(max_examples=100, deadline=None)
@given(cyclotomic_matrices(4), cyclotomic_matrices(4))
def test_det_multiplicative(a, b):
    assert det(a @ b) == det(a) * det(b)


@settings(max_examples=60, deadline=None)
@given(cyclotomic_matrices(4))
def test_det_matches_leibniz(a):
    assert det(a) == leibniz_det(a.data)


@settings(max_examples=60, deadline=None)
@given(cyclotomic_matrices(3))
def test_inverse(a):
    if det(a).is_zero():
        return
    assert inverse(a) @ a == Matrix.identity(3)


@settings(max_examples=100, deadline=None)
@given(rational_matrices(), st.lists(st.integers(-2, 2), min_size=5, max_size=5))
def test_span_membership(m, coeffs):
    rows = [list(r) for r in m.data]
    basis = span_basis(rows, m.cols)
    assert len(basis) == rank(m)
    combo = [sum((c * r[j] for c, r in zip(coeffs, rows)), ZERO) for j in range(m.cols)]
    assert in_span(basis, combo)


# -- polynomials ------------------------------------------------------------------
def test_gcd_examples():
    T = Poly.monomial(1)
    assert poly_gcd_monic(T * T - T, T * T) == T
    assert poly_gcd_monic(T * T, Poly()) == T * T
    assert poly_gcd_monic(T * T - 1, T - 1) == T - 1
    with pytest.raises(BothZero):
        poly_gcd_monic(Poly(), Poly())


polys = st.lists(st.integers(-4, 4), min_size=1, max_size=4).map(lambda cs: Poly(cs))


@settings(max_examples=300, deadline=None)
@given(polys, polys, polys)
def test_gcd_divisibility(a, b, c):
    p, q = a * c, b * c
    if p.is_zero() and q.is_zero():
        return
    g = poly_gcd_monic(p, q)
    assert (p % g).is_zero() and (q % g).is_zero()
    # every common divisor divides the gcd; c is one
    if not c.is_zero():
        assert (g % c).is_zero()
    T = sp.Symbol("T")
    ref = sp.gcd(sum(sp.Rational(x.to_fraction().numerator, x.to_fraction().denominator) * T**i for i, x in enumerate(p.coeffs)),
                 sum(sp.Rational(x.to_fraction().numerator, x.to_fraction().denominator) * T**i for i, x in enumerate(q.coeffs)))
    assert g.degree == sp.Poly(ref, T).degree()


@settings(max_examples=100, deadline=None)
@given(st.lists(scalars([1, 4]), min_size=1, max_size=4), st.lists(scalars([1, 4]), min_size=1, max_size=4))
def test_poly_division_identity(a, b):
    p, q = Poly(a), Poly(b)
    if q.is_zero():
        return
    quo, rem = divmod(p, q)
    assert quo * q + rem == p
    assert rem.is_zero() or rem.degree < q.degree


# -- Perron ------------------------------------------------------------------------
@pytest.mark.parametrize(
    "m,value",
    [([[1, 1], [1, 1]], 2.0), ([[0, 1], [1, 0]], 1.0), ([[2]], 2.0)],
)
def test_perron_examples(m, value):
    est = perron_eigenvalue(m)
    assert abs(est.value - value) < 1e-9


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(1, 4), min_size=1, max_size=5))
def test_perron_on_rank_one_idempotent_shape(dims):
    # T = d d^T satisfies T^2 = (d.d) T with positive entries
    d = np.array(dims)
    T = np.outer(d, d)
    c = int(d @ d)
    assert np.array_equal(T @ T, c * T)
    assert abs(perron_eigenvalue(T).value - c) < 1e-9 * c


def test_perron_rejects_negative_entries():
    with pytest.raises(ValueError):
        perron_eigenvalue([[1, -1], [0, 1]])


def test_perron_random_against_numpy():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randint(1, 5)
        m = np.array([[rng.randint(1, 4) for _ in range(n)] for _ in range(n)])
        ref = max(abs(np.linalg.eigvals(m)))
        assert abs(perron_eigenvalue(m).value - ref) < 1e-7
