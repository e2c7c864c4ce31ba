from __future__ import annotations

import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from fiberlab.errors import MissingCoalgebraData
from fiberlab.exactmath import ZERO, Matrix, in_span, root_of_unity, span_basis
from fiberlab.findim import (
    abelianization,
    block_dims,
    center_basis,
    chevalley_property,
    composition_multiplicities,
    irr_count,
    irreducible_reps,
    is_semisimple_module,
    jacobson_radical,
    one_dim_rep_count,
    regular_rep,
    sd,
    semisimple_quotient,
)
from fiberlab.presentation import Representation, basis_action, dual_rep, rep_from_basis_action, tensor_rep, total_algebra, verify_rep

from conftest import CORPUS, load
from oracles import matrix_unit_algebra, numeric_hom_dim

algebra_shapes = st.tuples(
    st.lists(st.integers(1, 3), min_size=1, max_size=3).filter(lambda s: sum(n * n for n in s) <= 12),
    st.booleans(),
    st.integers(0, 10**6),
)


def build(shapes, upper, seed):
    if upper:
        shapes = shapes[:2]
    return matrix_unit_algebra(shapes, upper=upper, seed=seed)


def _span_product(A, left, right):
    prods = [A.mul(u, v) for u in left for v in right]
    return span_basis([p for p in prods if any(not x.is_zero() for x in p)], A.dim)


# -- radical, blocks and center -----------------------------------------------------------
@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(algebra_shapes)
def test_radical_is_nilpotent_ideal(params):
    A, _ = build(*params)
    rad = jacobson_radical(A)
    J = [list(v) for v in rad.radical_basis]
    basis = span_basis(J, A.dim) if J else []
    for v in J:
        for i in range(A.dim):
            e = A.basis_vector(i)
            assert in_span(basis, A.mul(e, v)) and in_span(basis, A.mul(v, e))
    power = basis
    for _ in range(A.dim + 1):
        if not power:
            break
        power = _span_product(A, power, basis)
    assert not power
    assert rad.ss_dim + len(rad.radical_basis) == A.dim


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(algebra_shapes)
def test_block_certificate(params):
    shapes, upper, seed = params
    A, _ = build(shapes, upper, seed)
    b = block_dims(A, seed=seed % 7)
    assert sum(n * n for n in b.block_dims) == sd(A)
    assert b.irr_count == len(b.block_dims) == len(center_basis(semisimple_quotient(A)))
    assert irr_count(A) <= sd(A)
    if upper:
        used = shapes[:2]
        assert sorted(b.block_dims) == [1] * sum(used)
        assert sd(A) == sum(used)
    else:
        assert list(b.block_dims) == sorted(shapes)
        assert sd(A) == A.dim


@settings(max_examples=20, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(algebra_shapes, st.lists(st.integers(0, 2), min_size=3, max_size=3), st.integers(0, 1000))
def test_multiplicity_additivity_on_direct_sums(params, mults, seed):
    shapes, _, aseed = params
    A, truth = build(shapes, False, aseed)
    rng = np.random.default_rng(seed)
    mults = mults[: len(shapes)]
    if not any(mults):
        mults[0] = 1

    def module(counts):
        mats = []
        for k in range(A.dim):
            blocks = [truth[k][b] for b, c in enumerate(counts) for _ in range(c)]
            size = sum(m.shape[0] for m in blocks)
            M = np.zeros((size, size), dtype=complex)
            o = 0
            for m in blocks:
                M[o : o + m.shape[0], o : o + m.shape[0]] = m
                o += m.shape[0]
            mats.append(M)
        size = mats[0].shape[0]
        P = rng.standard_normal((size, size)) + np.eye(size) * size
        Pi = np.linalg.inv(P)
        return [P @ m @ Pi for m in mats]

    other = [1] * len(shapes)
    m1, m2 = module(mults), module(other)
    both = []
    for a, b in zip(m1, m2):
        n1, n2 = a.shape[0], b.shape[0]
        c = np.zeros((n1 + n2, n1 + n2), dtype=complex)
        c[:n1, :n1], c[n1:, n1:] = a, b
        both.append(c)
    c1 = composition_multiplicities(A, m1)
    c2 = composition_multiplicities(A, m2)
    c12 = composition_multiplicities(A, both)
    assert c12 == tuple(x + y for x, y in zip(c1, c2))
    assert sorted(zip(block_dims(A).block_dims, c1)) == sorted(zip(shapes, mults))
    # independent route: Hom dimensions against the computed irreducibles
    irreps = irreducible_reps(A)
    assert tuple(numeric_hom_dim(V, m1) for V in irreps) == c1
    assert is_semisimple_module(A, m1)


@pytest.mark.parametrize("n", [2, 3])
def test_upper_triangular_regular_module(n):
    A, _ = matrix_unit_algebra([n], upper=True, seed=n)
    M = regular_rep(A)
    assert not is_semisimple_module(A, M)
    c = composition_multiplicities(A, M)
    assert sorted(c) == list(range(1, n + 1))


# -- worked examples ------------------------------------------------------------------------
def test_m2_and_m2_plus_k():
    M2, truth = matrix_unit_algebra([2], seed=1)
    assert block_dims(M2).block_dims == (2,)
    assert composition_multiplicities(M2, regular_rep(M2)) == (2,)
    assert one_dim_rep_count(M2) == 0 and abelianization(M2).dim == 0
    (rho,) = irreducible_reps(M2)
    assert numeric_hom_dim(rho, [t[0] for t in truth]) == 1
    assert is_semisimple_module(M2, [t[0] for t in truth])
    B, _ = matrix_unit_algebra([2, 1], seed=2)
    assert sorted(block_dims(B).block_dims) == [1, 2]


def taft_fiber(T=0):
    p = load("taft_inf_2")
    chi = p.character_space().make({"T": T})
    return p, chi, p.build_fiber(chi)


def test_taft_fiber_at_zero():
    p, chi, A = taft_fiber(0)
    assert sd(A) == 2 and block_dims(A).block_dims == (1, 1)
    assert composition_multiplicities(A, regular_rep(A)) == (2, 2)
    assert not is_semisimple_module(A, regular_rep(A))
    assert one_dim_rep_count(A) == 2
    reps = irreducible_reps(A)
    g, x = p.basis_index[p.word("g")], p.basis_index[p.word("x")]
    assert sorted(round(r[g][0, 0].real) for r in reps) == [-1, 1]
    assert all(abs(r[x][0, 0]) < 1e-12 for r in reps)
    triv = [Matrix([[1 if (w == () or w == (0,)) else 0]]) for w in p.fiber_basis]
    assert is_semisimple_module(A, triv)


def test_taft_fiber_at_one_is_matrix_algebra():
    _, _, A = taft_fiber(1)
    assert sd(A) == 4 and block_dims(A).block_dims == (2,)


def test_ex38_fibers():
    p = load("ex3_8")
    space = p.character_space()
    A0 = p.build_fiber(space.identity())
    Am = p.build_fiber(space.make({"z": -1}))
    assert (sd(A0), sd(Am)) == (2, 4)
    assert block_dims(Am).block_dims == (2,)
    assert one_dim_rep_count(Am) == 0
    # the explicit 2x2 representation with mu = 1
    I = root_of_unity(4)
    zeta = Representation(
        space.make({"z": -1}), 2, {"g": Matrix([[I, ZERO], [ZERO, -I]]), "x": Matrix([[0, 1], [1, 0]])}
    )
    assert verify_rep(p, zeta)
    (rho,) = irreducible_reps(Am)
    assert numeric_hom_dim(rho, [m.to_numpy() for m in basis_action(p, zeta)]) == 1
    # W (x) W* lands in the identity fiber and is not semisimple there
    W = rep_from_basis_action(p, space.make({"z": -1}), Am, rho)
    ww = tensor_rep(p, W, dual_rep(p, W))
    assert ww.character == space.identity()
    M = basis_action(p, ww)
    assert not is_semisimple_module(A0, M)
    assert composition_multiplicities(A0, M) == (2, 2)


def test_ex32_fibers():
    p = load("ex3_2")
    space = p.character_space()
    A0 = p.build_fiber(space.identity())
    Am = p.build_fiber(space.make({"z": -1}))
    assert block_dims(A0).block_dims == (1, 1, 1, 1)
    assert block_dims(Am).block_dims == (2,)
    assert one_dim_rep_count(A0) == 4


def test_q8_fibers():
    p = load("q8_central")
    space = p.character_space()
    assert block_dims(p.build_fiber(space.identity())).block_dims == (1, 1, 1, 1)
    assert block_dims(p.build_fiber(space.make({"z": -1}))).block_dims == (2,)
    assert one_dim_rep_count(p.identity_fiber()) == 4


# -- Chevalley property ------------------------------------------------------------------------
def test_chevalley_total_algebras():
    H = total_algebra(load("ex3_2"))
    assert H.dim == 16
    res = chevalley_property(H)
    assert res.holds and bool(res)
    rad = jacobson_radical(H)
    assert len(rad.radical_basis) == 8  # J = (y)
    bad = chevalley_property(total_algebra(load("ex3_8")))
    assert not bad and bad.failed in ("counit", "coproduct", "antipode")
    assert bad.witness is not None and any(not c.is_zero() for c in bad.witness)
    assert chevalley_property(total_algebra(load("q8_central")))


def test_chevalley_witness_lies_in_radical():
    H = total_algebra(load("ex3_8"))
    res = chevalley_property(H)
    basis = span_basis([list(v) for v in jacobson_radical(H).radical_basis], H.dim)
    assert in_span(basis, res.witness)


def test_chevalley_needs_coalgebra():
    p = load("ex3_8")
    with pytest.raises(MissingCoalgebraData):
        chevalley_property(p.build_fiber(p.character_space().make({"z": -1})))


@pytest.mark.parametrize("name", CORPUS)
def test_chevalley_identity_fiber_matches_tensor_semisimplicity(name):
    p = load(name)
    A = p.identity_fiber()
    chi = p.identity_character()
    res = chevalley_property(A)
    assert res.holds  # every corpus identity fiber is Chevalley
    reps = [rep_from_basis_action(p, chi, A, r) for r in irreducible_reps(A)]
    for v in reps:
        for w in reps:
            assert is_semisimple_module(A, basis_action(p, tensor_rep(p, v, w)))


@pytest.mark.parametrize("name", CORPUS)
def test_irreducibles_satisfy_structure_constants(name):
    p = load(name)
    for chi in p.character_space().sampled():
        A = p.build_fiber(chi)
        S = A.numeric_sc
        for rho in irreducible_reps(A):
            for i in range(A.dim):
                for j in range(A.dim):
                    lhs = rho[i] @ rho[j]
                    rhs = sum(S[i, j, k] * rho[k] for k in range(A.dim))
                    assert np.max(np.abs(lhs - rhs)) < 1e-6
            assert verify_rep(p, rep_from_basis_action(p, chi, A, rho))


@pytest.mark.parametrize("name", CORPUS)
def test_irreducibles_are_deterministic(name):
    p = load(name)
    chi = p.character_space().sampled()[-1]
    A1 = p._build_fiber(chi, False)
    A2 = p._build_fiber(chi, False)
    for r1, r2 in zip(irreducible_reps(A1, seed=3), irreducible_reps(A2, seed=3)):
        assert all(np.array_equal(a, b) for a, b in zip(r1, r2))


@pytest.mark.parametrize("seed,shapes", [(5, [3, 3]), (11, [2, 3]), (14, [2, 2]), (16, [3]), (16, [1, 3])])
def test_irreps_in_ill_conditioned_basis(seed, shapes):
    A, _ = matrix_unit_algebra(shapes, seed=seed)
    reps = irreducible_reps(A)
    assert sorted(r[0].shape[0] for r in reps) == sorted(shapes)
