from __future__ import annotations

import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fiberlab.errors import (
    BasisNotClosed,
    HopfMapInconsistent,
    PresentationError,
    PresentationSyntaxError,
    StepCapExceeded,
    UnknownSymbol,
)
from fiberlab.exactmath import ONE, ZERO, Matrix, Scalar, root_of_unity
from fiberlab.findim import composition_multiplicities, irreducible_reps
from fiberlab.presentation import (
    CentralDescriptor,
    NCPoly,
    Representation,
    RewriteRule,
    RewriteSystem,
    basis_action,
    characters_of_C,
    convolve,
    critical_pairs_check,
    dual_rep,
    inverse_char,
    normal_form,
    parse_presentation,
    rep_from_basis_action,
    tensor_rep,
    trivial_rep,
    verify_rep,
)

from conftest import CORPUS, load

TAFT2 = (
    "[generators] g x\n"
    "[rules]\ng^2 -> 1\nx g -> -1 * g x\nx^2 -> T\n"
    "[central]\nT primitive-free\n"
    "[coproduct]\ng -> g (x) g\nx -> x (x) g + 1 (x) x\n"
    "[counit]  g -> 1 ; x -> 0\n"
    "[antipode] g -> g ; x -> -1 * x g\n"
    "[basis] 1, g, x, g x\n"
)


def taft2_with(old: str, new: str) -> str:
    assert old in TAFT2
    return TAFT2.replace(old, new)


# -- parsing and validation -----------------------------------------------------------
def test_inline_text_matches_corpus_entry():
    p = parse_presentation(TAFT2)
    q = load("taft_inf_2")
    assert p.fiber_basis == q.fiber_basis
    assert [(r.lhs, r.rhs) for r in p.rules] == [(r.lhs, r.rhs) for r in q.rules]


@pytest.mark.parametrize("bad", ["x g -> -1 * * g x", "x g -> -1 * g x *", "x g -> * g x", "x g -> -1 g x +"])
def test_syntax_error_has_position(bad):
    with pytest.raises(PresentationSyntaxError) as err:
        parse_presentation(taft2_with("x g -> -1 * g x", bad))
    assert err.value.line == 4


def test_unknown_symbol():
    with pytest.raises(UnknownSymbol) as err:
        parse_presentation(taft2_with("x g -> -1 * g x", "x h -> -1 * g x"))
    assert err.value.line == 4 and "h" in str(err.value)


def test_missing_section():
    with pytest.raises(PresentationSyntaxError, match="basis"):
        parse_presentation(taft2_with("[basis] 1, g, x, g x\n", ""))


def test_basis_not_closed_names_the_product():
    with pytest.raises(BasisNotClosed) as err:
        parse_presentation(taft2_with("[basis] 1, g, x, g x", "[basis] 1, g, x"))
    assert "g x" in str(err.value)


def test_basis_word_not_in_normal_form():
    with pytest.raises(BasisNotClosed, match="normal form"):
        parse_presentation(taft2_with("[basis] 1, g, x, g x", "[basis] 1, g, x, x g"))


def test_inconsistent_coproduct():
    with pytest.raises(HopfMapInconsistent) as err:
        parse_presentation(taft2_with("x -> x (x) g + 1 (x) x", "x -> x (x) 1 + 1 (x) x"))
    assert "x g" in str(err.value) or "coproduct" in str(err.value)


def test_inconsistent_counit():
    with pytest.raises(HopfMapInconsistent):
        parse_presentation(taft2_with("g -> 1 ; x -> 0", "g -> -1 ; x -> 0"))


def test_termination_guard():
    with pytest.raises(PresentationError):
        parse_presentation(taft2_with("g^2 -> 1", "g^2 -> g^2"))


def test_all_errors_share_the_base_class():
    for cls in (PresentationSyntaxError, UnknownSymbol, BasisNotClosed, HopfMapInconsistent):
        assert issubclass(cls, PresentationError)


# -- rewriting ---------------------------------------------------------------------------
def free_system(rules, step_cap=None):
    desc = CentralDescriptor(())
    rr = [RewriteRule(tuple(l), NCPoly.word(desc, r)) for l, r in rules]
    return desc, (RewriteSystem(desc, rr) if step_cap is None else RewriteSystem(desc, rr, step_cap))


def test_normal_form_taft():
    p = load("taft_inf_2")
    nf = p.system.word_nf(p.word("x g x g"))
    # x g x g = (-g x)(-g x) = g x g x = g (-g x) x = -g^2 x^2 = -T
    T = p.central.unit_mono(0)
    assert nf == NCPoly({(T, ()): -ONE})
    assert normal_form(NCPoly.word(p.central, p.word("g g g")), p) == NCPoly.word(p.central, p.word("g"))


def test_normal_form_specialized():
    p = load("taft_inf_3")
    chi = p.character_space().make({"T": 2})
    nf = p.normal_form(NCPoly.word(p.central, p.word("x^4")), chi)
    assert nf == NCPoly({(p.central.one, p.word("x")): Scalar.from_rational(2)})


def test_step_cap():
    _, sys_small = free_system([((0,), (1,)), ((1,), (0,))], step_cap=50)
    with pytest.raises(StepCapExceeded):
        sys_small.word_nf((0,))
    _, sys_default = free_system([((0,), (1,)), ((1,), (0,))])
    assert sys_default.step_cap == 10**6
    with pytest.raises(StepCapExceeded):
        sys_default.word_nf((0,))


def test_critical_pairs_group_inverse_pair():
    _, s = free_system([((0, 1), ()), ((1, 0), ())])
    assert s.critical_pairs() == []


def test_critical_pairs_idempotent_then_unit_is_joinable():
    # a a -> a and a -> 1: both reductions of "aa" end at 1
    _, s = free_system([((0, 0), (0,)), ((0,), ())])
    assert s.critical_pairs() == []


def test_critical_pairs_divergence_reported():
    # overlap "aba": (ab)a -> a, a(ba) -> aa, both irreducible and distinct
    _, s = free_system([((0, 1), ()), ((1, 0), (0,))])
    report = s.critical_pairs()
    assert report
    assert any(r["word"] == (0, 1, 0) for r in report)


@pytest.mark.parametrize("name", CORPUS)
def test_corpus_rules_are_confluent(name):
    assert critical_pairs_check(load(name)) == []


def random_element(p, rng, terms=4, length=5):
    out = NCPoly()
    for _ in range(terms):
        w = tuple(rng.randrange(len(p.generators)) for _ in range(rng.randint(0, length)))
        out = out + NCPoly.word(p.central, w, Fraction(rng.randint(-3, 3), rng.randint(1, 3)))
    return out


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(CORPUS), st.integers(0, 2**32), st.fractions(max_denominator=5).filter(lambda f: abs(f) < 5))
def test_normal_form_idempotent_and_linear(name, seed, c):
    p = load(name)
    rng = random.Random(seed)
    a, b = random_element(p, rng), random_element(p, rng)
    na, nb = p.normal_form(a), p.normal_form(b)
    assert p.normal_form(na) == na
    assert p.normal_form(a.scale(c) + b) == na.scale(c) + nb


@pytest.mark.parametrize("name", CORPUS)
def test_normal_form_basis_expansion(name):
    # every normal form is a C-combination of basis words
    p = load(name)
    rng = random.Random(3)
    basis = set(p.fiber_basis)
    for _ in range(25):
        for (_, w) in p.normal_form(random_element(p, rng)).terms:
            assert w in basis


# -- fibers -------------------------------------------------------------------------------
@pytest.mark.parametrize("name", CORPUS)
def test_fiber_associativity_exhaustive(name):
    p = load(name)
    assert p.associativity_violations() == []
    for chi in p.character_space().sampled():
        A = p.build_fiber(chi)
        assert A.dim == p.dim
        assert A.associativity_violations() == []
        assert A.unit_ok()


@pytest.mark.parametrize("name", CORPUS)
def test_identity_fiber_is_a_hopf_algebra(name):
    A = load(name).identity_fiber()
    assert A.coalgebra is not None
    assert A.hopf_violations() == []
    eps = A.coalgebra.epsilon
    for i in range(A.dim):
        for j in range(A.dim):
            prod = A.sc[i][j]
            assert sum((c * e for c, e in zip(prod, eps)), ZERO) == eps[i] * eps[j]


def test_taft_fiber_at_zero_is_taft_algebra():
    p = load("taft_inf_2")
    A = p.build_fiber(p.character_space().make({"T": 0}))
    x = p.basis_index[p.word("x")]
    assert all(c.is_zero() for c in A.sc[x][x])
    g = p.basis_index[p.word("g")]
    assert A.sc[g][g] == A.unit


def test_characters_of_C():
    ex = load("ex3_8")
    chars = characters_of_C(ex).sampled()
    assert [c["z"] for c in chars] == [ONE, -ONE]
    taft = load("taft_inf_2")
    assert [c["T"] for c in characters_of_C(taft).sampled()] == [0, 1, -1, 2, Fraction(1, 2)]
    for name in CORPUS:
        p = load(name)
        ident = p.identity_character()
        for s, v in zip(p.central.symbols, ident.values):
            assert v == (ONE if s.grouplike else ZERO)


def test_convolution_examples():
    ex = load("ex3_8")
    sp_ = ex.character_space()
    m = sp_.make({"z": -1})
    assert convolve(m, m, ex) == sp_.identity()
    assert convolve(sp_.identity(), m, ex) == m
    taft = load("taft_inf_2")
    ts = taft.character_space()
    assert convolve(ts.make({"T": 2}), ts.make({"T": 3}), taft) == ts.make({"T": 5})
    assert inverse_char(ts.make({"T": 2}), taft) == ts.make({"T": -2})


@pytest.mark.parametrize("name", CORPUS)
def test_character_group_axioms(name):
    p = load(name)
    chars = p.character_space().sampled()
    e = p.identity_character()
    for a in chars:
        assert convolve(a, e, p) == a == convolve(e, a, p)
        assert convolve(a, inverse_char(a, p), p) == e == convolve(inverse_char(a, p), a, p)
        for b in chars:
            for c in chars[:3]:
                assert convolve(convolve(a, b, p), c, p) == convolve(a, convolve(b, c, p), p)


# -- representations ----------------------------------------------------------------------
def ex32_rho(p, i: int) -> Representation:
    """The five irreducible representations of the 16-dimensional example."""
    space = p.character_space()
    I = root_of_unity(4)
    one = lambda v: Matrix([[v]])
    if i <= 4:
        s = ONE if i <= 2 else -ONE
        xv = [ONE, -ONE, I, -I][i - 1]
        # z = b c = 1 on all four one-dimensional representations
        return Representation(space.make({"z": 1}), 1, {"b": one(s), "c": one(s), "x": one(xv), "y": one(ZERO)})
    return Representation(
        space.make({"z": -1}),
        2,
        {
            "b": Matrix([[-1, 0], [0, 1]]),
            "c": Matrix([[1, 0], [0, -1]]),
            "x": Matrix([[0, 1], [1, 0]]),
            "y": Matrix.zeros(2, 2),
        },
    )


@pytest.mark.parametrize("i", [1, 2, 3, 4, 5])
def test_ex32_representations_verify(i):
    p = load("ex3_2")
    assert verify_rep(p, ex32_rho(p, i))


def test_ex32_rho5_sign_flip_fails_at_x_squared():
    p = load("ex3_2")
    rho = ex32_rho(p, 5)
    bad = Representation(rho.character, 2, dict(rho.action, x=Matrix([[0, -1], [1, 0]])))
    res = verify_rep(p, bad)
    assert not res
    assert res.violated.startswith("x^2")


def test_ex32_tensor_and_dual():
    p = load("ex3_2")
    r2 = ex32_rho(p, 2)
    t = tensor_rep(p, r2, r2)
    assert t.dim == 1 and t.action["x"] == Matrix([[1]])
    assert verify_rep(p, t)
    d = dual_rep(p, r2)
    assert d.action["x"] == Matrix([[-1]])
    assert verify_rep(p, d)


@pytest.mark.parametrize("name", CORPUS)
def test_trivial_rep_and_its_dual(name):
    p = load(name)
    triv = trivial_rep(p)
    assert verify_rep(p, triv)
    d = dual_rep(p, triv)
    assert all(d.action[g] == triv.action[g] for g in p.generators)


@pytest.mark.parametrize("name", CORPUS)
def test_trivial_tensor_is_identity_and_double_dual(name):
    p = load(name)
    triv = trivial_rep(p)
    for chi in p.character_space().sampled():
        A = p.build_fiber(chi)
        for mats in irreducible_reps(A):
            W = rep_from_basis_action(p, chi, A, mats)
            assert verify_rep(p, W)
            tw = tensor_rep(p, triv, W)
            assert tw.character == chi
            for g in p.generators:
                assert np.allclose(np.asarray(tw.action[g], dtype=complex), np.asarray(W.action[g], dtype=complex))
            dd = dual_rep(p, dual_rep(p, W))
            assert dd.character == chi and verify_rep(p, dd)
            assert composition_multiplicities(A, basis_action(p, dd)) == composition_multiplicities(A, basis_action(p, W))


def test_taft_one_dim_tensor_two_dim():
    p = load("taft_inf_2")
    space = p.character_space()
    e, m = space.identity(), space.make({"T": 1})
    A0, A1 = p.build_fiber(e), p.build_fiber(m)
    V = [rep_from_basis_action(p, e, A0, r) for r in irreducible_reps(A0)]
    (W,) = [rep_from_basis_action(p, m, A1, r) for r in irreducible_reps(A1)]
    assert [v.dim for v in V] == [1, 1] and W.dim == 2
    for v in V:
        t = tensor_rep(p, v, W)
        assert t.character == m and verify_rep(p, t)
        assert composition_multiplicities(A1, basis_action(p, t)) == (1,)
