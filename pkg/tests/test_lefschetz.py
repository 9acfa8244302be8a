import random
import warnings

import pytest
from hypothesis import given, settings, strategies as st

from gorsum.connected_sum import (
    IllDefinedMap,
    OrientedSurjection,
    connected_sum_structural,
    fibered_product_structural,
    ideal_component,
    trivial_algebra,
)
from gorsum.exact_linalg import span_dim
from gorsum.graded_poly import Grading, Poly
from gorsum.inverse_system import InverseSystem, from_text
from gorsum.lefschetz import (
    HypothesisError,
    blowup_cs,
    closure_add,
    conjugate,
    dominates,
    generic_lefschetz,
    heightthree_family,
    heightthree_structural,
    hilbert_conjugate,
    jordan_type,
    linear_form,
    mult_map,
    nonslp_duals,
    nonslp_family,
    nonslp_hilbert,
    slp_check,
    two_block_classify,
    w_sequence,
    wlp_check,
    wlp_middle_check,
)
from gorsum.scalars import GF, QQ

from helpers import Q, R, fpex, surj, total_jordan

partitions = st.lists(st.integers(1, 8), min_size=0, max_size=7).map(lambda p: tuple(sorted(p, reverse=True)))


@given(partitions)
def test_conjugate_is_an_involution(p):
    assert conjugate(conjugate(p)) == p
    assert sum(conjugate(p)) == sum(p)


@given(partitions, partitions)
def test_dominance_reverses_under_conjugation(p, q):
    if sum(p) != sum(q):
        return
    assert dominates(p, q) == dominates(conjugate(q), conjugate(p))


def test_hilbert_conjugate():
    assert hilbert_conjugate((1, 2, 1)) == (3, 1)
    assert hilbert_conjugate((1, 3, 5, 3, 1)) == (5, 3, 3, 1, 1)


def test_w_sequence():
    assert tuple(w_sequence(3, 7)) == (0, 1, 2, 3, 3, 2, 1, 0)
    assert tuple(w_sequence(0, 4)) == (0, 1, 1, 1, 0)
    w = tuple(w_sequence(2, 6))
    assert w == w[::-1]


@pytest.mark.parametrize("a,b", [(2, 2), (2, 3), (3, 4), (4, 4), (2, 6), (5, 3)])
def test_monomial_ci_jordan_type(a, b):
    # blocks a+b-1, a+b-3, ..., |a-b|+1 in characteristic zero
    A = from_text("x y", f"X^{a - 1}*Y^{b - 1}")
    ell = linear_form(A, [1] * A.dim(1))
    want = tuple(range(a + b - 1, abs(a - b), -2))
    assert jordan_type(A, ell) == want
    assert total_jordan(A, ell) == want
    rep = slp_check(A, ell)
    assert rep.slp and rep.wlp and rep.narrow_sense


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_jordan_type_matches_full_matrix(seed):
    rng = random.Random(seed)
    g = Grading((1, 1, 1))
    d = rng.randint(1, 4)
    t = {m: rng.randint(-2, 2) for m in g.monomials(d) if rng.random() < 0.5}
    F = Poly(g, t, QQ, "R")
    if F.is_zero():
        F = Poly.monomial(g, g.monomials(d)[0], 1, QQ, "R")
    A = InverseSystem(g, [F])
    if A.dim(1) == 0:
        return
    ell = linear_form(A, [rng.randint(-3, 3) for _ in range(A.dim(1))])
    rep = slp_check(A, ell)
    assert rep.jordan == total_jordan(A, ell)
    assert rep.slp == (rep.jordan == hilbert_conjugate(A.hilbert()))


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6))
def test_generic_jordan_dominates_each_trial(seed):
    rng = random.Random(seed)
    a, b = rng.randint(2, 4), rng.randint(2, 4)
    A = from_text("x y", f"X^{a}*Y^{b} + X^{a + b}")
    gen = generic_lefschetz(A, trials=4, seed=seed)
    assert gen.label == "observed-generic" and gen.seed == seed and gen.trials == 4
    for r in gen.reports:
        assert dominates(gen.jordan, r.jordan)


def test_generic_is_reproducible():
    A = from_text("x y z", "X^2*Y - Y^2*Z")
    g1, g2 = generic_lefschetz(A, 3, 11), generic_lefschetz(A, 3, 11)
    assert g1.ell == g2.ell and g1.jordan == g2.jordan


def test_mult_map_powers():
    A = from_text("x", "X^4")
    x = A.variable(0)
    assert mult_map(A, x, 3, 1).rank() == 1
    assert mult_map(A, x, 4, 1).rank() == 0


def test_bad_form_rejected():
    A = from_text("x y", "X*Y")
    with pytest.raises(ValueError):
        slp_check(A, A.reduce(Q("x*y", A.grading)))


@pytest.mark.parametrize("m,t", [(m, t) for m in range(3, 10) for t in range(2, m)])
def test_nonslp_table(m, t):
    D, C = nonslp_family(m, t)
    assert C.hilbert() == nonslp_hilbert(m, t)
    gen = generic_lefschetz(C, trials=3, seed=m * 10 + t)
    assert gen.wlp == (2 * t != m)
    assert not gen.slp
    assert gen.jordan == (m - t, m - t)
    H1, H2 = nonslp_duals(m, t)
    assert InverseSystem(H1.grading, [H1, H2]).hilbert() == D.hilbert()
    # F = H1 + H2 and G = H1, so F - G = H2
    assert InverseSystem(H1.grading, [H2]).hilbert() == C.hilbert()


def _presented_rank(g, ideal, ell, i, e):
    """Rank of ell^e : (Q/I)_i -> (Q/I)_{i+e} computed from an explicit presentation."""
    n = len(g.monomials(i + e))
    It = ideal_component(g, ideal, i + e)
    imgs = [(ell ** e * Poly.monomial(g, m, 1, QQ, "Q")).coords(i + e) for m in g.monomials(i)]
    return span_dim(It + imgs, n, QQ) - span_dim(It, n, QQ)


def test_fpex_connected_sum_is_strong_lefschetz():
    A, B, T, pA, pB = fpex()
    C = connected_sum_structural(pA, pB)
    gen = generic_lefschetz(C, trials=3, seed=1)
    assert gen.slp and gen.jordan == (5, 3, 3, 1, 1)
    g = Grading((1, 1, 1), ("z1", "z2", "z3"))
    fC = InverseSystem(g, [R("2*Z1^3*Z2 - 3*Z2^2*Z3^2", g)])
    assert fC.hilbert() == C.hilbert()
    assert slp_check(fC, [1, 1, 1]).slp
    # the printed presentation, independently of the algebra classes
    ideal = [Q(s, g) for s in ("z1^4", "z2^3", "z3^3", "z1*z3", "z1*z2^2", "z1^3 + z2*z3^2")]
    ell = Q("z1 + z2 + z3", g)
    h = C.hilbert()
    for i in range(4):
        for e in range(1, 5 - i):
            assert _presented_rank(g, ideal, ell, i, e) == min(h[i], h[i + e])


def _over_field(A, B):
    T = trivial_algebra(A.field)
    z = Poly.zero(T.grading, A.field, "Q")
    return OrientedSurjection(A, T, [z] * A.grading.n), OrientedSurjection(B, T, [z] * B.grading.n)


def test_lefschetz_locus_of_product_is_not_inherited():
    A, B = from_text("x", "X"), from_text("y", "Y")
    pA, pB = _over_field(A, B)
    D, C = fibered_product_structural(pA, pB), connected_sum_structural(pA, pB)
    x, y = A.variable(0), B.variable(0)
    ell = D.from_pair(x, y)
    assert slp_check(D, ell).slp
    ellC = C.project(C.ambient.pair(x, y))
    assert ellC.is_zero()
    assert not slp_check(C, ellC).slp
    assert slp_check(C, C.project(C.ambient.pair(x, y * 2))).slp


def test_nonstandard_factor_without_linear_forms():
    A = from_text({"x": 2}, "X")
    B = from_text("y", "Y^2")
    rep = slp_check(A, None)
    assert not rep.slp and rep.diagnostic == "no linear forms"
    # H = (1, 0, 1): multiplication by 0 has maximal rank in every degree
    assert rep.wlp and wlp_check(A, None)
    E = from_text({"x": 2, "y": 3}, "X^2*Y")
    assert not slp_check(E, None).wlp and not wlp_check(E, None)
    pA, pB = _over_field(A, B)
    D, C = fibered_product_structural(pA, pB), connected_sum_structural(pA, pB)
    z2 = B.variable(0)
    assert slp_check(D, D.from_pair(A.zero(1), z2)).slp
    assert slp_check(C, C.project(C.ambient.pair(A.zero(1), z2))).slp


def test_field_is_strong_lefschetz():
    T = trivial_algebra(QQ)
    rep = slp_check(T, None)
    assert rep.slp and rep.jordan == (1,)


def test_char_sensitive_warning():
    F3 = GF(3)
    A = from_text("x", "X^4", field=F3)
    with pytest.warns(UserWarning, match="characteristic 3"):
        rep = slp_check(A, A.variable(0))
    assert rep.char_sensitive and rep.slp
    B = from_text("x y", "X^2*Y^2", field=F3)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        # (x + y)^2 x^... : over F_3 the middle map ell^2 : B_1 -> B_3 degenerates
        assert not generic_lefschetz(B, trials=8, seed=0).slp
    assert generic_lefschetz(from_text("x y", "X^2*Y^2"), trials=3, seed=0).slp


def test_weak_middle_check_hypotheses():
    A, B, T, pA, pB = fpex()
    C = connected_sum_structural(pA, pB)
    with pytest.raises(HypothesisError, match="k <"):
        wlp_middle_check(C, [1] * C.dim(1))
    with pytest.raises(HypothesisError):
        wlp_middle_check(from_text("x", "X^3"), [1])


@pytest.mark.parametrize("a,b,k", [(3, 4, 1), (4, 4, 0), (3, 5, 1), (4, 5, 2)])
def test_weak_middle_check_agrees(a, b, k):
    A = from_text("x y", f"X^{a - 1}*Y^{b - 1}")
    T = from_text("z", f"Z^{k}")
    pA = surj(A, T, ["z", "0"], "pi_A")
    pB = surj(from_text("x y", f"X^{b - 1}*Y^{a - 1}"), T, ["z", "0"], "pi_B")
    for X in (fibered_product_structural(pA, pB), connected_sum_structural(pA, pB)):
        gen = generic_lefschetz(X, trials=2, seed=0)
        mc = wlp_middle_check(X, gen.ell)
        assert mc.ok == mc.full_wlp == wlp_check(X, gen.ell)


def test_blowup_height_three_matches_dual():
    res = heightthree_structural(2, 5, 1)
    C = heightthree_family(2, 5, 1)
    assert res.C.hilbert() == C.hilbert()
    assert res.C_report.slp and res.D_report.slp
    assert res.C.is_gorenstein()


def test_blowup_needs_vanishing_thom_image():
    T2 = from_text("x y", "X")
    p = surj(from_text("x y", "X^2"), T2, ["x", "y"])
    with pytest.raises(HypothesisError):
        blowup_cs(p)


def test_closure_worked_sequence():
    A = heightthree_family(3, 7, 3)
    assert tuple(A.hilbert()) == (1, 3, 5, 7, 7, 5, 3, 1)
    assert generic_lefschetz(A, 3, 0).slp
    res = closure_add(A, 3)
    assert tuple(res.hilbert) == (1, 4, 7, 10, 10, 7, 4, 1)
    assert res.blowup.C_report.slp
    with pytest.raises(HypothesisError):
        closure_add(A, 4)


def test_closure_explicit_point():
    A = from_text("x y", "X^4 + Y^4")
    res = closure_add(A, 1, point=(1, 0))
    assert res.hilbert == A.hilbert() + w_sequence(1, 4)
    # (X + Y)^2 is not in the inverse system of X^5 + Y^5
    with pytest.raises(IllDefinedMap):
        closure_add(from_text("x y", "X^5 + Y^5"), 2, point=(1, 1))


def test_two_block_types():
    D, C = nonslp_family(5, 2)
    r = two_block_classify(C)
    assert (r.a, r.t, r.kind) == (3, 2, "2")
    assert not r.slp and not r.standard_graded
    g = Grading((1, 2), ("u", "v"))
    r = two_block_classify(InverseSystem(g, [R("U^4*V + U^2*V^2", g)]))
    assert r.kind == "extension required"
    g3 = Grading((1, 3), ("u", "v"))
    r = two_block_classify(InverseSystem(g3, [R("U^3*V", g3)]))
    assert r.kind == "1" and r.t == 3


def test_two_block_rejects_unequal_parts():
    with pytest.raises(ValueError, match="two equal parts"):
        two_block_classify(from_text("u v", "U^3*V"))
