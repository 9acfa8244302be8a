import itertools

import pytest
from hypothesis import given, settings, strategies as st

from gorsum.graded_poly import (
    Grading,
    Poly,
    PolyParseError,
    contract,
    divides,
    eval_at_zero,
    format_poly,
    from_differential,
    monomials_of_degree,
    parse_poly,
    substitute,
    to_differential,
)
from gorsum.scalars import GF, QQ

weights = st.lists(st.integers(1, 3), min_size=1, max_size=3)


@given(weights, st.integers(0, 7))
def test_monomial_enumeration_matches_brute_force(ws, d):
    g = Grading(tuple(ws))
    brute = {m for m in itertools.product(range(d + 1), repeat=len(ws)) if g.degree(m) == d}
    mons = monomials_of_degree(g, d)
    assert set(mons) == brute
    assert len(mons) == len(brute)


def test_revlex_order_in_degree_two():
    g = Grading((1, 1), ("x1", "x2"))
    assert monomials_of_degree(g, 2) == ((2, 0), (1, 1), (0, 2))
    g3 = Grading((1, 1, 1))
    assert monomials_of_degree(g3, 2)[:3] == ((2, 0, 0), (1, 1, 0), (0, 2, 0))


def test_weighted_enumeration():
    g = Grading((1, 1, 2), ("z1", "z2", "z3"))
    assert set(monomials_of_degree(g, 2)) == {(2, 0, 0), (1, 1, 0), (0, 2, 0), (0, 0, 1)}
    with pytest.raises(ValueError):
        Grading((0, 1))


G3 = Grading((1, 1, 1), ("x", "y", "z"))
mono = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))


def poly_strategy(side):
    return st.dictionaries(mono, st.integers(-4, 4), max_size=5).map(lambda t: Poly(G3, t, QQ, side))


@given(poly_strategy("Q"), poly_strategy("Q"), poly_strategy("R"))
def test_contraction_is_a_module_action(f, g, F):
    assert contract(f * g, F) == contract(f, contract(g, F))


@given(poly_strategy("Q"), poly_strategy("Q"), poly_strategy("R"))
def test_contraction_is_bilinear(f, g, F):
    assert contract(f + g, F) == contract(f, F) + contract(g, F)


@given(mono, mono)
def test_monomial_contraction(m, M):
    r = contract(Poly.monomial(G3, m, 1, QQ, "Q"), Poly.monomial(G3, M, 1, QQ, "R"))
    assert (not r.is_zero()) == divides(m, M)
    if divides(m, M):
        # dual monomial times the contraction recovers M
        assert Poly.monomial(G3, m, 1, QQ, "R") * r == Poly.monomial(G3, M, 1, QQ, "R")


@given(st.integers(0, 4))
def test_equal_degree_pairing_is_the_identity(d):
    mons = monomials_of_degree(G3, d)
    for m in mons:
        for M in mons:
            v = eval_at_zero(contract(Poly.monomial(G3, m, 1, QQ, "Q"), Poly.monomial(G3, M, 1, QQ, "R")))
            assert v == (1 if m == M else 0)


def test_contraction_not_differentiation():
    X3 = parse_poly("X^3", G3, side="R")
    assert contract(parse_poly("x", G3), X3) == parse_poly("X^2", G3, side="R")
    assert contract(parse_poly("x^2", G3), X3) == parse_poly("X", G3, side="R")


def test_sides_are_checked():
    with pytest.raises(ValueError):
        contract(parse_poly("X", G3, side="R"), parse_poly("X", G3, side="R"))


@given(poly_strategy("R"))
def test_format_parse_round_trip(F):
    assert parse_poly(format_poly(F), G3, QQ, "R") == F


def test_parse_grammar():
    g = Grading((1, 1), ("z1", "z2"))
    p = parse_poly("3/2*Z1^2 - z1*Z2 + (Z1 - Z2)*Z2", g, side="R")
    assert p.coefficient((2, 0)) == QQ("3/2")
    assert p.coefficient((0, 2)) == -1
    assert p.coefficient((1, 1)) == 0
    assert parse_poly("-x", G3) == parse_poly("0 - x", G3)


@pytest.mark.parametrize("text", ["X^", "X**2", "W", "1/0", "", "X + (Y"])
def test_parse_errors_are_positioned(text):
    with pytest.raises(PolyParseError):
        parse_poly(text, G3)


def test_homogeneity():
    assert parse_poly("X^2 + X*Y", G3).degree() == 2
    with pytest.raises(ValueError):
        parse_poly("X^2 + Y", G3).degree()
    g = Grading((1, 2), ("u", "v"))
    assert parse_poly("U^4*V + U^2*V^2", g).degree() == 6


def test_prime_field_polys():
    F = GF(3)
    p = parse_poly("2*X + 4*X", G3, F, "R")
    assert p.is_zero()


@settings(max_examples=50)
@given(poly_strategy("R"))
def test_differential_conversion_round_trips(F):
    assert from_differential(to_differential(F)) == F


def test_substitution_is_a_ring_map():
    g2 = Grading((1, 1), ("x", "u"))
    imgs = [parse_poly("x", g2), parse_poly("x - u", g2)]
    f, h = parse_poly("x*y", Grading((1, 1), ("x", "y"))), parse_poly("y^2", Grading((1, 1), ("x", "y")))
    assert substitute(f * h, imgs, g2) == substitute(f, imgs, g2) * substitute(h, imgs, g2)
