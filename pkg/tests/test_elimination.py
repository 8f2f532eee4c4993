from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.polys.subresultants_qq_zz import sylvester

from toricform.certificates import AlgebraicWitness, EliminationCertificate, RationalWitness
from toricform.elimination import (DEGENERATE, NONDEGENERATE, NumberField, bivariate_exact_check, deg,
                                   factor_rational, resultant, strip_x, udivmod, ugcd, umul, uxgcd)
from toricform.errors import InputError
from toricform.polynomial import Polynomial

X, Y, T = sympy.symbols("x y t")


def P(terms):
    return Polynomial(2, terms)


def to_sympy(p):
    return sum(sympy.Rational(c.numerator, c.denominator) * X ** e[0] * Y ** e[1] for e, c in p.items())


def torus_zero_exists(polys):
    """Rabinowitsch oracle: a common zero with xy != 0 exists iff 1 is not in the ideal."""
    gens = [to_sympy(p) for p in polys if not p.is_zero()] + [1 - T * X * Y]
    return sympy.groebner(gens, T, X, Y, order="lex").exprs != [1]


def dense(coeffs):
    return [Fraction(c) for c in coeffs]


def dense_to_sympy(a):
    return sum(sympy.Rational(c.numerator, c.denominator) * T ** i for i, c in enumerate(a))


univariate = st.lists(st.integers(-5, 5), min_size=1, max_size=5).map(dense)


@given(univariate, univariate)
def test_univariate_division_and_gcd_match_sympy(a, b):
    if not any(b):
        return
    q, r = udivmod(a, b)
    sq, sr = sympy.div(dense_to_sympy(a), dense_to_sympy(b), T)
    assert sympy.expand(dense_to_sympy(q) - sq) == 0
    assert sympy.expand(dense_to_sympy(r) - sr) == 0
    g = ugcd(a, b)
    expected = sympy.Poly(sympy.gcd(dense_to_sympy(a), dense_to_sympy(b)), T).monic()
    assert sympy.expand(dense_to_sympy(g) - expected.as_expr()) == 0


@given(univariate, univariate)
def test_extended_gcd_identity(a, b):
    g, s, t = uxgcd(a, b)
    if not g:
        return
    lhs = [x + y for x, y in zip(umul(s, a) + [0] * 20, umul(t, b) + [0] * 20)]
    assert sympy.expand(dense_to_sympy(lhs) - dense_to_sympy(g)) == 0


def test_factor_rational_and_strip():
    facs = factor_rational(dense([0, -2, 0, 1]))  # t^3 - 2t = t (t^2 - 2)
    assert facs == [(dense([0, 1]), 1), (dense([-2, 0, 1]), 1)]
    assert strip_x(dense([0, 0, 3, 1])) == (2, dense([3, 1]))
    assert deg([]) == -1


def test_number_field_inverse():
    field = NumberField(dense([-2, 0, 1]))  # Q(sqrt 2)
    a = dense([1, 1])
    assert field.mul(a, field.inv(a)) == [Fraction(1)]
    with pytest.raises(ZeroDivisionError):
        NumberField(dense([-1, 0, 1])).inv(dense([1, 1]))  # t + 1 divides t^2 - 1


def test_number_field_gcd_finds_the_shared_root():
    # over Q(sqrt 2): (y - t)(y + 1) and (y - t)(y - 3) share y - t
    field = NumberField(dense([-2, 0, 1]))
    f = [dense([0, -1]), dense([1, -1]), dense([1])]
    g = [dense([0, 3]), dense([-3, -1]), dense([1])]
    assert field.pgcd(f, g) == [dense([0, -1]), dense([1])]


polys2 = st.lists(st.tuples(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-3, 3)),
                  min_size=1, max_size=4).map(P)


@settings(max_examples=60, deadline=None)
@given(polys2, polys2)
def test_resultant_matches_sylvester_determinant(p, q):
    if p.is_zero() or q.is_zero() or p.degree(1) + q.degree(1) == 0:
        return
    ours = resultant(p, q, elim=1)
    # sympy.resultant can differ in sign from the Sylvester determinant, so use the matrix
    expected = sylvester(to_sympy(p), to_sympy(q), Y).det()
    ours_expr = sum(sympy.Rational(c.numerator, c.denominator) * X ** i for i, c in enumerate(ours))
    assert sympy.expand(ours_expr - expected) == 0


def test_plane_example_face_gamma():
    status, cert, witness = bivariate_exact_check([P({(2, 0): 2, (1, 1): 1}),
                                                   P({(2, 0): 1, (0, 2): 1, (1, 0): 1})])
    assert status == DEGENERATE
    assert isinstance(witness, RationalWitness)
    assert witness.point == (Fraction(-1, 5), Fraction(2, 5))


def test_monomial_and_single_curve():
    status, cert, _ = bivariate_exact_check([P({(2, 2): 1})])
    assert status == NONDEGENERATE and cert.check({0: P({(2, 2): 1})})
    status, _, witness = bivariate_exact_check([P({(0, 2): 1, (1, 0): 1}), Polynomial.zero(2)])
    assert status == DEGENERATE and witness.point == (-1, 1)


def test_irrational_common_zero_gives_algebraic_witness():
    # x^2 = 2 and y = x: only irrational points
    polys = [P({(2, 0): 1, (0, 0): -2}), P({(0, 1): 1, (1, 0): -1})]
    status, _, witness = bivariate_exact_check(polys)
    assert status == DEGENERATE
    assert isinstance(witness, AlgebraicWitness) and witness.check(dict(enumerate(polys)))
    x, y = witness.approx()
    assert abs(x * x - 2) < 1e-9 and abs(y - x) < 1e-9


def test_zeros_only_on_the_axes_give_a_certificate():
    # x + y and x - y meet only at the origin
    polys = [P({(1, 0): 1, (0, 1): 1}), P({(1, 0): 1, (0, 1): -1})]
    status, cert, _ = bivariate_exact_check(polys)
    assert status == NONDEGENERATE
    assert isinstance(cert, EliminationCertificate) and cert.check(dict(enumerate(polys)))
    assert not cert.check({0: polys[0], 1: polys[0]})


def test_univariate_systems():
    status, cert, _ = bivariate_exact_check([P({(1, 0): 1, (0, 0): -1}), P({(1, 0): 1, (0, 0): 1})])
    assert status == NONDEGENERATE and cert.steps["method"] == "bezout"
    status, _, witness = bivariate_exact_check([P({(0, 2): 1, (0, 0): -4}), P({(0, 1): 1, (0, 0): -2})])
    assert status == DEGENERATE and witness.point == (1, 2)


def test_errors():
    with pytest.raises(InputError):
        bivariate_exact_check([Polynomial(3, {(1, 0, 0): 1})])
    with pytest.raises(InputError):
        bivariate_exact_check([Polynomial.zero(2)])


@settings(max_examples=60, deadline=None)
@given(st.lists(polys2, min_size=1, max_size=3))
def test_verdict_matches_groebner_oracle(polys):
    if all(p.is_zero() for p in polys):
        return
    status, cert, witness = bivariate_exact_check(polys)
    system = dict(enumerate(polys))
    assert status in (NONDEGENERATE, DEGENERATE)
    assert (status == DEGENERATE) == torus_zero_exists(polys)
    if status == NONDEGENERATE:
        assert cert.check(system)
    else:
        assert witness.check(system)
