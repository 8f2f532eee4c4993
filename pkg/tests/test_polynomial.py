from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from toricform.errors import InputError
from toricform.polynomial import Polynomial

X, Y, Z = sympy.symbols("x y z")
SYMS = (X, Y, Z)


def polys(n=3, max_terms=5, max_exp=3):
    term = st.tuples(st.tuples(*[st.integers(0, max_exp)] * n), st.integers(-4, 4))
    return st.lists(term, max_size=max_terms).map(lambda ts: Polynomial(n, ts))


def to_sympy(p):
    return sympy.expand(sum(sympy.Rational(c.numerator, c.denominator)
                            * sympy.Mul(*[s ** k for s, k in zip(SYMS, e)]) for e, c in p.items()))


points = st.tuples(*[st.fractions(min_value=-3, max_value=3, max_denominator=5)] * 3)


@given(polys(), polys())
def test_product_matches_sympy(a, b):
    assert to_sympy(a * b) == sympy.expand(to_sympy(a) * to_sympy(b))


@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - a).is_zero()
    assert a + Polynomial.zero(3) == a


@given(polys(), polys(), points)
def test_evaluation_is_a_ring_map(a, b, pt):
    assert (a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt)
    assert (a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt)


@given(polys(), st.integers(0, 2))
def test_derivative_matches_sympy(a, i):
    assert to_sympy(a.derivative(i)) == sympy.diff(to_sympy(a), SYMS[i])


@given(polys(), points)
def test_specialize_agrees_with_evaluation(a, pt):
    s = a.specialize({0: pt[0], 2: pt[2]})
    assert s.n == 1
    assert s.evaluate((pt[1],)) == a.evaluate(pt)


@given(polys())
def test_strip_monomial_roundtrip(a):
    content = a.monomial_content()
    assert a.strip_monomial().scale_monomial(content) == a
    if not a.is_zero():
        assert a.strip_monomial().monomial_content() == (0, 0, 0)


@given(polys(), st.integers(0, 2))
def test_coefficients_in_reassemble(a, i):
    total = Polynomial.zero(3)
    for k, c in enumerate(a.coefficients_in(i)):
        assert all(e[i] == 0 for e in c.support())
        total = total + c * Polynomial.variable(3, i) ** k
    assert total == a


def test_basic_queries():
    p = Polynomial(2, {(2, 0): 2, (1, 1): 1, (0, 0): 0})
    assert p.support() == [(1, 1), (2, 0)]
    assert p.coefficient((2, 0)) == 2
    assert p.coefficient((5, 5)) == 0
    assert p.degree(0) == 2 and p.total_degree() == 2
    assert not p.is_monomial()
    assert Polynomial.monomial((1, 2), 3).is_monomial()
    assert Polynomial.constant(2, 5) == 5
    assert p.to_string(["x", "y"]) == "2*x^2 + x*y"
    assert (p - p * 3).to_string(["x", "y"]) == "-4*x^2 - 2*x*y"


def test_divide_monomial_and_errors():
    p = Polynomial(2, {(2, 1): 1, (1, 3): -1})
    assert p.divide_monomial((1, 1)) == Polynomial(2, {(1, 0): 1, (0, 2): -1})
    assert not p.divides_by_monomial((2, 0))
    with pytest.raises(ArithmeticError):
        p.divide_monomial((2, 0))
    with pytest.raises(InputError):
        Polynomial(2, {(1,): 1})
    with pytest.raises(InputError):
        Polynomial(2, {(-1, 0): 1})
    with pytest.raises(TypeError):
        Polynomial(1, {(1,): 0.5})


def test_evaluation_exact_and_complex():
    p = Polynomial(2, {(1, 0): 1, (0, 2): Fraction(1, 2)})
    assert p.evaluate((Fraction(1, 3), 2)) == Fraction(7, 3)
    assert isinstance(p.evaluate((1j, 1)), complex)
    with pytest.raises(InputError):
        p.evaluate((1,))
