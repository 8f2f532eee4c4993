from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import eta, eta_standard, make_rng, omega, omega_standard, random_form, random_unimodular_nonnegative
from toricform.errors import InputError
from toricform.forms import (LogPForm, StandardPForm, evaluate_coefficients, restrict,
                             substitute_pullback_oracle, support, to_logarithmic, to_standard, wedge)
from toricform.polynomial import Polynomial


def P(n, terms):
    return Polynomial(n, terms)


def test_logarithmic_coefficients_of_the_plane_example():
    f = eta()
    assert f.coeffs[(0,)] == P(2, {(3, 0): 2, (2, 1): 1})
    assert f.coeffs[(1,)] == P(2, {(2, 1): 1, (0, 3): 1, (1, 1): 1})
    assert f.coefficient((2, 1), (0,)) == 1


def test_logarithmic_coefficients_of_the_space_example():
    f = omega()
    assert f.coeffs[(0, 1)] == P(3, {(1, 1, 6): 1, (2, 2, 0): 1})
    assert f.coeffs[(0, 2)] == P(3, {(2, 0, 2): 1})


def test_constant_coefficient_gains_its_variable():
    f = to_logarithmic(StandardPForm(2, 1, {(0,): P(2, {(0, 0): 1})}))
    assert f.coeffs[(0,)] == P(2, {(1, 0): 1})
    assert to_standard(f).coeffs[(0,)] == 1


def test_to_standard_examples():
    assert to_standard(eta()).coeffs[(0,)] == P(2, {(2, 0): 2, (1, 1): 1})
    g = to_standard(LogPForm(3, 2, {(0, 1): P(3, {(2, 2, 0): 1})}))
    assert g.coeffs[(0, 1)] == P(3, {(1, 1, 0): 1})


@settings(max_examples=40)
@given(st.integers(0, 10_000))
def test_basis_changes_are_inverse(seed):
    f = random_form(make_rng(seed))
    assert to_logarithmic(to_standard(f)) == f
    g = to_standard(f)
    assert to_standard(to_logarithmic(g)) == g


def test_log_invariant_is_enforced():
    with pytest.raises(InputError):
        LogPForm(2, 1, {(0,): P(2, {(0, 1): 1})})
    with pytest.raises(InputError):
        LogPForm(2, 2, {})
    with pytest.raises(InputError):
        StandardPForm(3, 1, {(0, 1): P(3, {(0, 0, 0): 1})})


def test_supports():
    assert set(support(eta())) == {(3, 0), (2, 1), (0, 3), (1, 1)}
    assert set(support(omega())) == {(1, 1, 6), (2, 2, 0), (2, 0, 2), (6, 1, 1), (4, 2, 2), (0, 2, 2)}
    assert support(LogPForm(2, 1, {})) == []


def test_restrict_to_faces():
    f = restrict(eta(), [(0, 3), (1, 1)])
    assert f.coeffs[(0,)].is_zero()
    assert to_standard(f).coeffs[(1,)] == P(2, {(0, 2): 1, (1, 0): 1})
    g = to_standard(restrict(omega(), [(1, 1, 6), (2, 2, 0), (2, 0, 2), (6, 1, 1)]))
    assert g.coeffs[(0, 1)] == P(3, {(1, 1, 0): 1, (0, 0, 6): 1})
    face4 = to_standard(restrict(omega(), [(2, 2, 0), (2, 0, 2), (6, 1, 1)]))
    assert face4.coeffs == {(0, 1): P(3, {(1, 1, 0): 1}), (0, 2): P(3, {(1, 0, 1): 1}),
                            (1, 2): P(3, {(6, 0, 0): 1})}
    assert restrict(eta(), support(eta())) == eta()


@settings(max_examples=40)
@given(st.integers(0, 10_000), st.data())
def test_restricted_support_is_inside(seed, data):
    f = random_form(make_rng(seed))
    supp = support(f)
    a = data.draw(st.lists(st.sampled_from(supp + [(9,) * f.n]), max_size=4))
    assert set(support(restrict(f, a))) <= set(a) & set(supp)


def test_evaluate_coefficients():
    assert evaluate_coefficients(eta_standard(), (Fraction(-1, 5), Fraction(2, 5))) == [0, 0]
    assert evaluate_coefficients(eta(), (1, 1)) == [3, 3]
    assert evaluate_coefficients(eta(), (0, 0)) == [0, 0]
    with pytest.raises(InputError):
        evaluate_coefficients(eta(), (1,))


def test_wedge_is_antisymmetric():
    dx = {(0,): Polynomial.constant(2, 1)}
    dy = {(1,): Polynomial.constant(2, 1)}
    assert wedge(dx, dy) == {(0, 1): Polynomial.constant(2, 1)}
    assert wedge(dy, dx) == {(0, 1): Polynomial.constant(2, -1)}
    assert wedge(dx, dx) == {}


def test_oracle_identity_and_hand_substitution():
    f = omega_standard()
    out = substitute_pullback_oracle(f, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert out.coeffs == f.coeffs
    x_dy = StandardPForm(2, 1, {(1,): P(2, {(1, 0): 1})})
    out = substitute_pullback_oracle(x_dy, [[1, 1], [0, 1]])
    assert out.coeffs[(1,)] == P(2, {(1, 1): 1}) and out.coeffs[(0,)].is_zero()


def test_oracle_permutation_gives_sign():
    dxdy = StandardPForm(3, 2, {(0, 1): Polynomial.constant(3, 1)})
    swap = [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
    assert substitute_pullback_oracle(dxdy, swap).coeffs[(0, 1)] == -1


def test_oracle_rejects_bad_matrices():
    with pytest.raises(InputError):
        substitute_pullback_oracle(eta(), [[2, 0], [0, 1]])
    with pytest.raises(InputError):
        substitute_pullback_oracle(eta(), [[1, -1], [0, 1]])
    with pytest.raises(InputError):
        substitute_pullback_oracle(eta(), [[1]])


@settings(max_examples=30)
@given(st.integers(0, 10_000))
def test_oracle_is_functorial(seed):
    """Pulling back by A then by B equals pulling back by A B."""
    rng = make_rng(seed)
    n = rng.choice([2, 3])
    f = to_standard(random_form(rng, n=n))
    a = random_unimodular_nonnegative(rng, n)
    b = random_unimodular_nonnegative(rng, n)
    ab = [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    step = substitute_pullback_oracle(f, a)
    step = StandardPForm(n, f.p, step.coeffs)
    assert substitute_pullback_oracle(step, b).coeffs == substitute_pullback_oracle(f, ab).coeffs
