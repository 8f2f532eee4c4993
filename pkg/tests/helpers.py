"""Shared builders for the test-suite: the two worked examples and random data."""

import random
from itertools import combinations

from toricform.forms import StandardPForm, to_logarithmic
from toricform.polynomial import Polynomial

EXAMPLE12 = """vars: x y
form: (2*x^2 + x*y) dx + (x^2 + y^2 + x) dy
"""

EXAMPLE13 = """vars: x y z
form: (z^6 + x*y) dx^dy + x*z dx^dz + (x^6 + x^4*y*z + y*z) dy^dz
"""


def poly(n, terms):
    return Polynomial(n, terms)


def eta_standard():
    return StandardPForm(2, 1, {
        (0,): poly(2, {(2, 0): 2, (1, 1): 1}),
        (1,): poly(2, {(2, 0): 1, (0, 2): 1, (1, 0): 1}),
    })


def omega_standard():
    return StandardPForm(3, 2, {
        (0, 1): poly(3, {(0, 0, 6): 1, (1, 1, 0): 1}),
        (0, 2): poly(3, {(1, 0, 1): 1}),
        (1, 2): poly(3, {(6, 0, 0): 1, (4, 1, 1): 1, (0, 1, 1): 1}),
    })


def eta():
    return to_logarithmic(eta_standard())


def omega():
    return to_logarithmic(omega_standard())


def random_form(rng, n=None, p=None, max_terms=6, max_exp=3):
    """A nonzero standard form with at most ``max_terms`` monomial terms, converted to log."""
    n = n or rng.choice([2, 3])
    p = p or rng.randint(1, n - 1)
    subsets = list(combinations(range(n), p))
    coeffs = {}
    for _ in range(rng.randint(1, max_terms)):
        J = rng.choice(subsets)
        e = tuple(rng.randint(0, max_exp) for _ in range(n))
        c = rng.choice([-3, -2, -1, 1, 2, 3])
        coeffs[J] = coeffs.get(J, Polynomial.zero(n)) + Polynomial.monomial(e, c)
    form = StandardPForm(n, p, coeffs)
    if form.is_zero():
        return random_form(rng, n, p, max_terms, max_exp)
    return to_logarithmic(form)


def random_unimodular_nonnegative(rng, n, steps=None):
    """Product of elementary matrices E_ij (add column j to column i) and permutations."""
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps if steps is not None else rng.randint(0, 2 * n)):
        i, j = rng.sample(range(n), 2)
        for row in m:
            row[i] += row[j]
    perm = list(range(n))
    rng.shuffle(perm)
    return [[row[k] for k in perm] for row in m]


def random_support(rng, n, max_points=8, max_exp=5):
    k = rng.randint(1, max_points)
    return [tuple(rng.randint(0, max_exp) for _ in range(n)) for _ in range(k)]


def make_rng(seed):
    return random.Random(seed)
