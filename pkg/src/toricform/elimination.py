"""Exact decision of torus zeros for systems in at most two variables.

Univariate polynomials are dense coefficient lists (lowest degree first) of
Fractions.  Irreducible factorization over Q is delegated to sympy; the rest
(gcds, resultants, arithmetic in Q(alpha)) is done here.

Strategy for two variables x, y: strip monomial content, form two generic
combinations Q1, Q2 of the system, eliminate y with the resultant R(x), and
for every irreducible factor h of R (x itself removed) decide whether the
system specialized at a root alpha of h has a common nonzero root in y by a
gcd over Q(alpha).  Galois conjugation makes the answer independent of the
chosen root of h.
"""

from fractions import Fraction

import numpy as np

from .certificates import AlgebraicWitness, EliminationCertificate, RationalWitness, frac_str
from .errors import InputError
from .polynomial import Polynomial

NONDEGENERATE = "NonDegenerate"
DEGENERATE = "Degenerate"
UNKNOWN = "Unknown"


# -- dense univariate polynomials over Q -------------------------------------

def trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def deg(a):
    return len(trim(a)) - 1


def uadd(a, b):
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def uscale(a, c):
    return trim([x * c for x in a])


def umul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def udivmod(a, b):
    a, b = trim(a), trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = [Fraction(x) for x in a]
    lead = Fraction(b[-1])
    while len(r) >= len(b) and r:
        c = r[-1] / lead
        k = len(r) - len(b)
        q[k] = c
        for i, y in enumerate(b):
            r[i + k] -= c * y
        r = trim(r)
    return trim(q), r


def monic(a):
    a = trim(a)
    return [Fraction(x) / a[-1] for x in a] if a else []


def ugcd(a, b):
    a, b = trim(a), trim(b)
    while b:
        a, b = b, udivmod(a, b)[1]
    return monic(a)


def uxgcd(a, b):
    """(g, s, t) with s a + t b = g monic."""
    r0, r1 = trim(a), trim(b)
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = udivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, uadd(s0, uscale(umul(q, s1), -1))
        t0, t1 = t1, uadd(t0, uscale(umul(q, t1), -1))
    if not r0:
        return [], [], []
    c = 1 / Fraction(r0[-1])
    return uscale(r0, c), uscale(s0, c), uscale(t0, c)


def ueval(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def strip_x(a):
    """Remove factors of the variable; returns (power, rest)."""
    a = trim(a)
    k = 0
    while a and a[0] == 0:
        a = a[1:]
        k += 1
    return k, a


def ustr(a, var="t"):
    return Polynomial(1, {(i,): c for i, c in enumerate(a)}).to_string([var])


def ujson(a):
    return [frac_str(c) for c in trim(a)]


def to_dense(poly, i=0):
    """Dense coefficients of a polynomial that only involves variable i."""
    out = [Fraction(0)] * (poly.degree(i) + 1)
    for e, c in poly.items():
        out[e[i]] += c
    return trim(out)


def factor_rational(a):
    """Irreducible monic factors over Q with multiplicities, degree then coefficients order."""
    import sympy

    a = trim(a)
    if deg(a) < 1:
        return []
    t = sympy.Symbol("t")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * t ** i for i, c in enumerate(a))
    _, facs = sympy.factor_list(sympy.Poly(expr, t, domain="QQ"))
    out = []
    for f, mult in facs:
        coeffs = [Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1]))
                  for c in reversed(f.all_coeffs())]
        out.append((monic(coeffs), mult))
    return sorted(out, key=lambda fm: (len(fm[0]), fm[0]))


def complex_roots(a):
    a = trim(a)
    if deg(a) < 1:
        return []
    return [complex(z) for z in np.roots([float(c) for c in reversed(a)])]


# -- arithmetic in Q(alpha) = Q[t]/(h) ---------------------------------------

class NumberField:
    """Q[t]/(h) for a monic irreducible h; elements are reduced coefficient lists."""

    def __init__(self, h):
        self.h = monic(h)
        self.degree = deg(self.h)

    def reduce(self, a):
        return udivmod(a, self.h)[1] if len(trim(a)) > self.degree else trim(a)

    def mul(self, a, b):
        return self.reduce(umul(a, b))

    def inv(self, a):
        g, s, _ = uxgcd(a, self.h)
        if g != [Fraction(1)]:
            raise ZeroDivisionError("element is not invertible")
        return self.reduce(s)

    # polynomials over the field: lists of elements, lowest degree first

    def ptrim(self, f):
        f = [trim(c) for c in f]
        while f and not f[-1]:
            f.pop()
        return f

    def pdivmod(self, f, g):
        f, g = self.ptrim(f), self.ptrim(g)
        inv_lead = self.inv(g[-1])
        q = [[] for _ in range(max(len(f) - len(g) + 1, 0))]
        r = [list(c) for c in f]
        while len(r) >= len(g) and r:
            c = self.mul(r[-1], inv_lead)
            k = len(r) - len(g)
            q[k] = c
            for i, y in enumerate(g):
                r[i + k] = self.reduce(uadd(r[i + k], uscale(self.mul(c, y), -1)))
            r = self.ptrim(r)
        return self.ptrim(q), r

    def pmonic(self, f):
        f = self.ptrim(f)
        if not f:
            return f
        inv_lead = self.inv(f[-1])
        return [self.mul(c, inv_lead) for c in f]

    def pgcd(self, f, g):
        f, g = self.ptrim(f), self.ptrim(g)
        while g:
            f, g = g, self.pdivmod(f, g)[1]
        return self.pmonic(f)

    def specialize(self, poly, x_index):
        """A two-variable Polynomial with variable ``x_index`` set to alpha, as a poly in the other."""
        y_index = 1 - x_index
        out = {}
        for e, c in poly.items():
            xs = [Fraction(0)] * e[x_index] + [Fraction(c)]
            out[e[y_index]] = uadd(out.get(e[y_index], []), xs)
        if not out:
            return []
        top = max(out)
        return self.ptrim([self.reduce(out.get(i, [])) for i in range(top + 1)])


# -- resultant ---------------------------------------------------------------

def _sylvester_det(p, q):
    """Resultant of two univariate coefficient lists with their formal degrees."""
    dp, dq = len(p) - 1, len(q) - 1
    size = dp + dq
    if size == 0:
        return Fraction(1)
    rows = []
    for i in range(dq):
        rows.append([Fraction(0)] * i + list(reversed(p)) + [Fraction(0)] * (size - dp - 1 - i))
    for i in range(dp):
        rows.append([Fraction(0)] * i + list(reversed(q)) + [Fraction(0)] * (size - dq - 1 - i))
    from .lattice import det
    return det(rows)


def _interpolate(xs, ys):
    """Coefficients of the polynomial through the points (Newton divided differences)."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)]
    for i in range(n - 1, -1, -1):
        poly = uadd(umul(poly, [-Fraction(xs[i]), Fraction(1)]), [coef[i]])
    return trim(poly)


def resultant(p, q, elim=1):
    """Res_{elim}(p, q) for two-variable Polynomials, as a dense poly in the other variable.

    Computed by evaluating the Sylvester determinant (built with the formal
    degrees, so evaluation commutes with the determinant) at enough integer
    points and interpolating.
    """
    keep = 1 - elim
    pc = p.coefficients_in(elim)
    qc = q.coefficients_in(elim)
    dp, dq = len(pc) - 1, len(qc) - 1
    if dp < 0 or dq < 0:
        return []
    bound = dq * max((c.degree(keep) for c in pc), default=0) \
        + dp * max((c.degree(keep) for c in qc), default=0)
    xs = list(range(bound + 1))

    def at(coeffs, x0):
        vals = []
        for c in coeffs:
            point = [0, 0]
            point[keep] = Fraction(x0)
            point[elim] = Fraction(1)
            vals.append(c.evaluate(tuple(point)))
        return vals

    ys = [_sylvester_det(at(pc, x0), at(qc, x0)) for x0 in xs]
    return _interpolate(xs, ys)


# -- the decision procedure --------------------------------------------------

def _prepare(polys):
    nonzero = [p for p in polys if not p.is_zero()]
    return [p.strip_monomial() for p in nonzero]


def _univariate_decision(polys, var, nvars):
    """Torus zeros of polynomials that only involve variable ``var``."""
    dense = [to_dense(p, var) for p in polys]
    g = []
    for a in dense:
        g = ugcd(g, a) if g else monic(a)
    k, g = strip_x(g)
    if deg(g) < 1:
        cofactors = _bezout(dense)
        steps = {"method": "bezout", "variable": var,
                 "cofactors": [ujson(c) for c in cofactors]}
        return NONDEGENERATE, EliminationCertificate(steps, _verify_univariate(var, nvars)), None
    point = [Fraction(1)] * nvars
    facs = factor_rational(g)
    linear = [f for f, _ in facs if deg(f) == 1]
    if linear:
        point[var] = -linear[0][0]
        return DEGENERATE, None, RationalWitness(tuple(point))
    h = facs[0][0]
    root = complex_roots(h)[0]
    approx = tuple(root if i == var else complex(1) for i in range(nvars))
    desc = {"method": "univariate", "variable": var, "minimal_polynomial": ujson(h)}
    return DEGENERATE, None, AlgebraicWitness(desc, approx, _verify_univariate_witness(var, h))


def _bezout(dense):
    """Cofactors c_i with sum c_i a_i = 1 for coprime polynomials."""
    g, cof = dense[0], [[Fraction(1)]] + [[] for _ in dense[1:]]
    g, cof[0] = monic(g), uscale(cof[0], 1 / Fraction(trim(g)[-1]))
    for i, a in enumerate(dense[1:], start=1):
        g2, s, t = uxgcd(g, a)
        cof = [umul(c, s) for c in cof]
        cof[i] = uadd(cof[i], t)
        g = g2
    return cof


def _verify_univariate(var, nvars):
    def verify(polys):
        dense = [to_dense(p, var) for p in _prepare(polys)]
        steps = _bezout(dense)
        total = []
        for c, a in zip(steps, dense):
            total = uadd(total, umul(c, a))
        return total == [Fraction(1)] and all(
            all(e[i] == 0 for i in range(nvars) if i != var) for p in _prepare(polys) for e in p.support())
    return verify


def _verify_univariate_witness(var, h):
    def verify(polys):
        return all(not udivmod(to_dense(p, var), h)[1] for p in _prepare(polys)) and h[0] != 0
    return verify


_WEIGHTS = [(1, 1), (1, 2), (2, 3), (3, 5), (5, 7), (7, 11)]


def _combinations(polys, attempt):
    """Two combinations whose common zeros contain those of the whole system."""
    if len(polys) == 2 and attempt == 0:
        return polys[0], polys[1]
    a, b = _WEIGHTS[attempt % len(_WEIGHTS)]
    q1 = polys[0] + polys[-1] * attempt if len(polys) > 2 else polys[0]
    q2 = Polynomial.zero(polys[0].n)
    for i, p in enumerate(polys[1:], start=1):
        q2 = q2 + p * (a + b * i + attempt * i * i)
    return q1, q2


def _field_gcd(field, polys, x_index):
    """Gcd over the field of the specialized system, with factors of y removed.

    Returns None when every polynomial vanishes identically on the fibre.
    """
    g = []
    for p in polys:
        s = field.specialize(p, x_index)
        if s:
            g = field.pgcd(g, s) if g else field.pmonic(s)
    if not g:
        return None
    while g and not trim(g[0]):
        g = g[1:]
    return g


def bivariate_exact_check(polys, max_attempts=6):
    """Decide whether two-variable polynomials have a common zero in (C*)^2.

    Returns (status, certificate, witness).  Monomial factors are removed
    first; a nonzero constant then proves emptiness.  ``Unknown`` is only
    returned when every generic elimination collapses and no witness is
    found along a rational fibre.
    """
    polys = list(polys)
    if any(p.n > 2 for p in polys):
        raise InputError("bivariate check needs polynomials in at most two variables")
    if not polys or all(p.is_zero() for p in polys):
        raise InputError("at least one nonzero polynomial is required")
    nvars = polys[0].n
    prepared = _prepare(polys)
    for i, p in enumerate(prepared):
        if p.is_constant():
            steps = {"method": "monomial", "position": i}
            return NONDEGENERATE, EliminationCertificate(steps, _verify_unit), None
    if nvars == 0:
        return DEGENERATE, None, RationalWitness(())
    uses = [any(p.degree(v) > 0 for p in prepared) for v in range(nvars)]
    if nvars == 1 or not uses[1]:
        return _univariate_decision(prepared, 0, nvars)
    if not uses[0]:
        return _univariate_decision(prepared, 1, nvars)
    if len(prepared) == 1:
        # one curve in the torus: it has points, find one on a rational fibre
        return _fibre_search(prepared)
    for attempt in range(max_attempts):
        q1, q2 = _combinations(prepared, attempt)
        r = resultant(q1, q2, elim=1)
        if r:
            return _decide_fibres(prepared, r, attempt)
    return _fibre_search(prepared)


def _verify_unit(polys):
    return any(p.is_constant() for p in _prepare(polys))


def _decide_fibres(prepared, r, attempt):
    k, rest = strip_x(r)
    traces = []
    if deg(rest) >= 1:
        for h, mult in factor_rational(rest):
            field = NumberField(h)
            g = _field_gcd(field, prepared, 0)
            if g is None or len(g) > 1:
                return DEGENERATE, None, _fibre_witness(field, g)
            traces.append({"factor": ujson(h), "multiplicity": mult})
    steps = {"method": "resultant", "attempt": attempt, "resultant": ujson(r),
             "x_power": k, "factors": traces}
    return NONDEGENERATE, EliminationCertificate(steps, _verify_resultant(attempt)), None


def _fibre_witness(field, g):
    """Witness on the fibre x = alpha, where g is the common factor in y (None: all vanish)."""
    h = field.h
    if field.degree == 1:
        alpha = -h[0]
        if g is None:
            return RationalWitness((alpha, Fraction(1)))
        gq = [c[0] if c else Fraction(0) for c in g]
        facs = factor_rational(gq)
        lin = [f for f, _ in facs if deg(f) == 1]
        if lin:
            return RationalWitness((alpha, -lin[0][0]))
        yroot = complex_roots(facs[0][0])[0]
        desc = {"method": "fibre", "x": frac_str(alpha), "y_minimal_polynomial": ujson(facs[0][0])}
        return AlgebraicWitness(desc, (complex(alpha), yroot), _verify_fibre(h, g))
    alpha = complex_roots(h)[0]
    if g is None:
        y = 1 + 0j
        gjson = None
    else:
        gnum = [complex(ueval(c, alpha)) if c else 0j for c in g]
        y = complex(max(np.roots(list(reversed(gnum))), key=abs))
        gjson = [ujson(c) for c in g]
    desc = {"method": "fibre", "x_minimal_polynomial": ujson(h), "y_gcd_over_field": gjson}
    return AlgebraicWitness(desc, (alpha, y), _verify_fibre(h, g))


def _verify_fibre(h, g):
    """Every polynomial of the system is a multiple of g on the fibre x = alpha."""
    def verify(polys):
        field = NumberField(h)
        if trim(h)[0] == 0:
            return False
        if g is not None and (len(g) < 2 or not trim(g[0])):
            return False
        for p in _prepare(polys):
            s = field.specialize(p, 0)
            if s and (g is None or field.pdivmod(s, g)[1]):
                return False
        return True
    return verify


def _verify_resultant(attempt):
    """Recompute the elimination and confirm every fibre has trivial gcd."""
    def verify(polys):
        prepared = _prepare(polys)
        q1, q2 = _combinations(prepared, attempt)
        r = resultant(q1, q2, elim=1)
        if not r:
            return False
        _, rest = strip_x(r)
        for h, _ in factor_rational(rest):
            g = _field_gcd(NumberField(h), prepared, 0)
            if g is None or len(g) > 1:
                return False
        return True
    return verify


def _fibre_search(prepared, tries=12):
    """Look for a rational fibre x = x0 on which the system shares a nonzero root."""
    fallback = None
    for x0 in [Fraction(s * k) for k in range(1, tries + 1) for s in (1, -1)]:
        field = NumberField([-x0, Fraction(1)])
        g = _field_gcd(field, prepared, 0)
        if g is None or len(g) > 1:
            w = _fibre_witness(field, g)
            if isinstance(w, RationalWitness):
                return DEGENERATE, None, w
            fallback = fallback or w
    if fallback:
        return DEGENERATE, None, fallback
    return UNKNOWN, None, None


def exact_torus_check(polys):
    """Entry point for systems in at most two variables."""
    return bivariate_exact_check(polys)
