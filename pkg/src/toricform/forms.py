"""Polynomial p-forms in the standard and logarithmic bases.

A p-form on C^n is a map from p-subsets J of {0, ..., n-1} (sorted tuples) to
polynomial coefficients.  In the standard basis the coefficient multiplies
dX_J; in the logarithmic basis it multiplies dX_J / X_J, so the logarithmic
coefficient is the standard one times X_J.
"""

from itertools import combinations

from . import lattice
from .errors import InputError
from .polynomial import Polynomial


def default_names(n):
    if n <= 3:
        return ["x", "y", "z"][:n]
    return [f"x{i + 1}" for i in range(n)]


def _subset_exponent(n, J):
    return tuple(int(i in J) for i in range(n))


class _PForm:
    basis = ""

    def __init__(self, n, p, coeffs, names=None):
        if n < 1:
            raise InputError("ambient dimension must be positive")
        if not 1 <= p < n:
            raise InputError(f"form degree p = {p} must satisfy 1 <= p < n = {n}")
        self.n = n
        self.p = p
        self.names = list(names) if names else default_names(n)
        if len(self.names) != n:
            raise InputError("one variable name per coordinate is required")
        full = {J: Polynomial.zero(n) for J in combinations(range(n), p)}
        for J, poly in dict(coeffs).items():
            J = tuple(J)
            if J not in full:
                raise InputError(f"{J} is not a sorted {p}-subset of 0..{n - 1}")
            if poly.n != n:
                raise InputError("coefficient lives in the wrong number of variables")
            full[J] = full[J] + poly
        self.coeffs = full

    def subsets(self):
        return list(self.coeffs)

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs.values())

    def __eq__(self, other):
        return (type(self) is type(other) and self.n == other.n and self.p == other.p
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((type(self).__name__, self.n, self.p, tuple(self.coeffs.items())))

    def differential_label(self, J):
        return "^".join("d" + self.names[j] for j in J)

    def __str__(self):
        parts = []
        for J, c in self.coeffs.items():
            if not c.is_zero():
                label = self.differential_label(J)
                if self.basis == "log":
                    label = f"{label}/{''.join(self.names[j] for j in J)}"
                parts.append(f"({c.to_string(self.names)}) {label}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"{type(self).__name__}({self})"


class StandardPForm(_PForm):
    """sum_J g_J(X) dX_J."""


class LogPForm(_PForm):
    """sum_J f_J(X) dX_J / X_J, with X_J dividing every f_J."""

    basis = "log"

    def __init__(self, n, p, coeffs, names=None):
        super().__init__(n, p, coeffs, names)
        for J, poly in self.coeffs.items():
            for e, _ in poly.items():
                if any(e[j] == 0 for j in J):
                    raise InputError(
                        f"logarithmic coefficient of {J} has exponent {e} with a zero "
                        "coordinate indexed by the subset")

    def coefficient(self, exponent, J):
        """The scalar a_{I,J}."""
        return self.coeffs[tuple(J)].coefficient(exponent)


def to_logarithmic(form):
    return LogPForm(form.n, form.p,
                    {J: g.scale_monomial(_subset_exponent(form.n, J)) for J, g in form.coeffs.items()},
                    form.names)


def to_standard(form):
    try:
        coeffs = {J: f.divide_monomial(_subset_exponent(form.n, J)) for J, f in form.coeffs.items()}
    except ArithmeticError as exc:  # pragma: no cover - guarded by the LogPForm invariant
        raise AssertionError(f"logarithmic invariant violated: {exc}") from exc
    return StandardPForm(form.n, form.p, coeffs, form.names)


def support(form):
    """Exponents I such that some a_{I,J} is nonzero, sorted."""
    return sorted({e for f in form.coeffs.values() for e in f.support()})


def restrict(form, exponents):
    exponents = {tuple(e) for e in exponents}
    return type(form)(form.n, form.p,
                      {J: f.restrict(exponents) for J, f in form.coeffs.items()}, form.names)


def evaluate_coefficients(form, point):
    """Values of the standard-basis coefficients at ``point``, in subset order."""
    if isinstance(form, LogPForm):
        form = to_standard(form)
    if len(point) != form.n:
        raise InputError(f"point has {len(point)} coordinates, expected {form.n}")
    return [g.evaluate(point) for g in form.coeffs.values()]


# -- wedge algebra on dict-valued forms -------------------------------------

def _sort_sign(indices):
    """Sign of the permutation sorting distinct indices (0 if they repeat)."""
    if len(set(indices)) != len(indices):
        return 0
    sign = 1
    idx = list(indices)
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            if idx[i] > idx[j]:
                sign = -sign
    return sign


def wedge(a, b):
    """Wedge product of forms given as {index tuple: Polynomial} in the dX basis."""
    out = {}
    for ka, pa in a.items():
        for kb, pb in b.items():
            sign = _sort_sign(ka + kb)
            if sign == 0:
                continue
            key = tuple(sorted(ka + kb))
            term = pa * pb * sign
            out[key] = out[key] + term if key in out else term
    return {k: v for k, v in out.items() if not v.is_zero()}


def monomial_differential(exponent):
    """d(Y^exponent) as a 1-form, by the product rule."""
    out = {}
    for k, e in enumerate(exponent):
        if e:
            lowered = exponent[:k] + (e - 1,) + exponent[k + 1:]
            out[(k,)] = Polynomial.monomial(lowered, e)
    return out


def substitute_pullback_oracle(form, m):
    """Pull back by X = Y^M through direct substitution.

    Each x_j becomes the monomial Y^(row j of M) and each dx_j its exact
    differential; wedges are expanded with sign bookkeeping.  Independent of
    the minor-based formula on purpose.
    """
    m = lattice.as_matrix(m)
    n = form.n
    if len(m) != n or any(len(r) != n for r in m):
        raise InputError(f"chart matrix must be {n}x{n}")
    if any(x < 0 for r in m for x in r):
        raise InputError("chart matrix must have nonnegative entries")
    if abs(lattice.det(m)) != 1:
        raise InputError("chart matrix must be unimodular")
    if isinstance(form, LogPForm):
        form = to_standard(form)

    def image(exponent):
        return tuple(sum(exponent[j] * m[j][k] for j in range(n)) for k in range(n))

    dx = [monomial_differential(tuple(m[j])) for j in range(n)]
    result = {}
    for J, g in form.coeffs.items():
        if g.is_zero():
            continue
        acc = {(): g.map_exponents(image)}
        for j in J:
            acc = wedge(acc, dx[j])
        for K, poly in acc.items():
            result[K] = result[K] + poly if K in result else poly
    return StandardPForm(n, form.p, result, [f"y{i + 1}" for i in range(n)])
