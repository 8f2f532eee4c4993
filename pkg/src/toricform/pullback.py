"""Chart-wise pull-back of a logarithmic p-form along X = Y^M.

In the chart of a smooth maximal cone with generators v_1..v_n (columns of
M), the logarithmic differentials transform through the p x p minors of M,
and a monomial X^I becomes Y^(I M) = prod_k y_k^<v_k, I>.  Factoring out
Y^T with t_k = min <v_k, I> over the support leaves coefficients fbar_K with
nonnegative exponents.
"""

from dataclasses import dataclass

from . import lattice
from .errors import InputError, TheoremViolation
from .fan import Cone
from .forms import StandardPForm, substitute_pullback_oracle, support
from .newton import NewtonPolyhedron
from .polynomial import Polynomial


@dataclass(frozen=True)
class ChartMorphism:
    cone: Cone
    matrix: tuple

    @property
    def n(self):
        return len(self.matrix)

    @property
    def generators(self):
        return tuple(self.cone.generators)

    def image(self, exponent):
        """I -> I M, the exponent of the pulled-back monomial."""
        m = self.matrix
        return tuple(sum(exponent[j] * m[j][k] for j in range(self.n)) for k in range(self.n))

    def point_image(self, c):
        """c -> c^M, the point of C^n a chart point maps to (x_j = prod_k c_k^{M_jk})."""
        out = []
        for row in self.matrix:
            val = 1
            for ck, e in zip(c, row):
                if e:
                    val = val * ck ** e
            out.append(val)
        return tuple(out)


@dataclass(frozen=True)
class ChartPullback:
    chart: ChartMorphism
    T: tuple
    A: frozenset
    coeffs: dict
    p: int

    @property
    def divisor_exponents(self):
        return self.T


def chart_matrix(cone):
    """Chart of a smooth maximal cone; column k is the k-th generator."""
    n = cone.ambient
    if cone.dim != n or len(cone.generators) != n:
        raise InputError(f"{cone} is not a maximal simplicial cone of R^{n}")
    if not cone.is_smooth():
        raise InputError(f"{cone} is not smooth")
    m = lattice.from_columns(cone.generators)
    if any(x < 0 for row in m for x in row):
        raise InputError(f"{cone} leaves the positive orthant")
    return ChartMorphism(cone, m)


def chart_from_matrix(m):
    """Chart for an arbitrary unimodular nonnegative matrix (columns = generators)."""
    m = lattice.as_matrix(m)
    if abs(lattice.det(m)) != 1:
        raise InputError("chart matrix must be unimodular")
    return chart_matrix(Cone(lattice.transpose(m)))


def exponents_T(chart, gamma):
    """t_k = min over the support of <v_k, I>; enough since v_k >= 0."""
    return tuple(gamma.min_value(v) for v in chart.generators)


def pull_back(form, chart, gamma=None):
    if form.is_zero():
        raise InputError("the form is identically zero")
    if gamma is None:
        gamma = NewtonPolyhedron(support(form))
    n, p = form.n, form.p
    T = exponents_T(chart, gamma)
    subsets = lattice.subsets(n, p)
    minors = {(J, K): lattice.minor(chart.matrix, J, K) for J in subsets for K in subsets}
    coeffs = {}
    for K in subsets:
        terms = []
        for J in subsets:
            mjk = minors[(J, K)]
            if mjk == 0:
                continue
            for I, a in form.coeffs[J].items():
                e = tuple(x - t for x, t in zip(chart.image(I), T))
                if any(x < 0 for x in e):
                    raise TheoremViolation(f"negative exponent {e} after factoring Y^T")
                terms.append((e, a * mjk))
        coeffs[K] = Polynomial(n, terms)
    A = frozenset(k for k, t in enumerate(T) if t > 0)
    return ChartPullback(chart, T, A, coeffs, p)


def check_adapted(pb):
    """Quotients fbar_K / Y_{K \\ A} for every K; raises if one does not exist."""
    n = pb.chart.n
    out = {}
    for K, f in pb.coeffs.items():
        div = tuple(int(k in K and k not in pb.A) for k in range(n))
        if not f.divides_by_monomial(div):
            raise TheoremViolation(
                f"fbar_{K} = {f} is not divisible by Y^{div} in chart {pb.chart.generators}")
        out[K] = f.divide_monomial(div)
    return out


def expand_standard(pb):
    """The pull-back Y^T sum_K fbar_K dY_K / Y_K written in the dY_K basis."""
    n = pb.chart.n
    coeffs = {}
    for K, f in pb.coeffs.items():
        yk = tuple(int(k in K) for k in range(n))
        coeffs[K] = f.scale_monomial(pb.T).divide_monomial(yk)
    return StandardPForm(n, pb.p, coeffs, [f"y{i + 1}" for i in range(n)])


def verify_against_oracle(form, chart, gamma=None):
    pb = pull_back(form, chart, gamma)
    expected = substitute_pullback_oracle(form, chart.matrix)
    n = chart.n
    for K in pb.coeffs:
        yk = tuple(int(k in K) for k in range(n))
        # compare Y^T fbar_K with (oracle dY_K coefficient) * Y_K; no division needed
        if pb.coeffs[K].scale_monomial(pb.T) != expected.coeffs[K].scale_monomial(yk):
            return False
    return True


def charts(fan):
    """Charts of the maximal cones of a regular fan, in canonical order."""
    return [chart_matrix(Cone(c.key, c.ambient)) for c in fan.maximal_cones()]

