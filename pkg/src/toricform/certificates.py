"""Certificates of torus emptiness and witnesses of torus zeros.

Every object here can re-check itself against the polynomial system it was
issued for; ``check`` never trusts the code path that produced it.
"""

from dataclasses import dataclass, field
from fractions import Fraction


def frac_str(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def poly_json(poly):
    return [{"exponent": list(e), "coeff": frac_str(c)} for e, c in poly.items()]


def _index_json(idx):
    return list(idx) if isinstance(idx, tuple) else idx


@dataclass(frozen=True)
class VertexCertificate:
    """The face is a single support point, so every restricted coefficient is a monomial."""

    point: tuple
    kind = "vertex"

    def check(self, polys):
        return any(not p.is_zero() for p in polys.values()) and all(
            p.is_zero() or p.support() == [tuple(self.point)] for p in polys.values())

    def to_json(self):
        return {"kind": self.kind, "point": list(self.point)}


@dataclass(frozen=True)
class MonomialCertificate:
    """One coefficient of the system is a single nonzero monomial."""

    index: tuple
    exponent: tuple
    kind = "monomial"

    def check(self, polys):
        p = polys.get(self.index)
        return p is not None and p.is_monomial() and p.support() == [tuple(self.exponent)]

    def to_json(self):
        return {"kind": self.kind, "index": _index_json(self.index), "exponent": list(self.exponent)}


@dataclass(frozen=True)
class CombinationCertificate:
    """A rational combination of the coefficients is a single nonzero monomial."""

    weights: tuple  # (index, Fraction) pairs
    exponent: tuple
    kind = "combination"

    def combination(self, polys):
        total = None
        for idx, w in self.weights:
            term = polys[idx] * w
            total = term if total is None else total + term
        return total

    def check(self, polys):
        if any(idx not in polys for idx, _ in self.weights):
            return False
        total = self.combination(polys)
        return total is not None and total.is_monomial() and total.support() == [tuple(self.exponent)]

    def to_json(self):
        return {"kind": self.kind, "exponent": list(self.exponent),
                "weights": [{"index": _index_json(i), "weight": frac_str(w)} for i, w in self.weights]}


@dataclass(frozen=True)
class EliminationCertificate:
    """Exact elimination proof for at most two free variables.

    ``steps`` is a JSON-ready trace; ``verifier`` re-runs the checks on the
    system (set by the elimination module, which owns the algebra).
    """

    steps: dict
    verifier: object = field(default=None, compare=False, repr=False)
    kind = "elimination"

    def check(self, polys):
        return bool(self.verifier and self.verifier(list(polys.values())))

    def to_json(self):
        return {"kind": self.kind, **self.steps}


@dataclass(frozen=True)
class RationalWitness:
    point: tuple
    kind = "rational"
    certifying = True

    def check(self, polys):
        pt = tuple(Fraction(x) for x in self.point)
        return all(x != 0 for x in pt) and all(p.evaluate(pt) == 0 for p in polys.values())

    def approx(self):
        return tuple(complex(x) for x in self.point)

    def to_json(self):
        return {"kind": self.kind, "point": [frac_str(x) for x in self.point]}


@dataclass(frozen=True)
class AlgebraicWitness:
    """Exact torus zero with algebraic coordinates, described by its elimination.

    ``description`` says how the coordinates are defined; ``approx`` is one
    numerical embedding; ``verifier`` re-derives it exactly.
    """

    description: dict
    approx_point: tuple
    verifier: object = field(default=None, compare=False, repr=False)
    kind = "algebraic"
    certifying = True

    def check(self, polys):
        return bool(self.verifier and self.verifier(list(polys.values())))

    def approx(self):
        return self.approx_point

    def to_json(self):
        return {"kind": self.kind, **self.description,
                "approx": [[repr(z.real), repr(z.imag)] for z in self.approx_point]}


@dataclass(frozen=True)
class NumericWitness:
    """Floating-point near-zero; evidence only, never a proof."""

    point: tuple
    residual: float
    tol: float
    kind = "numeric"
    certifying = False

    def check(self, polys):
        # monomial factors do not change torus zeros but would distort the residual
        vals = [abs(p.strip_monomial().evaluate(self.point)) for p in polys.values() if not p.is_zero()]
        return (max(vals, default=0.0) < self.tol
                and min(abs(z) for z in self.point) > self.tol) if self.point else False

    def approx(self):
        return self.point

    def to_json(self):
        return {"kind": self.kind, "point": [[repr(z.real), repr(z.imag)] for z in self.point],
                "residual": repr(self.residual), "tol": repr(self.tol)}


def index_polys(polys):
    """Normalize a list or dict of polynomials into a dict keyed by index."""
    if isinstance(polys, dict):
        return dict(polys)
    return {i: p for i, p in enumerate(polys)}

