"""Sparse multivariate polynomials with exact rational coefficients."""

from fractions import Fraction
from numbers import Rational

from .errors import InputError


def _coerce(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"polynomial coefficients must be rational, got {type(c).__name__}")


class Polynomial:
    """Finite map from exponent vectors in N^n to nonzero rationals.

    Terms are kept sorted by exponent so iteration, printing and hashing are
    deterministic.  Instances are immutable.
    """

    __slots__ = ("n", "_terms")

    def __init__(self, n, terms=None):
        self.n = n
        acc = {}
        for exp, c in (terms.items() if isinstance(terms, dict) else terms or ()):
            exp = tuple(int(e) for e in exp)
            if len(exp) != n:
                raise InputError(f"exponent {exp} does not have {n} entries")
            if any(e < 0 for e in exp):
                raise InputError(f"negative exponent {exp}")
            acc[exp] = acc.get(exp, 0) + _coerce(c)
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c != 0))

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def constant(cls, n, c):
        return cls(n, {(0,) * n: c})

    @classmethod
    def monomial(cls, exponent, c=1):
        return cls(len(exponent), {tuple(exponent): c})

    @classmethod
    def variable(cls, n, i):
        return cls.monomial(tuple(int(j == i) for j in range(n)))

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return iter(self._terms)

    def support(self):
        return [e for e, _ in self._terms]

    def coefficient(self, exponent):
        return self.terms.get(tuple(exponent), Fraction(0))

    def is_zero(self):
        return not self._terms

    def is_monomial(self):
        return len(self._terms) == 1

    def is_constant(self):
        return self.is_zero() or (len(self._terms) == 1 and not any(self._terms[0][0]))

    def __len__(self):
        return len(self._terms)

    def degree(self, i):
        return max((e[i] for e, _ in self._terms), default=-1)

    def total_degree(self):
        return max((sum(e) for e, _ in self._terms), default=-1)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.n, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self._terms))

    # -- arithmetic ---------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, Polynomial):
            if other.n != self.n:
                raise InputError(f"mixing polynomials in {self.n} and {other.n} variables")
            return other
        return Polynomial.constant(self.n, other)

    def __add__(self, other):
        other = self._lift(other)
        return Polynomial(self.n, list(self._terms) + list(other._terms))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.n, [(e, -c) for e, c in self._terms])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = _coerce(other)
            return Polynomial(self.n, [(e, c * a) for e, a in self._terms])
        other = self._lift(other)
        acc = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, 0) + c1 * c2
        return Polynomial(self.n, acc)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise InputError("negative polynomial power")
        result = Polynomial.constant(self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale_monomial(self, exponent):
        """Multiply by X^exponent."""
        return Polynomial(self.n, [(tuple(a + b for a, b in zip(e, exponent)), c)
                                   for e, c in self._terms])

    def divides_by_monomial(self, exponent):
        return all(all(a >= b for a, b in zip(e, exponent)) for e, _ in self._terms)

    def divide_monomial(self, exponent):
        """Exact quotient by X^exponent; raises if some term is not divisible."""
        if not self.divides_by_monomial(exponent):
            raise ArithmeticError(f"{self} is not divisible by the monomial {tuple(exponent)}")
        return Polynomial(self.n, [(tuple(a - b for a, b in zip(e, exponent)), c)
                                   for e, c in self._terms])

    def monomial_content(self):
        """Componentwise minimum exponent (largest monomial dividing self)."""
        if not self._terms:
            return (0,) * self.n
        return tuple(min(e[i] for e, _ in self._terms) for i in range(self.n))

    def strip_monomial(self):
        return self.divide_monomial(self.monomial_content())

    def restrict(self, exponents):
        """Keep only the terms whose exponent lies in ``exponents``."""
        keep = {tuple(e) for e in exponents}
        return Polynomial(self.n, [(e, c) for e, c in self._terms if e in keep])

    def map_exponents(self, f, n=None):
        """Apply an exponent map; colliding images are summed."""
        return Polynomial(self.n if n is None else n, [(f(e), c) for e, c in self._terms])

    def specialize(self, values):
        """Substitute exact values for some variables and drop them.

        ``values`` maps variable index to a rational; the result lives in the
        remaining variables, in their original order.
        """
        keep = [i for i in range(self.n) if i not in values]
        acc = {}
        for e, c in self._terms:
            for i, v in values.items():
                if e[i]:
                    c = c * Fraction(v) ** e[i]
            if c:
                k = tuple(e[i] for i in keep)
                acc[k] = acc.get(k, 0) + c
        return Polynomial(len(keep), acc)

    def derivative(self, i):
        return Polynomial(self.n, [(e[:i] + (e[i] - 1,) + e[i + 1:], c * e[i])
                                   for e, c in self._terms if e[i]])

    def coefficients_in(self, i):
        """Coefficients as a polynomial in variable i: list indexed by degree.

        Each coefficient still lives in n variables with exponent 0 in slot i.
        """
        d = self.degree(i)
        buckets = [[] for _ in range(max(d + 1, 0))]
        for e, c in self._terms:
            buckets[e[i]].append((e[:i] + (0,) + e[i + 1:], c))
        return [Polynomial(self.n, b) for b in buckets]

    def __call__(self, point):
        return self.evaluate(point)

    def evaluate(self, point):
        """Evaluate at a point of Fractions, ints, floats or complex numbers."""
        if len(point) != self.n:
            raise InputError(f"point has {len(point)} coordinates, expected {self.n}")
        exact = all(isinstance(x, (int, Fraction)) for x in point)
        total = 0
        for e, c in self._terms:
            term = c if exact else complex(c)
            for x, k in zip(point, e):
                if k:
                    term = term * x ** k
            total = total + term
        if isinstance(total, int):
            total = Fraction(total)
        return total

    # -- printing -----------------------------------------------------------

    def to_string(self, names=None):
        names = names or [f"x{i + 1}" for i in range(self.n)]
        if not self._terms:
            return "0"
        parts = []
        for e, c in reversed(self._terms):
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(names, e) if k)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Polynomial({self.n}, {dict(self._terms)!r})"
