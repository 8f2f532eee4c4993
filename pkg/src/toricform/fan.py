"""Rational polyhedral cones and fans; triangulation and regular refinement.

Cones are described by primitive integer generators and, lazily, by an exact
H-representation (equalities cutting out the linear span plus one oriented
inequality per facet).  Everything is exact; fans of the size met here have a
few dozen cones in dimension at most 4, so brute-force enumeration of facets
and intersections is adequate.
"""

import logging
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations, product
from math import factorial

from . import lattice
from .errors import InputError

log = logging.getLogger(__name__)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _kernel_line(rows, n):
    """Primitive integer spanning vector of {x : rows x = 0} if it is a line, else None."""
    rows = [tuple(r) for r in rows]
    if len(rows) == n - 1:
        # integer cofactors avoid rational elimination in the common case
        v = lattice.generalized_cross(rows)
        return lattice.primitive(v) if any(v) else None
    ns = lattice.nullspace(rows, n)
    return lattice.clear_denominators(ns[0]) if len(ns) == 1 else None


class Cone:
    """Strongly convex rational cone given by its minimal generators.

    Generators keep the order they were given in (chart matrices use it);
    equality and hashing ignore order.  Non-primitive inputs are scaled to
    primitive, duplicates and generators that are not extreme rays are
    dropped.
    """

    def __init__(self, generators, ambient=None):
        gens = []
        for g in generators:
            g = lattice.primitive(g)
            if g not in gens:
                gens.append(g)
        if ambient is None:
            if not gens:
                raise InputError("the ambient dimension of a zero cone must be given")
            ambient = len(gens[0])
        if any(len(g) != ambient for g in gens):
            raise InputError("generators of different lengths")
        self.ambient = ambient
        self._raw = tuple(gens)
        if gens:
            if not self._pointed():
                raise InputError(f"cone generated by {gens} is not strongly convex")
            self.generators = tuple(g for g in gens if self._is_extreme(g))
        else:
            self.generators = ()
        self.key = tuple(sorted(self.generators))

    # -- geometry -------------------------------------------------------------

    @cached_property
    def dim(self):
        return lattice.rank(self._raw) if self._raw else 0

    @cached_property
    def equalities(self):
        """Integer vectors spanning the orthogonal complement of the span."""
        if not self._raw:
            return [tuple(int(i == j) for i in range(self.ambient)) for j in range(self.ambient)]
        return [lattice.clear_denominators(v) for v in lattice.nullspace(self._raw, self.ambient)]

    @cached_property
    def _facet_data(self):
        """Oriented facet normals (inside the span) with the generators on each facet."""
        d = self.dim
        if d <= 1:
            return []
        found = {}
        for chosen in combinations(self._raw, d - 1):
            a = _kernel_line(list(chosen) + list(self.equalities), self.ambient)
            if a is None:
                continue
            vals = [_dot(a, g) for g in self._raw]
            if all(v <= 0 for v in vals):
                a = tuple(-x for x in a)
                vals = [-v for v in vals]
            elif not all(v >= 0 for v in vals):
                continue
            on = frozenset(g for g, v in zip(self._raw, vals) if v == 0)
            found.setdefault(a, on)
        return sorted(found.items())

    def _pointed(self):
        d = self.dim
        if d == 1:
            return len(self._raw) == 1 or all(
                _dot(self._raw[0], g) > 0 for g in self._raw)
        normals = [a for a, _ in self._facet_data]
        if not normals:
            return False
        return lattice.rank(list(normals) + list(self.equalities)) == self.ambient

    def _is_extreme(self, g):
        if self.dim == 1:
            return True
        containing = [a for a, on in self._facet_data if g in on]
        return bool(containing) and lattice.rank(containing + list(self.equalities)) == self.ambient - 1

    @property
    def inequalities(self):
        return [a for a, _ in self._facet_data]

    def contains(self, w):
        """Exact membership test for a rational vector."""
        if any(_dot(e, w) != 0 for e in self.equalities):
            return False
        if self.dim == 1:
            return _dot(self.generators[0], w) >= 0
        return all(_dot(a, w) >= 0 for a in self.inequalities)

    def relative_interior_contains(self, w):
        if not self.contains(w):
            return False
        if self.dim <= 1:
            return self.dim == 0 or _dot(self.generators[0], w) > 0
        return all(_dot(a, w) > 0 for a in self.inequalities)

    def contains_cone(self, other):
        return all(self.contains(g) for g in other.generators)

    def facets(self):
        if self.dim == 0:
            return []
        if self.dim == 1:
            return [Cone((), self.ambient)]
        out = []
        for _, on in self._facet_data:
            out.append(Cone([g for g in self.generators if g in on], self.ambient))
        return out

    def faces(self):
        """All faces including the cone itself and the zero cone."""
        return list(self._face_list)

    @cached_property
    def _face_list(self):
        seen = {self}
        stack = [self]
        while stack:
            c = stack.pop()
            for f in c.facets():
                if f not in seen:
                    seen.add(f)
                    stack.append(f)
        return tuple(sorted(seen, key=lambda c: (c.dim, c.key)))

    def is_simplicial(self):
        return len(self.generators) == self.dim

    def multiplicity(self):
        if not self.is_simplicial():
            raise InputError("multiplicity is defined for simplicial cones only")
        return lattice.multiplicity(self.generators)

    def is_smooth(self):
        return self.is_simplicial() and lattice.is_smooth(self.generators)

    def interior_point(self):
        """Sum of the generators: an integer point of the relative interior."""
        return tuple(sum(col) for col in zip(*self.generators)) if self.generators \
            else (0,) * self.ambient

    def __eq__(self, other):
        return isinstance(other, Cone) and self.ambient == other.ambient and self.key == other.key

    def __hash__(self):
        return hash((self.ambient, self.key))

    def __lt__(self, other):
        return (self.dim, self.key) < (other.dim, other.key)

    def __repr__(self):
        return f"Cone({list(self.generators)})"


def intersect(c1, c2):
    """Exact intersection of two pointed cones, as a Cone."""
    n = c1.ambient
    eqs = list(c1.equalities) + list(c2.equalities)
    ineqs = list(c1.inequalities) + list(c2.inequalities)
    if c1.dim == 1:
        ineqs.append(c1.generators[0])
    if c2.dim == 1:
        ineqs.append(c2.generators[0])
    r = lattice.rank(eqs) if eqs else 0
    k = n - 1 - r
    rays = set()
    if k >= 0:
        for chosen in combinations(ineqs, k):
            base = _kernel_line(eqs + list(chosen), n)
            if base is None:
                continue
            for cand in (base, tuple(-x for x in base)):
                if c1.contains(cand) and c2.contains(cand):
                    rays.add(cand)
    return Cone(sorted(rays), n)


class Fan:
    """Finite set of cones closed under taking faces."""

    def __init__(self, cones, ambient=None):
        cones = list(cones)
        if ambient is None:
            if not cones:
                raise InputError("empty fan needs an explicit ambient dimension")
            ambient = cones[0].ambient
        self.ambient = ambient
        closed = set()
        for c in cones:
            if c.ambient != ambient:
                raise InputError("cones of different ambient dimensions")
            if c not in closed:
                closed.update(c.faces())
        closed.add(Cone((), ambient))
        self.cones = frozenset(closed)

    @classmethod
    def from_generator_lists(cls, lists, ambient=None):
        return cls([Cone(g, ambient) for g in lists], ambient)

    def maximal_cones(self):
        return list(self._maximal)

    @cached_property
    def _maximal(self):
        cones = sorted(self.cones, key=lambda c: c.key)
        out = []
        for c in cones:
            if not any(c != d and c.dim < d.dim and set(c.generators) <= set(d.generators)
                       and d.contains_cone(c) for d in cones):
                out.append(c)
        return tuple(out)

    def rays(self):
        return sorted(c.generators[0] for c in self.cones if c.dim == 1)

    def cones_of_dim(self, d):
        return sorted((c for c in self.cones if c.dim == d), key=lambda c: c.key)

    def is_simplicial(self):
        return all(c.is_simplicial() for c in self.cones)

    def is_regular(self):
        return all(c.is_smooth() for c in self.maximal_cones())

    def support_contains(self, w):
        return any(c.contains(w) for c in self.maximal_cones())

    def __eq__(self, other):
        return isinstance(other, Fan) and self.cones == other.cones

    def __hash__(self):
        return hash(self.cones)

    def __repr__(self):
        return f"Fan({[list(c.generators) for c in self.maximal_cones()]})"


def maximal_cones(fan):
    return fan.maximal_cones()


def fan_axiom_violations(fan):
    """Problems with the fan axioms, empty when the fan is valid."""
    problems = []
    for c in fan.cones:
        for f in c.faces():
            if f not in fan.cones:
                problems.append(f"face {f} of {c} missing")
    maxi = fan.maximal_cones()
    face_sets = {c: set(c.faces()) for c in maxi}
    for a, b in combinations(maxi, 2):
        inter = intersect(a, b)
        if inter not in face_sets[a] or inter not in face_sets[b]:
            problems.append(f"{a} and {b} meet in {inter}, not a common face")
    return problems


# -- triangulation ------------------------------------------------------------

def _pull(cone, order):
    if cone.is_simplicial():
        return [tuple(cone.generators)]
    apex = min(cone.generators, key=order)
    out = []
    for facet in cone.facets():
        if apex in facet.generators:
            continue
        for simplex in _pull(facet, order):
            out.append((apex,) + simplex)
    return out


def triangulate(fan):
    """Pulling triangulation using the lexicographic order of rays.

    Pulling with one global order restricts consistently to shared faces, so
    the result is again a fan, with no new rays.
    """
    order = {r: i for i, r in enumerate(fan.rays())}
    simplices = []
    for c in fan.maximal_cones():
        simplices.extend(_pull(c, lambda g: order[g]))
    return Fan([Cone(s, fan.ambient) for s in simplices], fan.ambient)


# -- regular refinement -------------------------------------------------------

def _frac(x):
    return x - (x.numerator // x.denominator)


def parallelepiped_points(generators):
    """Nonzero lattice points sum(l_i v_i) with 0 <= l_i < 1, with their l."""
    gens = [tuple(g) for g in generators]
    n = len(gens[0])
    d = len(gens)
    cols = lattice.from_columns(gens)
    out = []
    if d == n:
        # the points form the group Z^n / <gens>, generated by the unit vectors
        seeds = []
        for j in range(n):
            e = [int(i == j) for i in range(n)]
            lam = lattice.solve(cols, e)
            seeds.append(tuple(_frac(x) for x in lam))
        zero = tuple(Fraction(0) for _ in range(d))
        seen = {zero}
        frontier = [zero]
        while frontier:
            nxt = []
            for lam in frontier:
                for s in seeds:
                    cand = tuple(_frac(a + b) for a, b in zip(lam, s))
                    if cand not in seen:
                        seen.add(cand)
                        nxt.append(cand)
            frontier = nxt
        seen.discard(zero)
        for lam in seen:
            w = tuple(int(sum(l * g[i] for l, g in zip(lam, gens))) for i in range(n))
            out.append((w, lam))
    else:
        lo = [sum(min(0, g[i]) for g in gens) for i in range(n)]
        hi = [sum(max(0, g[i]) for g in gens) for i in range(n)]
        for z in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
            if not any(z):
                continue
            lam = lattice.solve(cols, z)
            if lam is not None and all(0 <= x < 1 for x in lam):
                out.append((tuple(z), tuple(lam)))
    return sorted(out, key=lambda t: (sum(t[1]), t[0]))


def subdivision_point(cone):
    """Point used to subdivide a non-smooth simplicial cone: minimal sum of
    coefficients, ties broken lexicographically on the point."""
    pts = parallelepiped_points(cone.generators)
    if not pts:
        raise InputError(f"{cone} is smooth, nothing to subdivide")
    w, lam = pts[0]
    return lattice.primitive(w), lam


def _multiplicity_profile(cones, mult):
    return tuple(sorted((m for m in (mult(c) for c in cones) if m > 1), reverse=True))


def regularize(fan, trace=None):
    """Regular refinement by repeated stellar subdivision.

    ``trace``, when a list, receives one record per inserted ray.  Each step
    replaces every cone through the chosen point by cones of strictly smaller
    multiplicity, so the sorted multiplicity profile decreases.
    """
    if not fan.is_simplicial():
        raise InputError("regularize needs a simplicial fan; call triangulate first")
    n = fan.ambient
    cones = [tuple(c.generators) for c in fan.maximal_cones()]
    mult = lru_cache(maxsize=None)(lattice.multiplicity)
    profile = _multiplicity_profile(cones, mult)
    while True:
        bad = sorted((tuple(sorted(c)) for c in cones if mult(c) > 1))
        if not bad:
            break
        sigma = Cone(bad[0], n)
        w, lam = subdivision_point(sigma)
        tau = [g for g, l in zip(sigma.generators, lam) if l > 0]
        new = []
        for c in cones:
            if set(tau) <= set(c):
                for u in tau:
                    new.append(tuple(sorted([g for g in c if g != u] + [w])))
            else:
                new.append(c)
        new_profile = _multiplicity_profile(new, mult)
        if not new_profile < profile:
            raise AssertionError("stellar subdivision did not lower the multiplicity profile")
        if trace is not None:
            trace.append({"ray": w, "cone": list(sigma.key), "multiplicity": sigma.multiplicity(),
                          "excess": sum(m - 1 for m in new_profile)})
        log.debug("inserted ray %s into %s", w, sigma.key)
        cones, profile = new, new_profile
    return Fan([Cone(c, n) for c in cones], n)


def _relative_volume(simplex, basis, functional):
    """Volume of {x in cone(simplex) : functional(x) <= 1} in basis coordinates."""
    cols = lattice.from_columns(basis)
    coords = []
    for g in simplex:
        lam = lattice.solve(cols, g)
        u = _dot(functional, g)
        coords.append([x / u for x in lam])
    return abs(lattice.det(coords)) / factorial(len(simplex))


def _cone_volume(cone, basis, functional):
    return sum(_relative_volume(s, basis, functional) for s in _pull(cone, lambda g: g))


def is_refinement(fine, coarse):
    """True iff every cone of ``fine`` lies in a cone of ``coarse`` and the supports agree.

    Support equality is checked exactly: inside each maximal cone of
    ``coarse`` the truncated volumes of the contained fine cones of the same
    dimension must add up to the volume of the coarse cone.
    """
    if fine.ambient != coarse.ambient:
        return False
    coarse_max = coarse.maximal_cones()
    fine_max = fine.maximal_cones()
    for c in fine_max:
        if not any(d.contains_cone(c) for d in coarse_max):
            return False
    for sigma in coarse_max:
        if sigma.dim == 0:
            continue
        basis = sigma.generators[:sigma.dim] if sigma.is_simplicial() \
            else _independent(sigma.generators)
        # positive on sigma minus the origin
        functional = tuple(sum(col) for col in zip(*sigma.inequalities)) if sigma.dim > 1 \
            else sigma.generators[0]
        target = _cone_volume(sigma, basis, functional)
        pieces = [c for c in fine.cones if c.dim == sigma.dim and sigma.contains_cone(c)]
        if sum(_cone_volume(c, basis, functional) for c in pieces) != target:
            return False
    return True


def _independent(gens):
    basis = []
    for g in gens:
        if lattice.rank(basis + [g]) > len(basis):
            basis.append(g)
    return basis

