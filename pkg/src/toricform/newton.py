"""Newton polyhedra of finite supports, their faces, and the dual fan.

A Newton polyhedron here is conv(support) + R_{>=0}^n.  Only Pareto-minimal
support points matter for its shape, but faces record every support point
lying on them because initial forms need the full exponent subset.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import lattice
from .errors import InputError
from .fan import Cone, Fan


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True)
class Facet:
    normal: tuple
    offset: int
    label: str = ""


@dataclass(frozen=True)
class Face:
    """A non-empty face: its support points, the facets containing it, its dimension.

    ``recession`` lists the coordinate axes along which the face is unbounded.
    """

    points: tuple
    active_facets: frozenset
    dim: int
    recession: tuple = ()
    label: str = field(default="", compare=False)

    @property
    def is_vertex(self):
        return self.dim == 0

    @property
    def is_compact(self):
        return not self.recession


def _affine_dim(points, axes, n):
    if not points:
        return -1
    base = points[0]
    rows = [tuple(a - b for a, b in zip(p, base)) for p in points[1:]]
    rows += [tuple(int(i == ax) for i in range(n)) for ax in axes]
    return lattice.rank(rows) if rows else 0


def _minimal_points(points):
    return [p for p in points
            if not any(q != p and all(a <= b for a, b in zip(q, p)) for q in points)]


def _facet_sort_key(normal):
    s = sum(normal)
    return tuple(-Fraction(x, s) for x in normal)


class NewtonPolyhedron:
    """Newton polyhedron of a finite support in N^n."""

    def __init__(self, support):
        pts = sorted({tuple(int(x) for x in p) for p in support})
        if not pts:
            raise InputError("the support is empty")
        n = len(pts[0])
        if any(len(p) != n for p in pts):
            raise InputError("support points of different lengths")
        if any(x < 0 for p in pts for x in p):
            raise InputError("support points must have nonnegative coordinates")
        self.n = n
        self.support = tuple(pts)
        self.minimal_points = tuple(_minimal_points(pts))
        normals = sorted(self._facet_normals(), key=_facet_sort_key)
        self.facets = tuple(Facet(v, self.min_value(v), f"F{i + 1}") for i, v in enumerate(normals))
        self._faces = None

    def _facet_normals(self):
        n = self.n
        mins = self.minimal_points
        dirs = {tuple(a - b for a, b in zip(p, q)) for p, q in combinations(mins, 2)}
        dirs |= {tuple(int(i == j) for i in range(n)) for j in range(n)}
        dirs = sorted(dirs)
        found = set()
        for chosen in combinations(dirs, n - 1):
            v = lattice.generalized_cross(chosen)
            if not any(v):
                continue
            if all(x <= 0 for x in v):
                v = tuple(-x for x in v)
            elif not all(x >= 0 for x in v):
                continue
            v = lattice.primitive(v)
            if v in found:
                continue
            t = self.min_value(v)
            argmin = [p for p in mins if _dot(v, p) == t]
            axes = [i for i in range(n) if v[i] == 0]
            if _affine_dim(argmin, axes, n) == n - 1:
                found.add(v)
        return found

    def min_value(self, v):
        return min(_dot(v, p) for p in self.support)

    @property
    def vertices(self):
        return [f.points[0] for f in self.faces() if f.dim == 0]

    def contains(self, point):
        return all(_dot(f.normal, point) >= f.offset for f in self.facets)

    # -- faces --------------------------------------------------------------

    def _make_face(self, points, axes):
        points = tuple(sorted(points))
        axes = tuple(sorted(axes))
        active = frozenset(
            k for k, f in enumerate(self.facets)
            if all(_dot(f.normal, p) == f.offset for p in points)
            and all(f.normal[i] == 0 for i in axes))
        dim = _affine_dim(list(points), axes, self.n)
        return Face(points, active, dim, axes)

    def _label(self, face):
        if not face.active_facets:
            return "Gamma"
        if face.dim == 0:
            return "{" + ",".join(str(p) for p in face.points).replace(" ", "") + "}"
        if len(face.active_facets) == 1 and face.dim == self.n - 1:
            return self.facets[next(iter(face.active_facets))].label
        # name a lower-dimensional face by the fewest facets cutting it out
        ks = sorted(face.active_facets)
        for size in range(2, len(ks) + 1):
            for combo in combinations(ks, size):
                pts = [p for p in self.support
                       if all(_dot(self.facets[k].normal, p) == self.facets[k].offset for k in combo)]
                axes = [i for i in range(self.n) if all(self.facets[k].normal[i] == 0 for k in combo)]
                if self._make_face(pts, axes) == face:
                    return "∩".join(self.facets[k].label for k in combo)
        return "∩".join(self.facets[k].label for k in ks)

    def faces(self):
        """All non-empty faces, sorted by dimension then point set."""
        if self._faces is not None:
            return list(self._faces)
        n = self.n
        full = self._make_face(self.support, range(n))
        seen = {(full.points, full.recession): full}
        frontier = [full]
        while frontier:
            nxt = []
            for face in frontier:
                for k, f in enumerate(self.facets):
                    if k in face.active_facets:
                        continue
                    pts = [p for p in face.points if _dot(f.normal, p) == f.offset]
                    if not pts:
                        continue
                    axes = [i for i in face.recession if f.normal[i] == 0]
                    g = self._make_face(pts, axes)
                    key = (g.points, g.recession)
                    if key not in seen:
                        seen[key] = g
                        nxt.append(g)
            frontier = nxt
        faces = sorted(seen.values(), key=lambda f: (f.dim, f.points, f.recession))
        self._faces = tuple(Face(f.points, f.active_facets, f.dim, f.recession, self._label(f))
                            for f in faces)
        return list(self._faces)

    def face_of(self, v):
        """Face where <v, .> attains its minimum over the polyhedron (v >= 0)."""
        v = tuple(v)
        if len(v) != self.n:
            raise InputError(f"vector {v} does not have {self.n} coordinates")
        if any(x < 0 for x in v):
            raise InputError(f"{v} has a negative coordinate; the minimum would be -infinity")
        t = self.min_value(v)
        pts = [p for p in self.support if _dot(v, p) == t]
        axes = [i for i in range(self.n) if v[i] == 0]
        target = self._make_face(pts, axes)
        for f in self.faces():
            if f == target:
                return f
        raise AssertionError(f"face of {v} missing from the face list")  # pragma: no cover

    def face_by_label(self, label):
        for f in self.faces():
            if f.label == label:
                return f
        raise KeyError(label)

    def on_boundary(self, point):
        point = tuple(point)
        if not self.contains(point):
            raise InputError(f"{point} is not in the Newton polyhedron")
        return any(_dot(f.normal, point) == f.offset for f in self.facets)

    def normal_cone(self, face):
        return Cone(sorted(self.facets[k].normal for k in face.active_facets), self.n)

    def dual_fan(self):
        return Fan([self.normal_cone(f) for f in self.faces()], self.n)

    def __repr__(self):
        return f"NewtonPolyhedron(facets={[(f.normal, f.offset) for f in self.facets]})"


def build_polyhedron(support):
    return NewtonPolyhedron(support)


def face_of(gamma, v):
    return gamma.face_of(v)


def faces(gamma):
    return gamma.faces()


def on_boundary(gamma, point):
    return gamma.on_boundary(point)


def dual_fan(gamma):
    return gamma.dual_fan()
