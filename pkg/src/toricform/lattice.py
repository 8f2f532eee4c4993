"""Exact integer and rational linear algebra on the lattice Z^n.

Matrices are tuples of row tuples.  Nothing here touches floating point:
determinants of refinement generators can grow, and every downstream
theorem check relies on these values being exact.
"""

from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import gcd

from .errors import InputError


def as_matrix(rows):
    m = tuple(tuple(r) for r in rows)
    if m and any(len(r) != len(m[0]) for r in m):
        raise InputError("ragged matrix")
    return m


def identity(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(m):
    return tuple(zip(*m)) if m else ()


def matmul(a, b):
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def from_columns(columns):
    """Matrix whose k-th column is ``columns[k]``."""
    return transpose(as_matrix(columns))


def det(m):
    """Exact determinant.

    Integer matrices go through Bareiss fraction-free elimination so every
    intermediate stays an integer; anything else falls back to Fraction
    Gaussian elimination.
    """
    m = as_matrix(m)
    n = len(m)
    if any(len(r) != n for r in m):
        raise InputError("determinant of a non-square matrix")
    if n == 0:
        return 1
    if all(isinstance(x, int) for r in m for x in r):
        return _bareiss(m)
    a = [[Fraction(x) for x in r] for r in m]
    sign = 1
    result = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            sign = -sign
        result *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return sign * result


def _bareiss(m):
    a = [list(r) for r in m]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def subsets(n, p):
    """All p-subsets of {0, ..., n-1} as sorted tuples, in lexicographic order."""
    return list(combinations(range(n), p))


def _check_subset(idx, n):
    if list(idx) != sorted(set(idx)) or any(i < 0 or i >= n for i in idx):
        raise InputError(f"invalid index subset {tuple(idx)} for dimension {n}")


def minor(m, rows, cols):
    """Determinant of the submatrix with the given (0-based) rows and columns."""
    m = as_matrix(m)
    rows, cols = tuple(rows), tuple(cols)
    if len(rows) != len(cols):
        raise InputError("minor needs as many rows as columns")
    _check_subset(rows, len(m))
    _check_subset(cols, len(m[0]) if m else 0)
    return det([[m[r][c] for c in cols] for r in rows])


def exterior_power(m, p):
    """Matrix of the p-th exterior power in the lexicographic basis of p-subsets.

    Entry (s, l) is the minor with rows J_s and columns J_l.
    """
    m = as_matrix(m)
    n = len(m)
    if not 1 <= p <= n:
        raise InputError(f"exterior power degree {p} outside 1..{n}")
    js = subsets(n, p)
    return tuple(tuple(minor(m, r, c) for c in js) for r in js)


def primitive(v):
    """Divide a nonzero integer vector by the gcd of its coordinates."""
    v = tuple(int(x) for x in v)
    g = reduce(gcd, v, 0)
    if g == 0:
        raise InputError("the zero vector has no primitive generator")
    return tuple(x // g for x in v)


def is_primitive(v):
    return reduce(gcd, (int(x) for x in v), 0) == 1


def determinantal_divisor(rows, k):
    """gcd of all k x k minors of an integer matrix (0 if every minor vanishes)."""
    rows = as_matrix(rows)
    if k == 0:
        return 1
    ncols = len(rows[0])
    return reduce(gcd, (abs(minor(rows, r, c))
                        for r in combinations(range(len(rows)), k)
                        for c in combinations(range(ncols), k)), 0)


def elementary_divisors(rows):
    """Nonzero invariant factors of an integer matrix, smallest first.

    Uses d_k / d_{k-1} with d_k the k-th determinantal divisor; fine for the
    handful of rows that describe one cone.
    """
    rows = as_matrix(rows)
    if not rows:
        return []
    out = []
    prev = 1
    for k in range(1, min(len(rows), len(rows[0])) + 1):
        d = determinantal_divisor(rows, k)
        if d == 0:
            break
        out.append(d // prev)
        prev = d
    return out


def multiplicity(generators):
    """Index of the sublattice spanned by independent generators in its saturation."""
    gens = as_matrix(generators)
    if not gens:
        return 1
    d = determinantal_divisor(gens, len(gens))
    if d == 0:
        raise InputError("generators are linearly dependent")
    return d


def is_smooth(generators):
    """True iff the generators extend to a Z-basis of Z^n."""
    gens = as_matrix(generators)
    for g in gens:
        if not is_primitive(g):
            raise InputError(f"generator {g} is not primitive")
    return multiplicity(gens) == 1


# -- rational linear algebra -------------------------------------------------

def rref(rows):
    """Reduced row echelon form over Q; returns (matrix, pivot columns)."""
    a = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    if not a:
        return a, pivots
    ncols = len(a[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a, pivots


def rank(rows):
    rows = list(rows)
    if not rows:
        return 0
    return len(rref(rows)[1])


def solve(a, b):
    """An exact solution x of a x = b, free variables set to zero.

    Returns None when b is not in the column space.
    """
    a = as_matrix(a)
    n = len(a[0])
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    red, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = red[i][n]
    return x


def nullspace(rows, ncols=None):
    """Basis of {x : rows x = 0} over Q."""
    rows = [list(r) for r in rows]
    if ncols is None:
        ncols = len(rows[0])
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for i, c in enumerate(pivots):
            x[c] = -red[i][f]
        basis.append(x)
    return basis


def clear_denominators(v):
    """Smallest positive integer multiple of a rational vector, made primitive."""
    v = [Fraction(x) for x in v]
    den = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in v), 1)
    return primitive(int(x * den) for x in v)


def generalized_cross(vectors):
    """Integer vector orthogonal to n-1 vectors in R^n (signed cofactors).

    Zero exactly when the vectors are dependent.
    """
    vectors = as_matrix(vectors)
    n = len(vectors) + 1
    out = []
    for i in range(n):
        sub = [[row[j] for j in range(n) if j != i] for row in vectors]
        out.append((-1) ** i * det(sub))
    return tuple(out)
