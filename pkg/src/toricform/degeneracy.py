"""Newton non-degeneracy per face and log-smoothness per chart orbit.

Verdicts are three-valued.  NonDegenerate always carries a certificate and
Degenerate always carries a witness; both re-check themselves against the
polynomials they were issued for.  Certificates are tried cheapest first:
vertex face, monomial coefficient, monomial combination, exact elimination
(at most two free variables), then a seeded numeric witness search.
"""

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import numpy as np

from . import lattice
from .certificates import (CombinationCertificate, MonomialCertificate, NumericWitness,
                           RationalWitness, VertexCertificate)
from .elimination import exact_torus_check
from .errors import InputError
from .forms import restrict
from .polynomial import Polynomial


class Status(str, enum.Enum):
    NON_DEGENERATE = "NonDegenerate"
    DEGENERATE = "Degenerate"
    UNKNOWN = "Unknown"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class SearchConfig:
    tol: float = 1e-10
    floor: float = 1e-10
    trials: int = 64
    steps: int = 50
    seed: int = 0


@dataclass(frozen=True)
class FaceVerdict:
    face: object
    status: Status
    polys: dict = field(repr=False)
    certificate: object = None
    witness: object = None

    def is_sound(self):
        if self.status is Status.NON_DEGENERATE:
            return self.certificate is not None and self.certificate.check(self.polys)
        if self.status is Status.DEGENERATE:
            return self.witness is not None and self.witness.check(self.polys)
        return True


@dataclass(frozen=True)
class OrbitVerdict:
    """Verdict on the orbit {y_k = 0 for k in S, y_k != 0 otherwise} of one chart."""

    chart: object
    S: tuple
    status: Status
    polys: dict = field(repr=False)
    certificate: object = None
    witness: object = None

    @property
    def free(self):
        return tuple(k for k in range(self.chart.n) if k not in self.S)

    def is_sound(self):
        return FaceVerdict.is_sound(self)

    def chart_point(self):
        """The witness as a point of the chart (zeros at S); exact when the witness is rational."""
        if self.witness is None:
            return None
        coords = self.witness.point if isinstance(self.witness, RationalWitness) else self.witness.approx()
        it = iter(coords)
        return tuple(0 if k in self.S else next(it) for k in range(self.chart.n))


def _overall(statuses):
    statuses = list(statuses)
    if all(s is Status.NON_DEGENERATE for s in statuses):
        return Status.NON_DEGENERATE
    if any(s is Status.DEGENERATE for s in statuses):
        return Status.DEGENERATE
    return Status.UNKNOWN


# -- certificates -----------------------------------------------------------

def monomial_certificate(form, face):
    """A coefficient of the initial form on ``face`` that is a single monomial, if any."""
    polys = restrict(form, face.points).coeffs
    return _monomial_certificate(polys)


def _monomial_certificate(polys):
    for idx, p in polys.items():
        if p.is_monomial():
            return MonomialCertificate(idx, p.support()[0])
    return None


def combination_certificate(polys):
    """Rational weights making a combination of the polynomials a single monomial.

    Solves C w = e_mu over Q for each monomial mu, C being the coefficient
    matrix (monomials by polynomials).
    """
    keys = [k for k, p in polys.items() if not p.is_zero()]
    if not keys:
        return None
    monos = sorted({e for k in keys for e in polys[k].support()})
    matrix = [[polys[k].coefficient(mu) for k in keys] for mu in monos]
    for row, mu in enumerate(monos):
        target = [Fraction(int(i == row)) for i in range(len(monos))]
        w = lattice.solve(matrix, target)
        if w is not None:
            weights = tuple((k, Fraction(x)) for k, x in zip(keys, w) if x != 0)
            return CombinationCertificate(weights, mu)
    return None


# -- numeric search ---------------------------------------------------------

class _Compiled:
    """Vectorized evaluation of a polynomial system and its Jacobian."""

    def __init__(self, polys, nvars):
        self.nvars = nvars
        self.parts = []
        for p in polys:
            exps = np.array([e for e, _ in p.items()], dtype=float).reshape(-1, nvars)
            coeffs = np.array([complex(c) for _, c in p.items()])
            self.parts.append((exps, coeffs))

    def values(self, z):
        return np.array([np.sum(c * np.prod(z ** e, axis=1)) for e, c in self.parts])

    def jacobian(self, z):
        rows = []
        for e, c in self.parts:
            mons = c * np.prod(z ** e, axis=1)
            rows.append([np.sum(mons * e[:, j]) / z[j] for j in range(self.nvars)])
        return np.array(rows, dtype=complex)


def numeric_witness_search(polys, trials=64, tol=1e-10, seed=0, steps=50, floor=None, key=0):
    """Damped Newton on random square subsystems from random torus starts.

    Returns a NumericWitness or None; absence of a witness proves nothing.
    """
    floor = tol if floor is None else floor
    polys = [p.strip_monomial() for p in polys if not p.is_zero()]
    if not polys:
        return None
    nvars = polys[0].n
    if any(p.is_constant() for p in polys):
        return None
    if nvars == 0:
        return None
    rng = np.random.default_rng(np.random.SeedSequence([seed, key]))
    full = _Compiled(polys, nvars)
    for _ in range(trials):
        # square system: random complex combinations, or slices when underdetermined
        if len(polys) >= nvars:
            mix = rng.normal(size=(nvars, len(polys))) + 1j * rng.normal(size=(nvars, len(polys)))
            slices = None
        else:
            mix = np.eye(len(polys), dtype=complex)
            k = nvars - len(polys)
            slices = (rng.normal(size=(k, nvars)) + 1j * rng.normal(size=(k, nvars)),
                      rng.normal(size=k) + 1j * rng.normal(size=k))

        def residual_vec(z):
            r = mix @ full.values(z)
            if slices is not None:
                r = np.concatenate([r, slices[0] @ z - slices[1]])
            return r

        def jac(z):
            j = mix @ full.jacobian(z)
            if slices is not None:
                j = np.vstack([j, slices[0]])
            return j

        z = np.exp(rng.normal(size=nvars) * 0.5) * np.exp(2j * np.pi * rng.random(nvars))
        if slices is not None:
            # start on the slice so its equations stay satisfied
            a, b = slices
            z = z + np.linalg.lstsq(a, b - a @ z, rcond=None)[0]
        with np.errstate(all="ignore"):
            for _ in range(steps):
                if np.min(np.abs(z)) < floor or not np.all(np.isfinite(z)):
                    break
                r = residual_vec(z)
                norm = np.linalg.norm(r)
                if norm < tol * 1e-3:
                    break
                step = np.linalg.lstsq(jac(z), -r, rcond=None)[0]
                lam = 1.0
                while lam > 1e-6:
                    cand = z + lam * step
                    if np.all(np.isfinite(cand)) and np.linalg.norm(residual_vec(cand)) < norm:
                        break
                    lam /= 2
                z = cand
            if not np.all(np.isfinite(z)) or np.min(np.abs(z)) <= floor:
                continue
            res = float(np.max(np.abs(full.values(z))))
        if res < tol:
            return NumericWitness(tuple(complex(x) for x in z), res, tol)
    return None


# -- deciding one system ----------------------------------------------------

def decide_system(polys, config=SearchConfig(), key=0, vertex=None):
    """(status, certificate, witness) for torus emptiness of the common zeros of ``polys``.

    ``polys`` is a dict of Polynomials in the free variables.
    """
    if vertex is not None:
        return Status.NON_DEGENERATE, VertexCertificate(vertex), None
    nonzero = {k: p for k, p in polys.items() if not p.is_zero()}
    if not nonzero:
        n = next(iter(polys.values())).n if polys else 0
        return Status.DEGENERATE, None, RationalWitness(tuple(Fraction(1) for _ in range(n)))
    nvars = next(iter(nonzero.values())).n
    cert = _monomial_certificate(nonzero)
    if cert is None:
        cert = combination_certificate(nonzero)
    if cert is not None:
        return Status.NON_DEGENERATE, cert, None
    if nvars <= 2:
        status, cert, witness = exact_torus_check(list(nonzero.values()))
        if status != Status.UNKNOWN.value:
            return Status(status), cert, witness
    witness = numeric_witness_search(list(nonzero.values()), config.trials, config.tol,
                                     config.seed, config.steps, config.floor, key)
    if witness is not None:
        return Status.DEGENERATE, None, witness
    return Status.UNKNOWN, None, None


def nnd_check(form, gamma, config=SearchConfig()):
    """Per-face verdicts on the initial forms and the overall NND verdict."""
    if form.is_zero():
        raise InputError("the form is identically zero")
    verdicts = []
    for i, face in enumerate(gamma.faces()):
        polys = restrict(form, face.points).coeffs
        # faces always contain support points, so some restricted coefficient survives
        assert any(not p.is_zero() for p in polys.values()), face
        vertex = face.points[0] if face.is_vertex else None
        status, cert, witness = decide_system(polys, config, key=i, vertex=vertex)
        verdicts.append(FaceVerdict(face, status, polys, cert, witness))
    return verdicts, _overall(v.status for v in verdicts)


def orbit_subsets(n):
    """All S in {0..n-1}, by size then lexicographically."""
    return [S for size in range(n + 1) for S in combinations(range(n), size)]


def log_smooth_check(pb, config=SearchConfig(), chart_key=0):
    """Verdict on every orbit of the chart; overall NonDegenerate means log-smooth."""
    n = pb.chart.n
    verdicts = []
    for i, S in enumerate(orbit_subsets(n)):
        zero = {k: 0 for k in S}
        polys = {K: f.specialize(zero) for K, f in pb.coeffs.items()}
        status, cert, witness = decide_system(polys, config, key=1000 * chart_key + i)
        verdicts.append(OrbitVerdict(pb.chart, S, status, polys, cert, witness))
    return verdicts, _overall(v.status for v in verdicts)


def transport_witness(verdict):
    """C = c^M for a torus-orbit witness; exact for rational witnesses."""
    if verdict.S or verdict.witness is None:
        return None
    return verdict.chart.point_image(verdict.chart_point())
