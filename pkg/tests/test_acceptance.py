"""Acceptance criteria 1-8; the summary prints one PASS/FAIL line for each."""

import io
import random
from fractions import Fraction
from math import comb

import pytest

from helpers import (EXAMPLE12, EXAMPLE13, eta, make_rng, omega, random_form, random_support,
                     random_unimodular_nonnegative)
from toricform import lattice
from toricform.cli import main
from toricform.degeneracy import Status, log_smooth_check, nnd_check, transport_witness
from toricform.fan import is_refinement, regularize, triangulate
from toricform.forms import restrict, support, to_standard
from toricform.newton import NewtonPolyhedron, face_of, faces, on_boundary
from toricform.parser import parse_form, to_standard_form
from toricform.pipeline import refine
from toricform.pullback import chart_from_matrix, charts, check_adapted, pull_back, verify_against_oracle


def initial_form(form, face):
    return to_standard(restrict(form, face.points))


def expected_form(names, body):
    return to_standard_form(parse_form(f"vars: {names}\nform: {body}\n"))


def regular_charts(form):
    gamma = NewtonPolyhedron(support(form))
    return gamma, charts(refine(gamma)[2])


@pytest.mark.criterion(1, "plane example: faces, initial forms, NND verdict and exact witness")
def test_criterion_1_plane_example():
    form = eta()
    assert set(support(form)) == {(3, 0), (2, 1), (0, 3), (1, 1)}
    g = NewtonPolyhedron(support(form))
    labels = [f.label for f in faces(g)]
    assert labels == ["{(0,3)}", "{(1,1)}", "{(3,0)}", "F1", "F2", "F3", "F4", "Gamma"]
    expected = {
        "{(0,3)}": "y^2 dy", "{(1,1)}": "x dy", "{(3,0)}": "2*x^2 dx",
        "F1": "y^2 dy", "F2": "(y^2 + x) dy", "F3": "2*x^2 dx + x dy", "F4": "2*x^2 dx",
        "Gamma": EXAMPLE12.split("form:")[1].strip(),
    }
    for f in faces(g):
        assert initial_form(form, f) == expected_form("x y", expected[f.label]), f.label
    verdicts, overall = nnd_check(form, g)
    assert overall is Status.DEGENERATE
    assert {v.face.label for v in verdicts if v.status is Status.DEGENERATE} == {"F2", "Gamma"}
    gamma = next(v for v in verdicts if v.face.label == "Gamma")
    assert gamma.witness.certifying and gamma.witness.point == (Fraction(-1, 5), Fraction(2, 5))
    assert all(v.is_sound() for v in verdicts)


@pytest.mark.criterion(2, "space example: boundary, edge and facet initial forms, certified NND")
def test_criterion_2_space_example():
    form = omega()
    assert set(support(form)) == {(1, 1, 6), (2, 2, 0), (2, 0, 2), (6, 1, 1), (4, 2, 2), (0, 2, 2)}
    g = NewtonPolyhedron(support(form))
    assert not on_boundary(g, (4, 2, 2)) and g.contains((4, 2, 2))
    # faces are identified by normals: the compact facet has normal (1,1,1),
    # the facet carrying the x = 0 locus has normal (0,1,1)
    edge = face_of(g, (1, 2, 2))
    assert edge.is_compact and edge.dim == 1
    assert initial_form(form, edge) == expected_form("x y z", "x*y dx^dy + x*z dx^dz")
    facet = face_of(g, (0, 1, 1))
    assert facet.dim == 2 and (4, 2, 2) not in facet.points
    polys = list(initial_form(form, facet).coeffs.values())
    assert initial_form(form, facet) == expected_form("x y z", "x*y dx^dy + x*z dx^dz + x^6 dy^dz")
    rng = random.Random(2024)
    for _ in range(20):
        y, z = (Fraction(rng.randint(-20, 20), rng.randint(1, 7)) for _ in range(2))
        assert all(p.evaluate((0, y, z)) == 0 for p in polys)
    for _ in range(20):
        pt = tuple(Fraction(rng.choice([-1, 1]) * rng.randint(1, 20), rng.randint(1, 7)) for _ in range(3))
        assert any(p.evaluate(pt) != 0 for p in polys)
    edges = [f for f in faces(g) if f.dim == 1]
    assert sum(not f.is_compact for f in edges) == 6
    assert all(initial_form(form, f).coeffs and len([c for c in initial_form(form, f).coeffs.values()
                                                     if not c.is_zero()]) == 1
               for f in edges if not f.is_compact)
    verdicts, overall = nnd_check(form, g)
    assert overall is Status.NON_DEGENERATE
    assert len(verdicts) == len(faces(g))
    assert all(v.status is Status.NON_DEGENERATE and v.certificate.check(v.polys) for v in verdicts)


@pytest.mark.criterion(3, "every chart of the regular refinement is adapted (examples + 50 random forms)")
def test_criterion_3_adaptedness():
    rng = make_rng(3)
    forms = [eta(), omega()] + [random_form(rng, n=rng.choice([2, 3]), max_terms=6) for _ in range(50)]
    assert {f.p for f in forms[2:]} == {1, 2}
    for form in forms:
        gamma, chs = regular_charts(form)
        assert chs
        for ch in chs:
            check_adapted(pull_back(form, ch, gamma))


@pytest.mark.criterion(4, "log-smoothness: certified on the space example, singular point on the plane one")
def test_criterion_4_log_smoothness():
    gamma, chs = regular_charts(omega())
    for ch in chs:
        verdicts, overall = log_smooth_check(pull_back(omega(), ch, gamma))
        assert overall is Status.NON_DEGENERATE
        assert all(v.status is Status.NON_DEGENERATE and v.certificate.check(v.polys) for v in verdicts)
    gamma, chs = regular_charts(eta())
    images = []
    for i, ch in enumerate(chs):
        verdicts, _ = log_smooth_check(pull_back(eta(), ch, gamma), chart_key=i)
        for v in verdicts:
            if v.status is Status.DEGENERATE and v.witness.certifying and v.witness.check(v.polys):
                images.append(transport_witness(v))
    assert (Fraction(-1, 5), Fraction(2, 5)) in images


@pytest.mark.criterion(5, "pull-back formula equals substitution (example charts + 100 random pairs)")
def test_criterion_5_oracle():
    for form in (eta(), omega()):
        gamma, chs = regular_charts(form)
        assert all(verify_against_oracle(form, ch, gamma) for ch in chs)
    rng = make_rng(5)
    for _ in range(100):
        n = rng.choice([2, 3, 4])
        form = random_form(rng, n=n)
        assert verify_against_oracle(form, chart_from_matrix(random_unimodular_nonnegative(rng, n)))


@pytest.mark.criterion(6, "exterior powers: determinant identity and functoriality on 200 matrices")
def test_criterion_6_exterior_powers():
    rng = make_rng(6)
    for _ in range(200):
        n = rng.randint(1, 4)
        a = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        b = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        for p in range(1, n + 1):
            ap = lattice.exterior_power(a, p)
            assert abs(lattice.det(ap)) == abs(lattice.det(a)) ** comb(n - 1, p - 1)
            assert lattice.exterior_power(lattice.matmul(a, b), p) == \
                lattice.matmul(ap, lattice.exterior_power(b, p))


def _probe(fine, coarse, rng, count=100):
    n = coarse.ambient
    for _ in range(count):
        w = tuple(Fraction(rng.randint(-3, 9), rng.randint(1, 5)) for _ in range(n))
        assert fine.support_contains(w) == coarse.support_contains(w), w


@pytest.mark.criterion(7, "regularization: regular, a refinement, support preserved, (1,1) inserted")
def test_criterion_7_regularization():
    rng = make_rng(7)
    supports = [support(eta()), support(omega())]
    supports += [random_support(rng, rng.choice([2, 3]), max_points=8) for _ in range(20)]
    for i, pts in enumerate(supports):
        fan = NewtonPolyhedron(pts).dual_fan()
        trace = []
        reg = regularize(triangulate(fan), trace)
        assert all(c.is_smooth() for c in reg.maximal_cones())
        assert is_refinement(reg, fan)
        _probe(reg, fan, rng)
        if i == 0:
            assert [t["ray"] for t in trace] == [(1, 1)]


@pytest.mark.criterion(8, "two reduce runs with the same seed give byte-identical JSON")
def test_criterion_8_determinism(tmp_path):
    for name, text in (("plane", EXAMPLE12), ("space", EXAMPLE13)):
        src = tmp_path / f"{name}.form"
        src.write_text(text)
        outputs = []
        for run in range(2):
            target = tmp_path / f"{name}{run}.json"
            assert main(["reduce", str(src), "--seed", "11", "--json", str(target)], io.StringIO()) == 0
            outputs.append(target.read_bytes())
        assert outputs[0] == outputs[1]
