"""End-to-end reduction of a logarithmic form to normal crossings.

support -> Newton polyhedron -> dual fan -> triangulation -> regular
refinement -> per chart: pull-back, oracle comparison, adaptedness and
log-smoothness; plus the non-degeneracy report on the input.
"""

from dataclasses import dataclass, field

from .degeneracy import SearchConfig, Status, log_smooth_check, nnd_check
from .errors import InputError, TheoremViolation
from .fan import regularize, triangulate
from .forms import support
from .newton import NewtonPolyhedron
from .pullback import charts, check_adapted, pull_back, verify_against_oracle


@dataclass
class ChartResult:
    index: int
    pullback: object
    oracle_ok: bool
    adapted: bool
    quotients: dict
    orbits: list
    log_smooth: Status


@dataclass
class PipelineResult:
    form: object
    gamma: NewtonPolyhedron
    faces: list
    nnd: Status
    dual_fan: object
    triangulated: object
    refined: object
    refinement_trace: list
    charts: list = field(default_factory=list)

    @property
    def all_adapted(self):
        return all(c.adapted for c in self.charts)

    @property
    def log_smooth(self):
        statuses = [c.log_smooth for c in self.charts]
        if all(s is Status.NON_DEGENERATE for s in statuses):
            return Status.NON_DEGENERATE
        if any(s is Status.DEGENERATE for s in statuses):
            return Status.DEGENERATE
        return Status.UNKNOWN


def analyze(form, config=SearchConfig()):
    if form.is_zero():
        raise InputError("the form is identically zero")
    gamma = NewtonPolyhedron(support(form))
    faces, nnd = nnd_check(form, gamma, config)
    return gamma, faces, nnd


def refine(gamma):
    dual = gamma.dual_fan()
    tri = triangulate(dual)
    trace = []
    refined = regularize(tri, trace)
    return dual, tri, refined, trace


def chart_result(form, chart, gamma, index, config=SearchConfig()):
    pb = pull_back(form, chart, gamma)
    oracle_ok = verify_against_oracle(form, chart, gamma)
    quotients = check_adapted(pb)
    orbits, smooth = log_smooth_check(pb, config, chart_key=index)
    return ChartResult(index, pb, oracle_ok, True, quotients, orbits, smooth)


def theorem_pipeline(form, config=SearchConfig(), chart_index=None):
    """Run every stage; raises TheoremViolation when an outcome contradicts the theory."""
    gamma, faces, nnd = analyze(form, config)
    dual, tri, refined, trace = refine(gamma)
    result = PipelineResult(form, gamma, faces, nnd, dual, tri, refined, trace)
    all_charts = charts(refined)
    if chart_index is not None and not 0 <= chart_index < len(all_charts):
        raise InputError(f"chart index {chart_index} out of range 0..{len(all_charts) - 1}")
    for i, chart in enumerate(all_charts):
        if chart_index is not None and i != chart_index:
            continue
        res = chart_result(form, chart, gamma, i, config)
        if not res.oracle_ok:
            raise TheoremViolation(f"pull-back formula disagrees with substitution on chart {i}")
        if nnd is Status.NON_DEGENERATE and res.log_smooth is Status.DEGENERATE:
            raise TheoremViolation(
                f"form is non-degenerate but chart {i} has a singular orbit")
        result.charts.append(res)
    return result
