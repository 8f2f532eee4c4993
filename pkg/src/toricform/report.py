"""Structured reports: a JSON-ready dict built once, rendered to JSON or text.

All exact numbers are integers or "num/den" strings; floating-point values
(numeric witnesses only) are stored as repr strings.  Keys are sorted on
output so identical inputs and seeds give byte-identical JSON.
"""

import json

from .certificates import RationalWitness, frac_str, poly_json
from .degeneracy import transport_witness
from .forms import restrict, to_standard
from .parser import document_from_form, format_document

SCHEMA = "toricform-report/1"


def _poly(poly, names):
    return {"text": poly.to_string(names), "terms": poly_json(poly)}


def _basis_name(J, names):
    return "^".join("d" + names[j] for j in J)


def _ints(v):
    return [int(x) for x in v]


def _cert(cert):
    return None if cert is None else cert.to_json()


def _witness(w):
    if w is None:
        return None
    out = w.to_json()
    out["certifying"] = bool(w.certifying)
    return out


def input_section(form):
    doc = document_from_form(form)
    names = list(form.names)
    return {
        "variables": names,
        "p": form.p,
        "text": format_document(doc),
        "log_coefficients": {_basis_name(J, names): _poly(f, names)
                             for J, f in form.coeffs.items() if not f.is_zero()},
    }


def polyhedron_section(gamma):
    return {
        "support": [_ints(p) for p in gamma.support],
        "vertices": [_ints(p) for p in gamma.vertices],
        "facets": [{"label": f.label, "normal": _ints(f.normal), "offset": int(f.offset),
                    "compact": all(x > 0 for x in f.normal)} for f in gamma.facets],
    }


def face_section(form, gamma, verdicts):
    names = list(form.names)
    out = []
    for v in verdicts:
        face = v.face
        initial = to_standard(restrict(form, face.points))
        out.append({
            "label": face.label,
            "dim": face.dim,
            "points": [_ints(p) for p in face.points],
            "recession": list(face.recession),
            "facets": [gamma.facets[k].label for k in sorted(face.active_facets)],
            "normal_cone": [_ints(g) for g in gamma.normal_cone(face).key],
            "initial_form": {_basis_name(J, names): _poly(g, names)
                             for J, g in initial.coeffs.items() if not g.is_zero()},
            "status": str(v.status),
            "certificate": _cert(v.certificate),
            "witness": _witness(v.witness),
        })
    return out


def fan_section(fan):
    return {"rays": [_ints(r) for r in fan.rays()],
            "maximal_cones": [[_ints(g) for g in c.key] for c in fan.maximal_cones()]}


def chart_section(res):
    pb = res.pullback
    chart = pb.chart
    ynames = [f"y{i + 1}" for i in range(chart.n)]
    orbits = []
    for o in res.orbits:
        entry = {"zero_coordinates": [ynames[k] for k in o.S], "status": str(o.status),
                 "certificate": _cert(o.certificate), "witness": _witness(o.witness)}
        if isinstance(o.witness, RationalWitness):
            entry["chart_point"] = [frac_str(x) for x in o.chart_point()]
            image = transport_witness(o)
            if image is not None:
                entry["image"] = [frac_str(x) for x in image]
        orbits.append(entry)
    return {
        "index": res.index,
        "generators": [_ints(g) for g in chart.generators],
        "matrix": [_ints(r) for r in chart.matrix],
        "T": _ints(pb.T),
        "A": [ynames[k] for k in sorted(pb.A)],
        "oracle_agrees": res.oracle_ok,
        "adapted": res.adapted,
        "coefficients": {_basis_name(K, ynames): _poly(f, ynames) for K, f in pb.coeffs.items()},
        "orbits": orbits,
        "log_smooth": str(res.log_smooth),
    }


def build_report(command, form, **parts):
    """Assemble the sections that exist for ``command``."""
    report = {"schema": SCHEMA, "command": command, "input": input_section(form)}
    gamma = parts.get("gamma")
    if gamma is not None:
        report["polyhedron"] = polyhedron_section(gamma)
    if "faces" in parts:
        report["faces"] = face_section(form, gamma, parts["faces"])
        report["nnd"] = str(parts["nnd"])
    if "dual_fan" in parts:
        report["fan"] = fan_section(parts["dual_fan"])
        report["triangulated_fan"] = fan_section(parts["triangulated"])
        refined = fan_section(parts["refined"])
        refined["inserted_rays"] = [{"ray": _ints(t["ray"]), "cone": [_ints(g) for g in t["cone"]],
                                     "multiplicity": int(t["multiplicity"]),
                                     "remaining_excess": int(t["excess"])}
                                    for t in parts["trace"]]
        refined["regular"] = parts["refined"].is_regular()
        report["refined_fan"] = refined
    if "charts" in parts:
        report["charts"] = [chart_section(c) for c in parts["charts"]]
    if "oracle" in parts:
        report["oracle"] = parts["oracle"]
    if "summary" in parts:
        report["summary"] = parts["summary"]
    return report


def to_json(report):
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


# -- text rendering ---------------------------------------------------------

def _section(title):
    return f"== {title} =="


def _fmt_point(p):
    return "(" + ", ".join(str(x) for x in p) + ")"


def _fmt_frac_point(p):
    return "(" + ", ".join(s[:-2] if s.endswith("/1") else s for s in p) + ")"


def _fmt_cert(c):
    if c is None:
        return ""
    kind = c["kind"]
    if kind == "monomial":
        return f"monomial coefficient {c['index']} at {_fmt_point(c['exponent'])}"
    if kind == "vertex":
        return "vertex face"
    if kind == "combination":
        return f"combination of coefficients equals the monomial {_fmt_point(c['exponent'])}"
    return f"exact elimination ({c.get('method')})"


def _fmt_witness(w):
    if w is None:
        return ""
    if w["kind"] == "rational":
        return f"witness {_fmt_frac_point(w['point'])}"
    coords = w["approx"] if w["kind"] == "algebraic" else w["point"]
    pts = ", ".join(f"{complex(float(a), float(b)):.6g}" for a, b in coords)
    tag = "algebraic witness" if w["kind"] == "algebraic" else "numeric witness (not a proof)"
    return f"{tag} ~({pts})"


def render_text(report):
    lines = []
    inp = report["input"]
    lines.append(_section("input"))
    lines.extend(inp["text"].rstrip("\n").splitlines())
    lines.append("logarithmic coefficients:")
    for name, poly in inp["log_coefficients"].items():
        lines.append(f"  {name}: {poly['text']}")
    if "polyhedron" in report:
        poly = report["polyhedron"]
        lines.append(_section("newton polyhedron"))
        lines.append("support: " + " ".join(_fmt_point(p) for p in poly["support"]))
        lines.append("vertices: " + " ".join(_fmt_point(p) for p in poly["vertices"]))
        for f in poly["facets"]:
            kind = "compact" if f["compact"] else "non-compact"
            lines.append(f"{f['label']}: normal {_fmt_point(f['normal'])}, offset {f['offset']}, {kind}")
    if "faces" in report:
        lines.append(_section("faces and initial forms"))
        for f in report["faces"]:
            form = " + ".join(f"({p['text']}) {b}" for b, p in f["initial_form"].items())
            lines.append(f"{f['label']} [dim {f['dim']}]: {form}")
            detail = _fmt_cert(f["certificate"]) or _fmt_witness(f["witness"])
            lines.append(f"  {f['status']}" + (f": {detail}" if detail else ""))
        lines.append(_section("non-degeneracy"))
        flagged = [f["label"] for f in report["faces"] if f["status"] != "NonDegenerate"]
        lines.append(f"NND: {report['nnd']}")
        if flagged:
            lines.append("flagged faces: " + ", ".join(flagged))
    if "fan" in report:
        for key, title in (("fan", "dual fan"), ("triangulated_fan", "triangulated fan"),
                           ("refined_fan", "regular refinement")):
            fan = report[key]
            lines.append(_section(title))
            lines.append("rays: " + " ".join(_fmt_point(r) for r in fan["rays"]))
            for c in fan["maximal_cones"]:
                lines.append("cone " + " ".join(_fmt_point(g) for g in c))
        for t in report["refined_fan"]["inserted_rays"]:
            lines.append(f"inserted {_fmt_point(t['ray'])} into cone of multiplicity {t['multiplicity']}")
    for chart in report.get("charts", []):
        lines.append(_section(f"chart {chart['index']}"))
        lines.append("generators: " + " ".join(_fmt_point(g) for g in chart["generators"]))
        lines.append(f"T = {_fmt_point(chart['T'])}, A = {{{', '.join(chart['A'])}}}")
        for name, poly in chart["coefficients"].items():
            lines.append(f"  fbar {name}: {poly['text']}")
        lines.append(f"oracle agrees: {chart['oracle_agrees']}; adapted: {chart['adapted']}; "
                     f"log-smooth: {chart['log_smooth']}")
        for o in chart["orbits"]:
            if o["status"] != "NonDegenerate" or (o["certificate"] or {}).get("kind") not in (
                    "monomial", "vertex"):
                zeros = ", ".join(o["zero_coordinates"]) or "none"
                detail = _fmt_cert(o["certificate"]) or _fmt_witness(o["witness"])
                extra = f" -> {_fmt_frac_point(o['image'])}" if "image" in o else ""
                lines.append(f"  orbit zero at [{zeros}]: {o['status']} {detail}{extra}".rstrip())
    if "oracle" in report:
        lines.append(_section("oracle"))
        for o in report["oracle"]:
            gens = " ".join(_fmt_point(g) for g in o["generators"])
            lines.append(f"chart {o['index']} {gens}: {'equal' if o['equal'] else 'MISMATCH'}")
    if "summary" in report:
        lines.append(_section("summary"))
        for k in sorted(report["summary"]):
            lines.append(f"{k}: {report['summary'][k]}")
    return "\n".join(lines) + "\n"
