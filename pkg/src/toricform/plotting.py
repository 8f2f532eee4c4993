"""SVG pictures of a planar Newton polygon and its fans.

Works from the report dict so the picture always matches the printed data.
Only two variables are supported.
"""

from fractions import Fraction

import matplotlib
from matplotlib.figure import Figure

from .errors import InputError


def _polygon_outline(vertices, xmax, ymax):
    vs = sorted(vertices)  # increasing x, hence decreasing y along the boundary
    return [(vs[0][0], ymax)] + vs + [(xmax, vs[-1][1]), (xmax, ymax)]


def _facet_anchor(facet, vertices, span):
    """A point on the facet and the unit-ish outward offset for its label."""
    v = facet["normal"]
    on = sorted(p for p in vertices if v[0] * p[0] + v[1] * p[1] == facet["offset"])
    if len(on) >= 2:
        (a, b), (c, d) = on[0], on[-1]
        anchor = ((a + c) / 2, (b + d) / 2)
    elif v == [1, 0]:
        anchor = (on[0][0], on[0][1] + span * 0.35)
    else:
        anchor = (on[0][0] + span * 0.35, on[0][1])
    norm = (v[0] ** 2 + v[1] ** 2) ** 0.5
    return anchor, (-v[0] / norm, -v[1] / norm)


def _draw_polygon(ax, poly):
    support = [tuple(p) for p in poly["support"]]
    vertices = [tuple(p) for p in poly["vertices"]]
    top = max(max(p) for p in support)
    span = top + 2
    xmax = ymax = span
    outline = _polygon_outline(vertices, xmax, ymax)
    ax.fill([p[0] for p in outline], [p[1] for p in outline], color="#cfe3f5", zorder=0)
    boundary = outline[:-1]
    ax.plot([p[0] for p in boundary], [p[1] for p in boundary], color="#1f4e9a", lw=1.6, zorder=1)
    ax.annotate("", xy=(xmax + 0.4, 0), xytext=(0, 0),
                arrowprops=dict(arrowstyle="->", color="black", lw=0.8))
    ax.annotate("", xy=(0, ymax + 0.4), xytext=(0, 0),
                arrowprops=dict(arrowstyle="->", color="black", lw=0.8))
    for p in support:
        on_vertex = p in vertices
        ax.plot([p[0]], [p[1]], "o", color="#b22222" if on_vertex else "#555555", ms=5, zorder=3)
        ax.annotate(f"({p[0]},{p[1]})", p, textcoords="offset points", xytext=(5, 5), fontsize=8)
    for f in poly["facets"]:
        (x, y), (dx, dy) = _facet_anchor(f, vertices, span)
        ax.annotate(f["label"], (x, y), textcoords="offset points",
                    xytext=(14 * dx, 14 * dy), color="#1f4e9a", fontsize=10, ha="center", va="center")
    ax.set_xlim(-0.5, xmax + 0.6)
    ax.set_ylim(-0.5, ymax + 0.6)
    ax.set_aspect("equal")
    ax.set_title("Newton polygon")


def _draw_fan(ax, fan, coarse=None):
    rays = [tuple(r) for r in fan["rays"]]
    reach = max(max(r) for r in rays) if rays else 1
    if coarse is not None:
        for r in coarse["rays"]:
            s = Fraction(reach, max(r))
            ax.plot([0, float(r[0] * s)], [0, float(r[1] * s)], color="#999999", lw=7, alpha=0.45, zorder=1)
    for r in rays:
        s = Fraction(reach, max(r))
        end = (float(r[0] * s), float(r[1] * s))
        ax.annotate("", xy=end, xytext=(0, 0), arrowprops=dict(arrowstyle="->", color="#8b0000", lw=1.2))
        ax.plot([r[0]], [r[1]], "o", color="#8b0000", ms=4)
        ax.annotate(f"({r[0]},{r[1]})", end, textcoords="offset points", xytext=(4, 4), fontsize=8)
    ax.set_xlim(-0.3, reach + 0.8)
    ax.set_ylim(-0.3, reach + 0.8)
    ax.set_aspect("equal")
    ax.set_title("regular refinement (grey: dual fan)" if coarse else "fan")


def emit_svg(report, path):
    """Write the Newton polygon and, if present, the refined fan to an SVG file."""
    if len(report["input"]["variables"]) != 2:
        raise InputError("SVG output is only available for forms in two variables")
    if "polyhedron" not in report:
        raise InputError("the report has no Newton polyhedron to draw")
    with matplotlib.rc_context({"svg.hashsalt": "toricform", "svg.fonttype": "path"}):
        panels = 2 if "refined_fan" in report else 1
        fig = Figure(figsize=(5 * panels, 5))
        axes = fig.subplots(1, panels, squeeze=False)[0]
        _draw_polygon(axes[0], report["polyhedron"])
        if panels == 2:
            _draw_fan(axes[1], report["refined_fan"], report["fan"])
        fig.tight_layout()
        fig.savefig(path, format="svg", metadata={"Date": None})
    return path
