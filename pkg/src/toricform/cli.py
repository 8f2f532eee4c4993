"""Command line interface.

Exit codes: 0 success, 1 negative finding under an --expect flag, 2 input
error, 3 internal contradiction (a result the theory rules out).
"""

import argparse
import sys

from .degeneracy import SearchConfig, Status
from .errors import InputError, TheoremViolation
from .parser import load_form
from .pipeline import analyze, refine, theorem_pipeline
from .pullback import charts, verify_against_oracle
from .report import build_report, render_text, to_json

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_VIOLATION = 0, 1, 2, 3


def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="path to a .form file ('-' reads stdin)")
    common.add_argument("--json", metavar="PATH", help="write the machine-readable report here")
    common.add_argument("--svg", metavar="PATH", help="write a picture here (two variables only)")
    common.add_argument("--tol", type=float, default=1e-10, help="numeric residual tolerance")
    common.add_argument("--trials", type=int, default=64, help="random starts per numeric search")
    common.add_argument("--seed", type=int, default=0, help="seed for every random choice")
    common.add_argument("--chart", type=int, metavar="INDEX", help="only this maximal cone")

    ap = argparse.ArgumentParser(prog="toricform",
                                 description="Toric reduction of logarithmic p-forms.")
    sub = ap.add_subparsers(dest="command", required=True)
    a = sub.add_parser("analyze", parents=[common], help="Newton polyhedron, faces, NND report")
    a.add_argument("--expect-nnd", action="store_true", help="exit 1 unless the form is NND")
    sub.add_parser("fan", parents=[common], help="dual fan and its regular refinement")
    r = sub.add_parser("reduce", parents=[common], help="full chart-by-chart reduction")
    r.add_argument("--expect-nnd", action="store_true", help="exit 1 unless the form is NND")
    r.add_argument("--expect-log-smooth", action="store_true",
                   help="exit 1 unless every chart is log-smooth")
    sub.add_parser("oracle", parents=[common], help="compare pull-back formula with substitution")
    return ap


def _read(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _selected(all_charts, index):
    if index is None:
        return list(enumerate(all_charts))
    if not 0 <= index < len(all_charts):
        raise InputError(f"chart index {index} out of range 0..{len(all_charts) - 1}")
    return [(index, all_charts[index])]


def _run(args, out):
    form = load_form(_read(args.file))
    if form.is_zero():
        raise InputError("the form is identically zero")
    config = SearchConfig(tol=args.tol, floor=args.tol, trials=args.trials, seed=args.seed)
    code = EXIT_OK

    if args.command == "analyze":
        gamma, faces, nnd = analyze(form, config)
        report = build_report("analyze", form, gamma=gamma, faces=faces, nnd=nnd)
        if args.expect_nnd and nnd is not Status.NON_DEGENERATE:
            code = EXIT_NEGATIVE
    elif args.command == "fan":
        gamma, _, _ = analyze(form, SearchConfig(trials=0))
        dual, tri, refined, trace = refine(gamma)
        report = build_report("fan", form, gamma=gamma, dual_fan=dual, triangulated=tri,
                              refined=refined, trace=trace)
    elif args.command == "reduce":
        res = theorem_pipeline(form, config, args.chart)
        summary = {"nnd": str(res.nnd), "charts": len(res.charts),
                   "all_adapted": res.all_adapted, "log_smooth": str(res.log_smooth)}
        report = build_report("reduce", form, gamma=res.gamma, faces=res.faces, nnd=res.nnd,
                              dual_fan=res.dual_fan, triangulated=res.triangulated,
                              refined=res.refined, trace=res.refinement_trace,
                              charts=res.charts, summary=summary)
        if args.expect_nnd and res.nnd is not Status.NON_DEGENERATE:
            code = EXIT_NEGATIVE
        if args.expect_log_smooth and res.log_smooth is not Status.NON_DEGENERATE:
            code = EXIT_NEGATIVE
    else:
        gamma, _, _ = analyze(form, SearchConfig(trials=0))
        _, _, refined, _ = refine(gamma)
        rows = [{"index": i, "generators": [list(g) for g in c.generators],
                 "equal": verify_against_oracle(form, c, gamma)}
                for i, c in _selected(charts(refined), args.chart)]
        report = build_report("oracle", form, gamma=gamma, oracle=rows)
        if not all(r["equal"] for r in rows):
            code = EXIT_VIOLATION

    out.write(render_text(report))
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(to_json(report))
    if args.svg:
        from .plotting import emit_svg
        try:
            emit_svg(report, args.svg)
        except InputError as exc:
            print(f"toricform: no SVG written: {exc}", file=sys.stderr)
    return code


def main(argv=None, out=None):
    out = out or sys.stdout
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return _run(args, out)
    except TheoremViolation as exc:
        print(f"toricform: theorem violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except InputError as exc:
        print(f"toricform: {exc}", file=sys.stderr)
        return EXIT_INPUT


run_cli = main


if __name__ == "__main__":
    sys.exit(main())
