"""Command line front end: ``slice-lab {slice,catalog,integral,census,project}``.

Exit codes: 0 ok, 1 catalog mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from slice_lab.analytic import sinc_power_bound, sinc_power_integral, slice_volume_quadrature
from slice_lab.catalog import run_catalog
from slice_lab.errors import SliceLabError
from slice_lab.faces import Polygon, classify_polygon, face_census, facets_3d, polytope_verdict
from slice_lab.geometry import MAX_EXACT_DIMENSION, canonicalize_normal, make_slice
from slice_lab.numbers import format_point
from slice_lab.report import build_slice_report, format_table
from slice_lab.zonotope import project_cube

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


def _rational_csv(text: str) -> list[Fraction]:
    try:
        values = [Fraction(part.strip()) for part in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected comma-separated integers or p/q rationals, got {text!r}")
    return values


def _normal_csv(text: str) -> list[Fraction]:
    values = _rational_csv(text)
    if not 2 <= len(values) <= MAX_EXACT_DIMENSION:
        raise argparse.ArgumentTypeError(f"need 2..{MAX_EXACT_DIMENSION} entries, got {len(values)}")
    if not any(values):
        raise argparse.ArgumentTypeError("normal must be nonzero")
    return values


def _tolerance(text: str) -> float:
    try:
        tol = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not 1e-12 <= tol < 1:
        raise argparse.ArgumentTypeError("tolerance must lie in [1e-12, 1)")
    return tol


def _p_value(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if p < 2:
        raise argparse.ArgumentTypeError("p must be >= 2")
    return p


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="slice-lab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("slice", help="full report for one central slice")
    p.add_argument("--normal", type=_normal_csv, required=True)
    p.add_argument("--section", type=_rational_csv, help="levels of t for section areas")
    p.add_argument("--tol", type=_tolerance, default=1e-8)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("catalog", help="run the fixed example catalog")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("integral", help="I_p or the sinc-product slice volume")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--p", type=_p_value)
    group.add_argument("--normal", type=_normal_csv)
    p.add_argument("--tol", type=_tolerance, default=1e-8)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("census", help="facet classes of a 3-dimensional slice")
    p.add_argument("--normal", type=_normal_csv, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("project", help="projection of the cube along a direction")
    p.add_argument("--normal", type=_normal_csv, required=True, help="projection direction")
    p.add_argument("--json", action="store_true")
    return parser


def _emit(payload, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_slice(args) -> int:
    report = build_slice_report(args.normal, args.section, args.tol)
    _emit(report.to_dict(), args.json, format_table(report))
    return EXIT_OK


def cmd_catalog(args) -> int:
    rows = run_catalog()
    lines = [f"{'label':<26} {'normal':<10} {'verdict':<10} {'face':<14} match  predicted"]
    for r in rows:
        lines.append(
            f"{r.label:<26} {','.join(map(str, r.normal)):<10} {r.computed_verdict:<10} "
            f"{r.computed_face_class:<14} {str(r.match).lower():<6} {r.predicted_class}"
        )
    _emit([r.to_dict() for r in rows], args.json, "\n".join(lines))
    return EXIT_OK if all(r.match for r in rows) else EXIT_MISMATCH


def cmd_integral(args) -> int:
    if args.p is not None:
        res = sinc_power_integral(args.p, min(args.tol, 1e-8))
        bound = sinc_power_bound(args.p)
        equal = abs(res.value - bound) <= args.tol + res.error_bound
        payload = {
            "p": args.p,
            "value": res.value,
            "error_bound": res.error_bound,
            "bound": bound,
            "equality": equal,
            "truncation_T": res.truncation_T,
            "panel_count": res.panel_count,
        }
        text = (
            f"{'p':>3} {'I_p':>10} {'error':>9} {'sqrt(2/p)':>10} equality\n"
            f"{args.p:>3} {res.value:>10.7f} {res.error_bound:>9.1e} {bound:>10.4f} {str(equal).lower()}"
        )
    else:
        h = canonicalize_normal(args.normal)
        res = slice_volume_quadrature(h.normal, args.tol)
        payload = {
            "normal": list(h.normal),
            "value": res.value,
            "error_bound": res.error_bound,
            "truncation_T": res.truncation_T,
            "panel_count": res.panel_count,
        }
        text = (
            f"{'normal':<12} {'volume':>12} {'error':>9}\n"
            f"{','.join(map(str, h.normal)):<12} {res.value:>12.8f} {res.error_bound:>9.1e}"
        )
    _emit(payload, args.json, text)
    return EXIT_OK


def cmd_census(args) -> int:
    s = make_slice(args.normal)
    facets = facets_3d(s)
    census = {cls.value: count for cls, count in face_census(s).items()}
    payload = {
        "normal": list(s.normal),
        "facet_count": len(facets),
        "census": census,
        "facets": [
            {"class": classify_polygon(f).value, "vertices": [format_point(v) for v in f.vertices]} for f in facets
        ],
    }
    lines = [f"normal {','.join(map(str, s.normal))}: {len(facets)} facets"]
    lines += [f"  {k:<24} {v}" for k, v in census.items()]
    _emit(payload, args.json, "\n".join(lines))
    return EXIT_OK


def cmd_project(args) -> int:
    direction = args.normal
    proj = project_cube(len(direction), direction)
    dim = len(proj.basis)
    verdict = None
    shape = None
    if dim <= 3:
        verdict = polytope_verdict(list(proj.vertices)).verdict.value
    if dim == 2:
        shape = proj.as_polygon()
    payload = {
        "dimension": proj.dimension,
        "direction": [str(c) for c in proj.direction],
        "chart_dimension": dim,
        "basis": [format_point(b) for b in proj.basis],
        "generator_count": len(proj.generators),
        "vertex_count": len(proj.vertices),
        "vertices": [format_point(v) for v in proj.vertices],
        "zonotope_verdict": verdict,
        "polygon_class": classify_polygon(shape).value if isinstance(shape, Polygon) else None,
    }
    text = (
        f"projection of Q^{proj.dimension} along ({', '.join(map(str, proj.direction))})\n"
        f"  chart dimension {dim}, {len(proj.generators)} generators, {len(proj.vertices)} vertices\n"
        f"  verdict {verdict or 'n/a'}"
    )
    _emit(payload, args.json, text)
    return EXIT_OK


COMMANDS = {
    "slice": cmd_slice,
    "catalog": cmd_catalog,
    "integral": cmd_integral,
    "census": cmd_census,
    "project": cmd_project,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except SliceLabError as exc:
        print(f"slice-lab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
