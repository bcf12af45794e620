"""Command-line interface: ``ccm centers``, ``ccm render`` and ``ccm verify``.

Exit codes: 0 on success, 1 on input errors, 2 when some requested center
could not be computed (``centers``) or a suite failed (``verify``).
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from .core import (
    DEFAULT_EPS_REL,
    DegeneracyClass,
    Tolerance,
    circumcenter,
    classify_degeneracy,
)
from .document import CenterReport, CenterResult, GeometryDocument, parse_document
from .errors import GeometryError, ParseError, UnsupportedKindError
from .planar import (
    c_t,
    ccm_closed_form,
    ccm_fan,
    cm_lamina,
    default_base_point,
    euler_line,
    fan_triangles,
    polygon_area,
)
from .polytope import (
    SimplicialBoundary,
    c_t_polytope,
    ccm_polytope,
    monge_point,
    polytope_volume,
)
from .render import render_svg
from .spherical import (
    minkowski_ccm,
    spherical_ccm,
    spherical_ccm_fan,
    spherical_polygon_lamina_cm,
)
from .verify import SUITES, run_suite

EXIT_OK, EXIT_INPUT, EXIT_PARTIAL = 0, 1, 2


def _center(fn, *args) -> CenterResult:
    try:
        return CenterResult.ok(fn(*args))
    except (GeometryError, ValueError) as exc:
        return CenterResult.failed(exc)


def _t_key(t: float) -> str:
    return f"c_t={format(t, '.17g')}"


def _fan_diagnostics(poly, o, tol) -> list[dict]:
    out = []
    for tri in fan_triangles(poly, o):
        cls = classify_degeneracy(tri, tol)
        entry = {"class": cls.name.lower(), "area": float(polygon_area(tri))}
        entry["circumcenter"] = circumcenter(tri, tol).tolist() if cls is DegeneracyClass.NON_DEGENERATE else None
        out.append(entry)
    return out


def _polygon_report(doc, t_values, base_point, eps_rel, fan) -> CenterReport:
    poly = doc.vertices
    tol = Tolerance.for_points(poly, eps_rel)
    report = CenterReport(doc.kind, doc.dim, float(polygon_area(poly)))
    if base_point is None:
        report.centers["ccm"] = _center(ccm_closed_form, poly, tol)
    else:
        report.centers["ccm"] = _center(ccm_fan, poly, base_point, tol)
    report.centers["cm"] = _center(cm_lamina, poly, tol)
    for t in t_values:
        report.centers[_t_key(t)] = _center(c_t, poly, t, tol)
    try:
        line = euler_line(poly, tol)
        report.diagnostics["euler_degenerate"] = line.degenerate
        report.diagnostics["euler_direction"] = None if line.degenerate else line.direction.tolist()
    except GeometryError as exc:
        report.diagnostics["euler_error"] = exc.code
    if fan:
        try:
            o = default_base_point(poly, tol) if base_point is None else base_point
            report.diagnostics["base_point"] = [float(x) for x in o]
            report.diagnostics["fan"] = _fan_diagnostics(poly, o, tol)
        except GeometryError as exc:
            report.diagnostics["fan_error"] = exc.code
    return report


def _polytope_report(doc, t_values, base_point, eps_rel) -> CenterReport:
    p = SimplicialBoundary(doc.vertices, doc.facets)
    tol = p.tolerance(eps_rel)
    report = CenterReport(doc.kind, doc.dim, float(polytope_volume(p)))
    report.centers["ccm"] = _center(ccm_polytope, p, base_point, tol)
    report.centers["cm"] = _center(c_t_polytope, p, 1.0, tol)
    for t in t_values:
        report.centers[_t_key(t)] = _center(c_t_polytope, p, t, tol)
    report.centers["monge"] = _center(monge_point, p, tol)
    return report


def _spherical_report(doc, t_values, base_point, eps_rel) -> CenterReport:
    tol = Tolerance(1e-12, eps_rel)
    report = CenterReport(doc.kind, doc.dim, None)
    try:
        ccm = spherical_ccm(doc.vertices, tol) if base_point is None else spherical_ccm_fan(doc.vertices, base_point, tol)
        report.centers["ccm"] = CenterResult.ok(ccm.direction)
        report.measure = float(ccm.mass)
    except (GeometryError, ValueError) as exc:
        report.centers["ccm"] = CenterResult.failed(exc)
    report.centers["cm"] = _center(lambda v: spherical_polygon_lamina_cm(v, None, tol).direction, doc.vertices)
    for t in t_values:
        report.centers[_t_key(t)] = CenterResult.failed(
            UnsupportedKindError("the center family is only defined for Euclidean shapes"))
    return report


def _hyperboloid_report(doc, t_values, eps_rel) -> CenterReport:
    tol = Tolerance(1e-12, eps_rel)
    report = CenterReport(doc.kind, doc.dim, None)
    try:
        center = minkowski_ccm(doc.vertices, tol)
    except (GeometryError, ValueError) as exc:
        report.centers["ccm"] = CenterResult.failed(exc)
        return report
    report.diagnostics["form"] = float(center.form)
    report.diagnostics["cross_sum"] = center.vector.tolist()
    report.diagnostics["minkowski_class"] = center.kind.value
    if center.point is None:
        report.centers["ccm"] = CenterResult(error=center.kind.value,
                                             message="the cross-product sum is not time-like")
    else:
        report.centers["ccm"] = CenterResult.ok(center.point)
    for t in t_values:
        report.centers[_t_key(t)] = CenterResult.failed(
            UnsupportedKindError("the center family is only defined for Euclidean shapes"))
    return report


def compute_report(doc: GeometryDocument, t_values=(), base_point=None,
                   eps_rel: float = DEFAULT_EPS_REL, fan: bool = False) -> CenterReport:
    """Every requested center of ``doc``, each with a value or an error code."""
    if base_point is not None:
        base_point = np.asarray(base_point, dtype=float)
        if base_point.shape != (doc.dim,):
            raise ParseError(f"base point needs {doc.dim} coordinates")
    if doc.kind == "polygon":
        return _polygon_report(doc, t_values, base_point, eps_rel, fan)
    if doc.kind == "polytope":
        return _polytope_report(doc, t_values, base_point, eps_rel)
    if doc.kind == "spherical_polygon":
        return _spherical_report(doc, t_values, base_point, eps_rel)
    return _hyperboloid_report(doc, t_values, eps_rel)


# ---------------------------------------------------------------------------
# argument handling

def _base_point(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ccm", description="Circumcenters of mass and related centers.")
    sub = parser.add_subparsers(dest="command", required=True)

    def geometry_args(p):
        p.add_argument("input", nargs="?", default="-", help="geometry JSON file (default: stdin)")
        p.add_argument("--base-point", type=_base_point, help="apex O of the triangulation, as x,y[,z...]")
        p.add_argument("--eps-rel", type=_positive_float,
                       help=f"relative tolerance (default: $CCM_EPS_REL or {DEFAULT_EPS_REL:g})")
        p.add_argument("--fan", action="store_true", help="include the fan triangulation")
        p.add_argument("--euler", action="store_true", help="draw the Euler line (SVG)")

    centers = sub.add_parser("centers", help="compute centers and print a JSON report")
    geometry_args(centers)
    centers.add_argument("--t", type=float, action="append", default=[], dest="t_values",
                         help="also report C_t = t CM + (1 - t) CCM; repeatable")
    centers.add_argument("--format", choices=("json", "svg"), default="json")

    render = sub.add_parser("render", help="draw a polygon and its centers as SVG")
    geometry_args(render)

    verify = sub.add_parser("verify", help="run a randomized verification suite")
    verify.add_argument("suite", help=f"one of: {', '.join(SUITES)}")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--cases", type=int, default=100)
    return parser


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _eps_rel(args) -> float:
    if args.eps_rel is not None:
        return args.eps_rel
    env = os.environ.get("CCM_EPS_REL")
    if env is None:
        return DEFAULT_EPS_REL
    try:
        value = float(env)
    except ValueError:
        raise ParseError(f"CCM_EPS_REL is not a number: {env!r}") from None
    if not value > 0:
        raise ParseError("CCM_EPS_REL must be positive")
    return value


def _svg(doc, args, eps_rel) -> str:
    if doc.kind != "polygon":
        raise UnsupportedKindError(f"SVG output supports polygons only, not {doc.kind}")
    return render_svg(doc.vertices, fan=args.fan, euler=args.euler, base_point=args.base_point,
                      tol=Tolerance.for_points(doc.vertices, eps_rel))


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "verify":
            result = run_suite(args.suite, args.seed, args.cases)
            for line in result.failures:
                print(line, file=sys.stderr)
            for line in result.expected_errors:
                print(f"expected error: {line}", file=sys.stderr)
            out.write(result.summary() + "\n")
            return EXIT_OK if result.passed else EXIT_PARTIAL

        eps_rel = _eps_rel(args)
        doc = parse_document(_read_input(args.input))
        if args.command == "render" or args.format == "svg":
            out.write(_svg(doc, args, eps_rel))
            return EXIT_OK
        report = compute_report(doc, args.t_values, args.base_point, eps_rel, args.fan)
    except (ParseError, UnsupportedKindError) as exc:
        print(f"ccm: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GeometryError as exc:
        # malformed geometry, such as a facet list that is not a closed boundary
        print(f"ccm: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    out.write(report.to_json())
    for name, center in report.centers.items():
        if center.error is not None:
            print(f"ccm: {name}: {center.error}: {center.message}", file=sys.stderr)
    return EXIT_PARTIAL if report.partial else EXIT_OK


__all__ = ["build_parser", "compute_report", "main"]
