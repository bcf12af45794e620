"""Deterministic SVG figures of a polygon and its centers."""

from __future__ import annotations

import numpy as np

from .core import DegeneracyClass, Tolerance, circumcenter, classify_degeneracy
from .errors import GeometryError
from .planar import (
    as_polygon,
    ccm_closed_form,
    cm_lamina,
    default_base_point,
    euler_line,
    fan_triangles,
)

PALETTE = {
    "outline": "#1f2933",
    "fan": "#9aa5b1",
    "circumcenter": "#7b8794",
    "ccm": "#d64545",
    "cm": "#2d6cdf",
    "euler": "#3ebd93",
    "base": "#616e7c",
}

# Euler segment drawn for these parameter values of C_t
EULER_RANGE = (-0.5, 3.5)


def _fmt(x: float) -> str:
    text = f"{x:.6f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def _pt(p) -> str:
    # flip y so that the figure has the usual orientation
    return f"{_fmt(p[0])},{_fmt(-p[1])}"


def _path(points, cls, color, width) -> str:
    d = "M " + " L ".join(_pt(p) for p in points) + " Z"
    return f'<path class="{cls}" d="{d}" fill="none" stroke="{color}" stroke-width="{_fmt(width)}"/>'


def _marker(p, cls, color, r) -> str:
    return f'<circle class="{cls}" cx="{_fmt(p[0])}" cy="{_fmt(-p[1])}" r="{_fmt(r)}" fill="{color}"/>'


def render_svg(p, *, fan: bool = False, euler: bool = False, base_point=None,
               tol: Tolerance | None = None, size: int = 600) -> str:
    """SVG of the polygon outline with its circumcenter of mass and centroid.

    Parameters
    ----------
    fan : bool
        Draw the triangles from the base point and their circumcenters.
    euler : bool
        Draw the Euler line segment through CCM and CM.
    base_point : array_like, optional
        Apex of the fan; chosen automatically when omitted.

    Centers that cannot be computed (zero area, say) are left out and
    listed in an XML comment.
    """
    poly = as_polygon(p)
    tol = tol or Tolerance.for_points(poly)
    lo, hi = poly.min(axis=0), poly.max(axis=0)
    extent = max(float(np.max(hi - lo)), 1e-12)
    stroke = extent / 300
    dot = extent / 120

    body, notes, extra = [], [], []
    body.append(_path(poly, "polygon", PALETTE["outline"], 2 * stroke))
    if fan:
        o = None
        try:
            o = default_base_point(poly, tol) if base_point is None else np.asarray(base_point, float)
        except GeometryError as exc:
            notes.append(f"fan: {exc.code}")
        if o is not None:
            extra.append(o)
            tris = fan_triangles(poly, o)
            for tri in tris:
                body.append(_path(tri, "fan-triangle", PALETTE["fan"], stroke))
            for tri in tris:
                if classify_degeneracy(tri, tol) is DegeneracyClass.NON_DEGENERATE:
                    cc = circumcenter(tri, tol)
                    extra.append(cc)
                    body.append(_marker(cc, "circumcenter", PALETTE["circumcenter"], 0.6 * dot))
            body.append(_marker(o, "base-point", PALETTE["base"], 0.8 * dot))
    centers = {}
    for name, fn in (("ccm", ccm_closed_form), ("cm", cm_lamina)):
        try:
            centers[name] = fn(poly, tol)
        except GeometryError as exc:
            notes.append(f"{name}: {exc.code}")
    if euler and len(centers) == 2:
        line = euler_line(poly, tol)
        if line.degenerate:
            notes.append("euler: degenerate")
        else:
            a, b = (line.point(t) for t in EULER_RANGE)
            extra.extend([a, b])
            body.append(f'<line class="euler-line" x1="{_fmt(a[0])}" y1="{_fmt(-a[1])}" '
                        f'x2="{_fmt(b[0])}" y2="{_fmt(-b[1])}" stroke="{PALETTE["euler"]}" '
                        f'stroke-width="{_fmt(stroke)}"/>')
    for name, c in centers.items():
        extra.append(c)
        body.append(_marker(c, name, PALETTE[name], dot))

    # fit the view to everything drawn
    pts = np.vstack([poly, *[np.atleast_2d(e) for e in extra]])
    lo, hi = pts.min(axis=0), pts.max(axis=0)
    span = np.maximum(hi - lo, 1e-12)
    lo, span = lo - 0.05 * span, 1.1 * span
    view = f"{_fmt(lo[0])} {_fmt(-(lo[1] + span[1]))} {_fmt(span[0])} {_fmt(span[1])}"
    height = max(1, round(size * span[1] / span[0]))
    head = [f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{view}" width="{size}" height="{height}">']
    head += [f"<!-- {n} -->" for n in notes]
    return "\n".join(head + body + ["</svg>"]) + "\n"


__all__ = ["PALETTE", "render_svg"]
