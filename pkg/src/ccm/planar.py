"""Centers of planar polygons: circumcenter of mass, lamina centroid and
the generalized Euler line through them.

Polygons are ``(n, 2)`` arrays of vertices in cyclic order; they may be
non-convex or self-intersecting.  Only a non-vanishing signed area is
required by the center-producing functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    DegeneracyClass,
    Tolerance,
    WeightedPoint,
    as_points,
    as_vec,
    circumcenter,
    circumradius,
    classify_degeneracy,
    combine,
    cross2,
    diameter,
    resolve_tolerance,
    signed_area,
)
from .errors import (
    DangerousTriangulationError,
    DegenerateError,
    InvalidCutError,
    ParallelBisectorsError,
    ZeroAreaError,
    ZeroAreaPieceError,
)

# automatic base points are rejected when a fan triangle has a circumradius
# beyond this multiple of the polygon diameter
_FAN_RADIUS_LIMIT = 1e3
_FAN_RETRIES = 8


def as_polygon(vertices) -> np.ndarray:
    poly = as_points(vertices, dim=2, name="polygon")
    if len(poly) < 3:
        raise ValueError("a polygon needs at least three vertices")
    if np.any(np.all(poly == np.roll(poly, -1, axis=0), axis=1)):
        raise ValueError("consecutive polygon vertices must be distinct")
    return poly


def polygon_area(p) -> float:
    """Signed (shoelace) area; positive for counterclockwise order."""
    poly = as_polygon(p)
    x, y = poly[:, 0], poly[:, 1]
    return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))


def _checked(p, tol):
    poly = as_polygon(p)
    tol = resolve_tolerance(tol, poly)
    area = polygon_area(poly)
    if abs(area) <= tol.eps_area:
        raise ZeroAreaError(f"polygon signed area {area!r} is below the floor {tol.eps_area!r}")
    return poly, area, tol


# ---------------------------------------------------------------------------
# closed forms

def ccm_moment(p) -> np.ndarray:
    """Signed area times the circumcenter of mass, as a cubic polynomial.

    This stays finite for zero-area polygons, which is what lets a
    degenerate piece keep its contribution in a decomposition.
    """
    poly = as_polygon(p)
    x, y = poly[:, 0], poly[:, 1]
    r = x * x + y * y
    diff = np.roll(r, 1) - np.roll(r, -1)
    return np.array([np.sum(y * diff), -np.sum(x * diff)]) / 4.0


def cm_moment(p) -> np.ndarray:
    """Signed area times the lamina centroid."""
    poly = as_polygon(p)
    x, y = poly[:, 0], poly[:, 1]
    xn, yn = np.roll(x, -1), np.roll(y, -1)
    w = x * yn - xn * y
    return np.array([np.sum((x + xn) * w), np.sum((y + yn) * w)]) / 6.0


def ccm_closed_form(p, tol: Tolerance | None = None) -> np.ndarray:
    """Circumcenter of mass from the cyclic coordinate sum (origin as apex)."""
    poly, area, _ = _checked(p, tol)
    return ccm_moment(poly) / area


def ccm_rotated(p, tol: Tolerance | None = None) -> np.ndarray:
    """The circumcenter of mass turned a quarter turn counterclockwise,
    evaluated as ``sum |V_i|^2 (V_{i+1} - V_{i-1}) / 4A``."""
    poly, area, _ = _checked(p, tol)
    r = np.einsum("ij,ij->i", poly, poly)
    return (r[:, None] * (np.roll(poly, -1, axis=0) - np.roll(poly, 1, axis=0))).sum(axis=0) / (4.0 * area)


def cm_lamina(p, tol: Tolerance | None = None) -> np.ndarray:
    """Center of mass of the homogeneous lamina bounded by ``p``."""
    poly, area, _ = _checked(p, tol)
    return cm_moment(poly) / area


def c_t(p, t: float, tol: Tolerance | None = None) -> np.ndarray:
    """The center ``t * CM + (1 - t) * CCM`` on the generalized Euler line.

    ``t = 0`` gives the circumcenter of mass, ``t = 1`` the centroid and,
    for triangles, ``t = 3`` the orthocenter.
    """
    t = float(t)
    if not math.isfinite(t):
        raise ValueError("center parameter must be finite")
    poly, area, _ = _checked(p, tol)
    return (t * cm_moment(poly) + (1.0 - t) * ccm_moment(poly)) / area


# ---------------------------------------------------------------------------
# fan triangulation

def fan_triangles(p, o) -> np.ndarray:
    """The ``(n, 3, 2)`` stack of triangles ``O V_i V_{i+1}``."""
    poly = as_polygon(p)
    o = as_vec(o, dim=2, name="base point")
    nxt = np.roll(poly, -1, axis=0)
    return np.stack([np.broadcast_to(o, poly.shape), poly, nxt], axis=1)


def is_admissible_base(p, o, tol: Tolerance | None = None) -> bool:
    """True when no fan triangle from ``o`` is a dangerous degeneration."""
    poly = as_polygon(p)
    tol = resolve_tolerance(tol, poly)
    return all(
        classify_degeneracy(tri, tol) is not DegeneracyClass.DANGEROUS_DEGENERATE
        for tri in fan_triangles(poly, o)
    )


def _fan_spread(poly, o, tol) -> float:
    """Largest fan circumradius over the polygon diameter (inf if dangerous)."""
    diam = diameter(poly)
    worst = 0.0
    for tri in fan_triangles(poly, o):
        cls = classify_degeneracy(tri, tol)
        if cls is DegeneracyClass.DANGEROUS_DEGENERATE:
            return math.inf
        if cls is DegeneracyClass.NON_DEGENERATE:
            worst = max(worst, circumradius(tri) / diam)
    return worst


def default_base_point(p, tol: Tolerance | None = None) -> np.ndarray:
    """Vertex centroid, or a deterministic perturbation of it.

    Candidates after the centroid are drawn from a fixed-seed generator
    inside the bounding box.  The first candidate whose fan triangles all
    have circumradius within ``1e3`` diameters wins; failing that, the
    best admissible one.
    """
    poly = as_polygon(p)
    tol = resolve_tolerance(tol, poly)
    rng = np.random.default_rng(0)
    lo, hi = poly.min(axis=0), poly.max(axis=0)
    candidates = [poly.mean(axis=0)]
    candidates += [rng.uniform(lo, hi) for _ in range(_FAN_RETRIES)]
    best, best_spread = None, math.inf
    for cand in candidates:
        spread = _fan_spread(poly, cand, tol)
        if spread <= _FAN_RADIUS_LIMIT:
            return cand
        if spread < best_spread:
            best, best_spread = cand, spread
    if best is None:
        raise DangerousTriangulationError("every candidate base point lies on a side line")
    return best


def ccm_fan(p, o=None, tol: Tolerance | None = None) -> np.ndarray:
    """Circumcenter of mass as the area-weighted mean of fan circumcenters.

    Safely degenerate fan triangles carry no area and are skipped.

    Raises
    ------
    DangerousTriangulationError
        If ``o`` lies on the line of a side, so that a fan triangle has its
        circumcenter at infinity.
    ZeroAreaError
        If the polygon has (numerically) zero signed area.
    """
    poly, area, tol = _checked(p, tol)
    o = default_base_point(poly, tol) if o is None else as_vec(o, dim=2, name="base point")
    acc = np.zeros(2)
    for tri in fan_triangles(poly, o):
        cls = classify_degeneracy(tri, tol)
        if cls is DegeneracyClass.DANGEROUS_DEGENERATE:
            raise DangerousTriangulationError(
                f"base point {o.tolist()} lies on the line through {tri[1].tolist()} and {tri[2].tolist()}"
            )
        if cls is DegeneracyClass.NON_DEGENERATE:
            acc += signed_area(tri) * circumcenter(tri, tol)
    return acc / area


# ---------------------------------------------------------------------------
# Euler line

@dataclass(frozen=True)
class EulerLine:
    """The line through the circumcenter of mass and the centroid."""

    ccm: np.ndarray
    cm: np.ndarray
    degenerate: bool

    def point(self, t: float) -> np.ndarray:
        return t * self.cm + (1.0 - t) * self.ccm

    @property
    def direction(self) -> np.ndarray | None:
        """Unit vector from CCM towards CM, or ``None`` when degenerate."""
        if self.degenerate:
            return None
        d = self.cm - self.ccm
        return d / np.linalg.norm(d)


def euler_line(p, tol: Tolerance | None = None) -> EulerLine:
    poly, _, tol = _checked(p, tol)
    ccm = ccm_closed_form(poly, tol)
    cm = cm_lamina(poly, tol)
    gap = float(np.linalg.norm(ccm - cm))
    return EulerLine(ccm, cm, gap < tol.eps_rel * diameter(poly))


# ---------------------------------------------------------------------------
# quadrilaterals

def ccm_quadrilateral_bisectors(a, b, c, d, tol: Tolerance | None = None) -> np.ndarray:
    """Intersection of the perpendicular bisectors of the diagonals AC and BD."""
    quad = as_points([a, b, c, d], dim=2, name="quadrilateral")
    tol = resolve_tolerance(tol, quad)
    a, b, c, d = quad - quad[0]
    # the bisector normals are the diagonals; their cross product is 2A(ABCD)
    if abs(0.5 * cross2(c - a, d - b)) <= tol.eps_area:
        raise ParallelBisectorsError("the diagonals' bisectors are parallel: the signed area vanishes")
    normals = np.array([c - a, d - b])
    rhs = 0.5 * np.array([c @ c - a @ a, d @ d - b @ b])
    return quad[0] + np.linalg.solve(normals, rhs)


def subtriangle_distance_ratios(a, b, c, d, t: float = 0.0, tol: Tolerance | None = None):
    """Distances from ``C_t(ABCD)`` to ``C_t`` of BCD, CDA, DAB and ABC.

    For the returned ``(da, db, dc, dd)`` one has
    ``da * |A(BCD)| == dc * |A(DAB)|`` and ``db * |A(CDA)| == dd * |A(ABC)|``.
    """
    quad = as_points([a, b, c, d], dim=2, name="quadrilateral")
    tol = resolve_tolerance(tol, quad)
    a, b, c, d = quad
    subs = [(b, c, d), (c, d, a), (d, a, b), (a, b, c)]
    for tri in subs:
        if abs(signed_area(tri)) <= tol.eps_area:
            raise DegenerateError("a vertex-deleted triangle is degenerate")
    try:
        center = c_t(quad, t, tol)
    except ZeroAreaError as exc:
        raise DegenerateError("the quadrilateral has zero signed area") from exc
    return tuple(float(np.linalg.norm(center - c_t(np.array(tri), t, tol))) for tri in subs)


# ---------------------------------------------------------------------------
# Archimedes decomposition

def split_polygon(p, start: int, stop: int, via=None):
    """Cut ``p`` along the polyline ``V_start, via..., V_stop``.

    Returns the two closed pieces ``(Q, R)``: ``Q`` follows the boundary
    from ``start`` to ``stop`` and returns along the cut, ``R`` follows the
    cut and then the remaining boundary.
    """
    poly = as_polygon(p)
    n = len(poly)
    if not (0 <= start < n and 0 <= stop < n):
        raise InvalidCutError(f"cut endpoints must be vertex indices in [0, {n})")
    k = (stop - start) % n
    if k == 0:
        raise InvalidCutError("a cut must join two different vertices")
    via = np.zeros((0, 2)) if via is None or len(via) == 0 else as_points(via, dim=2, name="cut")
    ring = np.roll(poly, -start, axis=0)
    q = np.concatenate([ring[: k + 1], via[::-1]])
    r = np.concatenate([ring[:1], via, ring[k:]])
    if len(q) < 3 or len(r) < 3:
        raise InvalidCutError("the cut runs along a side and leaves a two-vertex piece")
    try:
        return as_polygon(q), as_polygon(r)
    except ValueError as exc:
        raise InvalidCutError(str(exc)) from exc


def archimedes_combine(p, start: int, stop: int, via=None, *, t: float = 0.0,
                       retain_degenerate: bool = False, tol: Tolerance | None = None) -> np.ndarray:
    """Recover ``C_t(p)`` from the two pieces of a vertex-to-vertex cut.

    By default a piece of (numerically) zero area is refused: its center is
    only defined as a limit, and silently dropping it loses a finite
    contribution.  With ``retain_degenerate=True`` the pieces are combined
    through their moments (area times center), which stay finite.

    Raises
    ------
    InvalidCutError
        If the cut does not produce two polygons.
    ZeroAreaPieceError
        If a piece has zero area and ``retain_degenerate`` is false.
    """
    poly = as_polygon(p)
    tol = resolve_tolerance(tol, poly)
    pieces = split_polygon(poly, start, stop, via)
    areas = [polygon_area(piece) for piece in pieces]
    if retain_degenerate:
        total = sum(areas)
        if abs(total) <= tol.eps_area:
            raise ZeroAreaError("the pieces have zero total area")
        moment = sum(t * cm_moment(piece) + (1.0 - t) * ccm_moment(piece) for piece in pieces)
        return moment / total
    for area in areas:
        if abs(area) <= tol.eps_area:
            raise ZeroAreaPieceError(
                "a piece has zero area; its center exists only as a weighted limit"
            )
    weighted = [WeightedPoint(c_t(piece, t, tol), area) for piece, area in zip(pieces, areas)]
    return combine(weighted, tol).point


# ---------------------------------------------------------------------------
# smooth curves

def curve_ccm(samples, tol: Tolerance | None = None) -> np.ndarray:
    """Circumcenter of mass of a finely sampled closed curve.

    As the sampling is refined this converges to the centroid of the
    enclosed region, with error of order ``1/n**2``.
    """
    poly = as_polygon(samples)
    if len(poly) < 16:
        raise ValueError("curve sampling needs at least 16 points")
    return ccm_closed_form(poly, tol)


# ---------------------------------------------------------------------------
# symmetry

@dataclass(frozen=True)
class SymmetryReport:
    euler: EulerLine
    mirror_distance: float | None = None
    on_mirror: bool | None = None
    odd_side: int | None = None
    odd_side_angle: float | None = None


def _point_line_distance(x, point, direction) -> float:
    u = direction / np.linalg.norm(direction)
    return abs(cross2(u, x - point))


def _odd_side(poly, eps_rel) -> int | None:
    lengths = np.linalg.norm(np.roll(poly, -1, axis=0) - poly, axis=1)
    n = len(lengths)
    for j in range(n):
        rest = np.delete(lengths, j)
        if np.ptp(rest) <= eps_rel * rest.max() and abs(lengths[j] - rest.mean()) > eps_rel * rest.max():
            return j
    return None


def symmetry_diagnostics(p, mirror=None, tol: Tolerance | None = None) -> SymmetryReport:
    """Relate the Euler line of ``p`` to its symmetries.

    Parameters
    ----------
    mirror : (point, direction), optional
        Candidate reflection axis.  The report gives the largest distance
        from the two Euler-line anchors to this line.

    Notes
    -----
    When all sides but side ``j`` (from ``V_j`` to ``V_{j+1}``) have equal
    length, ``odd_side`` is ``j`` and ``odd_side_angle`` is the angle in
    ``[0, pi/2]`` between the Euler line and that side.
    """
    poly, _, tol = _checked(p, tol)
    line = euler_line(poly, tol)
    diam = diameter(poly)
    report = {}
    if mirror is not None:
        point, direction = as_vec(mirror[0], 2), as_vec(mirror[1], 2)
        dist = max(_point_line_distance(line.ccm, point, direction),
                   _point_line_distance(line.cm, point, direction))
        report["mirror_distance"] = dist
        report["on_mirror"] = dist < tol.eps_rel * diam
    j = _odd_side(poly, 1e-9)
    if j is not None:
        report["odd_side"] = j
        if not line.degenerate:
            side = poly[(j + 1) % len(poly)] - poly[j]
            side = side / np.linalg.norm(side)
            cosang = abs(float(side @ line.direction))
            sinang = abs(cross2(side, line.direction))
            report["odd_side_angle"] = math.atan2(sinang, cosang)
    return SymmetryReport(euler=line, **report)


__all__ = [
    "EulerLine",
    "SymmetryReport",
    "archimedes_combine",
    "as_polygon",
    "c_t",
    "ccm_closed_form",
    "ccm_fan",
    "ccm_moment",
    "ccm_quadrilateral_bisectors",
    "ccm_rotated",
    "cm_lamina",
    "cm_moment",
    "curve_ccm",
    "default_base_point",
    "euler_line",
    "fan_triangles",
    "is_admissible_base",
    "polygon_area",
    "split_polygon",
    "subtriangle_distance_ratios",
    "symmetry_diagnostics",
]
