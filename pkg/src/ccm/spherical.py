"""Centers on the unit sphere S^n and on the hyperboloid model of H^2.

On the sphere a center is a unit direction together with a nonnegative
mass, and the center of a system of masses is the normalized vector sum.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .core import DEFAULT_EPS_REL, Tolerance, as_points
from .errors import (
    AntipodalPairError,
    BalancedConfigurationError,
    ConstraintViolationError,
    DegenerateBoundaryError,
    DegeneratePolygonError,
    GreatCircleDegenerateError,
)

SPHERE_TOLERANCE = Tolerance(eps_area=1e-12, eps_rel=DEFAULT_EPS_REL)


@dataclass(frozen=True)
class MassedDirection:
    direction: np.ndarray
    mass: float

    def __post_init__(self):
        d = np.array(self.direction, dtype=float)
        d.setflags(write=False)
        object.__setattr__(self, "direction", d)
        object.__setattr__(self, "mass", float(self.mass))
        if self.mass < 0 or not math.isfinite(self.mass):
            raise ValueError("mass must be finite and nonnegative")
        if abs(float(np.linalg.norm(d)) - 1.0) > DEFAULT_EPS_REL:
            raise ValueError("direction must be a unit vector")

    @property
    def vector(self) -> np.ndarray:
        """Direction scaled by mass."""
        return self.mass * self.direction

    @classmethod
    def from_vector(cls, v, floor: float, error=BalancedConfigurationError) -> MassedDirection:
        v = np.asarray(v, dtype=float)
        norm = float(np.linalg.norm(v))
        if norm <= floor:
            raise error(f"vector sum has norm {norm!r}, below the floor {floor!r}")
        return cls(v / norm, norm)


def as_unit_vectors(points, tol: Tolerance = SPHERE_TOLERANCE, name="points") -> np.ndarray:
    pts = as_points(points, name=name)
    norms = np.linalg.norm(pts, axis=1)
    if np.any(np.abs(norms - 1.0) >= tol.eps_rel):
        raise ValueError(f"{name} must be unit vectors (|norm - 1| < {tol.eps_rel})")
    return pts


def as_spherical_polygon(vertices, tol: Tolerance = SPHERE_TOLERANCE) -> np.ndarray:
    poly = as_unit_vectors(vertices, tol, name="spherical polygon")
    if len(poly) < 3:
        raise ValueError("a spherical polygon needs at least three vertices")
    nxt = np.roll(poly, -1, axis=0)
    if np.any(np.linalg.norm(poly - nxt, axis=1) < tol.eps_rel):
        raise ValueError("consecutive vertices coincide")
    if np.any(np.linalg.norm(poly + nxt, axis=1) < tol.eps_rel):
        raise AntipodalPairError("consecutive vertices are antipodal; edge orientation is ambiguous")
    return poly


def spherical_distance(a, b) -> float:
    """Great-circle distance, via atan2 for accuracy near 0 and pi."""
    a, b = np.asarray(a, float), np.asarray(b, float)
    return math.atan2(float(np.linalg.norm(np.cross(a, b))), float(a @ b))


def spherical_circumcenter(a, b, c, tol: Tolerance = SPHERE_TOLERANCE) -> MassedDirection:
    """Center of the circumcircle of the oriented triangle ``abc``.

    The direction is the normal ``a x b + b x c + c x a`` of the plane
    through the three points (right-hand rule for the vertex order); the
    mass is its norm, twice the area of the flat triangle.
    """
    a, b, c = as_unit_vectors([a, b, c], tol, name="triangle")
    raw = np.cross(a, b) + np.cross(b, c) + np.cross(c, a)
    return MassedDirection.from_vector(raw, tol.eps_area, GreatCircleDegenerateError)


def spherical_mass_center(points, tol: Tolerance = SPHERE_TOLERANCE) -> MassedDirection:
    """Normalized mass-weighted sum; the mass is the norm before normalizing."""
    points = list(points)
    if not points:
        raise BalancedConfigurationError("no points given")
    total = np.sum([p.vector for p in points], axis=0)
    return MassedDirection.from_vector(total, tol.eps_area)


def _arc_moment(a, b, tol: Tolerance) -> np.ndarray:
    """``a x b * d / sin d`` for the arc from a to b."""
    if np.linalg.norm(a + b) < tol.eps_rel:
        raise AntipodalPairError("antipodal points: the arc between them is not unique")
    cross = np.cross(a, b)
    s = float(np.linalg.norm(cross))
    if s == 0.0:
        return np.zeros(3)
    return cross * (math.atan2(s, float(a @ b)) / s)


def spherical_triangle_lamina_cm(a, b, c, tol: Tolerance = SPHERE_TOLERANCE) -> MassedDirection:
    """Center of mass of a spherical triangle lamina.

    The unnormalized vector is ``sum a x b * d(a, b) / sin d(a, b)`` over
    the three oriented sides, which is twice the surface integral of the
    position vector over the triangle; its norm is returned as the mass.
    """
    a, b, c = as_unit_vectors([a, b, c], tol, name="triangle")
    raw = _arc_moment(a, b, tol) + _arc_moment(b, c, tol) + _arc_moment(c, a, tol)
    return MassedDirection.from_vector(raw, tol.eps_area, DegeneratePolygonError)


def spherical_polygon_lamina_cm(p, w=None, tol: Tolerance = SPHERE_TOLERANCE) -> MassedDirection:
    """Center of mass of the lamina bounded by a spherical polygon.

    With ``w`` given, the polygon is triangulated from ``w`` and the
    triangle laminas are summed; otherwise the apex terms, which cancel, are
    left out and only the sides contribute.
    """
    poly = as_spherical_polygon(p, tol)
    nxt = np.roll(poly, -1, axis=0)
    if w is None:
        raw = sum(_arc_moment(a, b, tol) for a, b in zip(poly, nxt))
    else:
        w = as_unit_vectors([w], tol, name="apex")[0]
        raw = np.zeros(3)
        for a, b in zip(poly, nxt):
            raw += _arc_moment(w, a, tol) + _arc_moment(a, b, tol) + _arc_moment(b, w, tol)
    return MassedDirection.from_vector(raw, tol.eps_area, DegeneratePolygonError)


def _cyclic_cross_sum(poly: np.ndarray, cross=np.cross) -> np.ndarray:
    # sum V_i x V_{i+1} equals sum (V_i - c) x (V_{i+1} - c) for any c; the
    # centered form avoids cancellation for small polygons
    centered = poly - poly.mean(axis=0)
    return cross(centered, np.roll(centered, -1, axis=0)).sum(axis=0)


def spherical_ccm(p, tol: Tolerance = SPHERE_TOLERANCE) -> MassedDirection:
    """Circumcenter of mass: the normalized cyclic sum ``sum V_i x V_{i+1}``.

    Raises
    ------
    DegeneratePolygonError
        When the sum vanishes, e.g. for polygons symmetric through the center.
    """
    poly = as_spherical_polygon(p, tol)
    return MassedDirection.from_vector(_cyclic_cross_sum(poly), tol.eps_area, DegeneratePolygonError)


def spherical_ccm_fan(p, w, tol: Tolerance = SPHERE_TOLERANCE) -> MassedDirection:
    """Circumcenter of mass from the fan ``W V_i V_{i+1}``: the mass center of
    the triangle circumcenters, each weighted by twice its flat area."""
    poly = as_spherical_polygon(p, tol)
    w = as_unit_vectors([w], tol, name="apex")[0]
    centers = []
    for a, b in zip(poly, np.roll(poly, -1, axis=0)):
        try:
            centers.append(spherical_circumcenter(w, a, b, tol))
        except GreatCircleDegenerateError:
            continue  # apex on a vertex: zero-mass triangle
    try:
        return spherical_mass_center(centers, tol)
    except BalancedConfigurationError as exc:
        raise DegeneratePolygonError(str(exc)) from exc


def spherical_curve_ccm(samples, tol: Tolerance = SPHERE_TOLERANCE) -> MassedDirection:
    """Discretized ``integral of gamma x gamma'`` for a sampled closed curve.

    Converges to the lamina center of mass of the enclosed domain as the
    sampling is refined.
    """
    poly = as_spherical_polygon(samples, tol)
    if len(poly) < 16:
        raise ValueError("curve sampling needs at least 16 points")
    return spherical_ccm(poly, tol)


def generalized_cross(vs) -> np.ndarray:
    """The vector ``X`` in R^(n+1) with ``det(V_1, ..., V_n, xi) = X . xi``.

    Computed by cofactor expansion along the row holding ``xi``.
    """
    vs = np.asarray(vs, dtype=float)
    n = vs.shape[0]
    if vs.ndim != 2 or vs.shape[1] != n + 1:
        raise ValueError(f"need n vectors of dimension n + 1, got shape {vs.shape}")
    out = np.empty(n + 1)
    for j in range(n + 1):
        minor = np.delete(vs, j, axis=1)
        out[j] = (-1) ** (n + j) * np.linalg.det(minor)
    return out


def _as_spherical_facets(vertices, facets, tol):
    verts = as_unit_vectors(vertices, tol, name="vertices")
    n = verts.shape[1] - 1
    facets = np.asarray(facets, dtype=np.int64)
    if facets.ndim != 2 or facets.shape[1] != n:
        raise ValueError(f"facets on S^{n} must list {n} vertex indices each")
    if facets.min() < 0 or facets.max() >= len(verts):
        raise ValueError("facet index out of range")
    return verts, facets


def spherical_ccm_polytope(vertices, facets, tol: Tolerance = SPHERE_TOLERANCE) -> MassedDirection:
    """Normalized sum of the generalized cross products of the facets."""
    verts, facets = _as_spherical_facets(vertices, facets, tol)
    total = sum(generalized_cross(verts[f]) for f in facets)
    return MassedDirection.from_vector(total, tol.eps_area, DegenerateBoundaryError)


def spherical_ccm_polytope_fan(vertices, facets, w, tol: Tolerance = SPHERE_TOLERANCE) -> MassedDirection:
    """Same center from the cones ``(W, F)``: each cone contributes the
    oriented normal of the hyperplane through its vertices."""
    verts, facets = _as_spherical_facets(vertices, facets, tol)
    w = as_unit_vectors([w], tol, name="apex")[0]
    total = sum(generalized_cross(verts[f] - w) for f in facets)
    return MassedDirection.from_vector(total, tol.eps_area, DegenerateBoundaryError)


# ---------------------------------------------------------------------------
# hyperboloid model

class MinkowskiClass(enum.Enum):
    SPACE_LIKE = "SpaceLike"
    TIME_LIKE = "TimeLike"
    NULL = "Null"


_J = np.array([-1.0, -1.0, 1.0])


def minkowski_form(v) -> float:
    """``z^2 - x^2 - y^2``."""
    v = np.asarray(v, dtype=float)
    return float(v[2] ** 2 - v[0] ** 2 - v[1] ** 2)


def minkowski_cross(a, b) -> np.ndarray:
    """Cross product for the form ``z^2 - x^2 - y^2``:
    ``<a x b, xi> = det(a, b, xi)`` for every ``xi``."""
    return _J * np.cross(a, b)


def classify_minkowski(v, tol: Tolerance = SPHERE_TOLERANCE) -> MinkowskiClass:
    v = np.asarray(v, dtype=float)
    q = minkowski_form(v)
    if abs(q) <= tol.eps_rel * float(v @ v):
        return MinkowskiClass.NULL
    return MinkowskiClass.TIME_LIKE if q > 0 else MinkowskiClass.SPACE_LIKE


@dataclass(frozen=True)
class HyperbolicCenter:
    vector: np.ndarray
    kind: MinkowskiClass
    point: np.ndarray | None = None

    @property
    def form(self) -> float:
        return minkowski_form(self.vector)


def as_hyperboloid_points(points, tol: Tolerance = SPHERE_TOLERANCE) -> np.ndarray:
    pts = as_points(points, dim=3, name="hyperboloid points")
    q = pts[:, 2] ** 2 - pts[:, 0] ** 2 - pts[:, 1] ** 2
    scale = np.einsum("ij,ij->i", pts, pts)
    if np.any(np.abs(q - 1.0) > tol.eps_rel * scale) or np.any(pts[:, 2] <= 0):
        raise ConstraintViolationError("points must lie on the upper sheet of z^2 - x^2 - y^2 = 1")
    return pts


def minkowski_ccm(p, tol: Tolerance = SPHERE_TOLERANCE) -> HyperbolicCenter:
    """Cyclic Minkowski cross-product sum of a polygon on the hyperboloid.

    Only a time-like sum determines a point of the hyperbolic plane; it is
    returned normalized onto the upper sheet.  A null sum corresponds to a
    point at infinity and a space-like one to a point outside the model.
    """
    poly = as_hyperboloid_points(p, tol)
    if len(poly) < 3:
        raise ValueError("a polygon needs at least three vertices")
    vec = _cyclic_cross_sum(poly, cross=minkowski_cross)
    if float(np.linalg.norm(vec)) <= tol.eps_area:
        raise DegeneratePolygonError("the cross-product sum vanishes")
    kind = classify_minkowski(vec, tol)
    point = None
    if kind is MinkowskiClass.TIME_LIKE:
        point = vec / math.sqrt(minkowski_form(vec))
        if point[2] < 0:
            point = -point
    return HyperbolicCenter(vec, kind, point)


__all__ = [
    "SPHERE_TOLERANCE",
    "HyperbolicCenter",
    "MassedDirection",
    "MinkowskiClass",
    "as_hyperboloid_points",
    "as_spherical_polygon",
    "as_unit_vectors",
    "classify_minkowski",
    "generalized_cross",
    "minkowski_ccm",
    "minkowski_cross",
    "minkowski_form",
    "spherical_ccm",
    "spherical_ccm_fan",
    "spherical_ccm_polytope",
    "spherical_ccm_polytope_fan",
    "spherical_circumcenter",
    "spherical_curve_ccm",
    "spherical_distance",
    "spherical_mass_center",
    "spherical_polygon_lamina_cm",
    "spherical_triangle_lamina_cm",
]
