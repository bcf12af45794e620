"""Dimension-generic primitives: signed measures, triangle circumcenters,
degeneracy classification and the algebra of weighted points.

All points are plain ``numpy`` float arrays.  Nothing here mutates its
arguments.
"""

from __future__ import annotations

import enum
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from .errors import (
    AllCoincidentError,
    DegenerateError,
    ZeroTotalMassError,
)

DEFAULT_EPS_REL = 1e-9
AREA_FACTOR = 1e-12


def as_points(points, dim: int | None = None, name: str = "points") -> np.ndarray:
    """Return ``points`` as a finite ``(m, d)`` float array."""
    arr = np.array(points, dtype=float)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be a 2-D array of coordinates, got shape {arr.shape}")
    if dim is not None and arr.shape[1] != dim:
        raise ValueError(f"{name} must have dimension {dim}, got {arr.shape[1]}")
    if arr.shape[1] < 2:
        raise ValueError(f"{name} must live in dimension >= 2")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite coordinates")
    return arr


def as_vec(point, dim: int | None = None, name: str = "point") -> np.ndarray:
    arr = np.array(point, dtype=float)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be a 1-D coordinate vector")
    if dim is not None and arr.shape[0] != dim:
        raise ValueError(f"{name} must have dimension {dim}, got {arr.shape[0]}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite coordinates")
    return arr


def diameter(points) -> float:
    """Largest pairwise distance between the rows of ``points``."""
    pts = np.asarray(points, dtype=float)
    if len(pts) < 2:
        return 0.0
    diff = pts[:, None, :] - pts[None, :, :]
    return float(np.sqrt(np.max(np.einsum("ijk,ijk->ij", diff, diff))))


@dataclass(frozen=True)
class Tolerance:
    """Absolute floor for signed measures plus a relative comparison slack.

    ``eps_area`` is in the units of the measure being tested (area in the
    plane, volume in R^n); ``eps_rel`` is dimensionless.
    """

    eps_area: float
    eps_rel: float = DEFAULT_EPS_REL

    def __post_init__(self):
        for name in ("eps_area", "eps_rel"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise ValueError(f"{name} must be a positive finite number, got {value!r}")

    @classmethod
    def for_points(cls, points, eps_rel: float = DEFAULT_EPS_REL, power: int = 2) -> Tolerance:
        """Scale the measure floor to the input: ``1e-12 * diameter**power``."""
        diam = diameter(points)
        floor = AREA_FACTOR * diam**power if diam > 0 else AREA_FACTOR
        return cls(eps_area=floor, eps_rel=eps_rel)


def resolve_tolerance(tol: Tolerance | None, points, power: int = 2) -> Tolerance:
    if tol is not None:
        return tol
    return Tolerance.for_points(points, power=power)


class _Infinite:
    """Marker for a circumradius that is infinite (circumcenter at infinity)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"

    def __reduce__(self):
        return (_Infinite, ())


INFINITE = _Infinite()


def is_infinite(value) -> bool:
    return value is INFINITE


class DegeneracyClass(enum.Enum):
    NON_DEGENERATE = "NonDegenerate"
    SAFE_DEGENERATE = "SafeDegenerate"
    DANGEROUS_DEGENERATE = "DangerousDegenerate"


@dataclass(frozen=True)
class WeightedPoint:
    """A location carrying a signed mass (area or volume)."""

    point: np.ndarray
    mass: float

    def __post_init__(self):
        point = np.array(self.point, dtype=float)
        point.setflags(write=False)
        object.__setattr__(self, "point", point)
        object.__setattr__(self, "mass", float(self.mass))
        if not (np.all(np.isfinite(point)) and math.isfinite(self.mass)):
            raise ValueError("weighted point must have finite location and mass")

    def __neg__(self) -> WeightedPoint:
        return WeightedPoint(self.point, -self.mass)

    def __add__(self, other: WeightedPoint) -> WeightedPoint:
        return combine([self, other])

    def __sub__(self, other: WeightedPoint) -> WeightedPoint:
        return combine([self, -other])

    def __eq__(self, other):
        if not isinstance(other, WeightedPoint):
            return NotImplemented
        return self.mass == other.mass and np.array_equal(self.point, other.point)

    __hash__ = None


def combine(points: Iterable[WeightedPoint], tol: Tolerance | None = None) -> WeightedPoint:
    """Center of mass of a collection of signed point masses.

    The returned mass is the sum of the masses.  Subtraction of a piece is
    expressed by negating its mass (``a - b`` on :class:`WeightedPoint`).

    Raises
    ------
    ZeroTotalMassError
        If the total mass is within ``tol.eps_area`` of zero.  Without an
        explicit tolerance the floor is ``1e-12`` times the total absolute
        mass.
    """
    points = list(points)
    if not points:
        raise ZeroTotalMassError("cannot combine an empty collection")
    masses = np.array([p.mass for p in points])
    locs = np.stack([p.point for p in points])
    total = float(masses.sum())
    floor = tol.eps_area if tol is not None else AREA_FACTOR * float(np.abs(masses).sum())
    if abs(total) <= floor:
        raise ZeroTotalMassError(f"total mass {total!r} is below the floor {floor!r}")
    return WeightedPoint(masses @ locs / total, total)


def _triangle(t) -> np.ndarray:
    tri = as_points(t, dim=2, name="triangle")
    if tri.shape[0] != 3:
        raise ValueError("a triangle has exactly three vertices")
    return tri


def cross2(u, v) -> float:
    return float(u[0] * v[1] - u[1] * v[0])


def signed_area(t) -> float:
    """Half the determinant of the edge vectors; positive when counterclockwise."""
    a, b, c = _triangle(t)
    return 0.5 * cross2(b - a, c - a)


def circumcenter(t, tol: Tolerance | None = None) -> np.ndarray:
    """Circumcenter of a planar triangle.

    Solves the perpendicular-bisector system in coordinates relative to the
    first vertex, which keeps the system well scaled for small triangles far
    from the origin.
    """
    tri = _triangle(t)
    tol = resolve_tolerance(tol, tri)
    if abs(signed_area(tri)) <= tol.eps_area:
        raise DegenerateError("triangle area is below the floor; circumcenter may be at infinity")
    a = tri[0]
    edges = tri[1:] - a
    rhs = 0.5 * np.einsum("ij,ij->i", edges, edges)
    return a + np.linalg.solve(edges, rhs)


def circumradius(t):
    """Circumradius ``abc / 4|A|``, or :data:`INFINITE`.

    Two coincident vertices give half the remaining side (the limit of a
    shrinking side); three distinct collinear vertices give ``INFINITE``.
    """
    tri = _triangle(t)
    a = float(np.linalg.norm(tri[1] - tri[2]))
    b = float(np.linalg.norm(tri[2] - tri[0]))
    c = float(np.linalg.norm(tri[0] - tri[1]))
    sides = sorted((a, b, c))
    if sides[2] == 0.0:
        raise AllCoincidentError("all three vertices coincide; circumradius undefined")
    if sides[0] == 0.0:
        return sides[2] / 2.0
    area = abs(signed_area(tri))
    if area == 0.0:
        return INFINITE
    return a * b * c / (4.0 * area)


def classify_degeneracy(t, tol: Tolerance | None = None) -> DegeneracyClass:
    """Sort a triangle into non-degenerate, safely degenerate or dangerous.

    A degenerate triangle is dangerous when its circumradius is infinite or
    exceeds ``diameter / eps_rel``; otherwise its circumcenter stays bounded
    and, having zero area, it contributes nothing.
    """
    tri = _triangle(t)
    tol = resolve_tolerance(tol, tri)
    if abs(signed_area(tri)) > tol.eps_area:
        return DegeneracyClass.NON_DEGENERATE
    try:
        radius = circumradius(tri)
    except AllCoincidentError:
        return DegeneracyClass.SAFE_DEGENERATE
    if is_infinite(radius) or radius > diameter(tri) / tol.eps_rel:
        return DegeneracyClass.DANGEROUS_DEGENERATE
    return DegeneracyClass.SAFE_DEGENERATE


def rotate90(v: Sequence[float]) -> np.ndarray:
    """Counterclockwise quarter turn of a planar vector."""
    return np.array([-v[1], v[0]], dtype=float)
