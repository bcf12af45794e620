"""Random and canonical test shapes.

Used by the ``verify`` command and the test suite.  Every generator takes
a ``numpy.random.Generator`` so runs are reproducible from a seed.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.spatial import ConvexHull

from .core import diameter
from .planar import polygon_area
from .polytope import SimplicialBoundary, simplex_boundary


def random_rotation(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Uniform random rotation (determinant +1)."""
    q, r = np.linalg.qr(rng.normal(size=(dim, dim)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


def _fat_enough(poly, ratio=0.02) -> bool:
    return abs(polygon_area(poly)) >= ratio * diameter(poly) ** 2


def random_polygon(rng, n: int, box: float = 10.0) -> np.ndarray:
    """Vertices uniform in ``[-box, box]^2`` in random order (possibly
    self-intersecting), rejected until the area is not tiny."""
    while True:
        poly = rng.uniform(-box, box, size=(n, 2))
        if _fat_enough(poly):
            return poly


def random_convex_polygon(rng, n: int, box: float = 10.0) -> np.ndarray:
    """Counterclockwise convex polygon with exactly ``n`` vertices."""
    while True:
        pts = rng.uniform(-box, box, size=(4 * n, 2))
        hull = ConvexHull(pts)
        if len(hull.vertices) >= n:
            idx = np.sort(rng.choice(hull.vertices.size, size=n, replace=False))
            poly = pts[hull.vertices[idx]]
            if _fat_enough(poly, 0.05):
                return poly


def random_cyclic_polygon(rng, n: int):
    """Polygon inscribed in a random circle; returns ``(poly, center, radius)``."""
    center = rng.uniform(-10, 10, size=2)
    radius = rng.uniform(0.5, 10)
    while True:
        theta = np.sort(rng.uniform(0, 2 * np.pi, size=n))
        poly = center + radius * np.column_stack([np.cos(theta), np.sin(theta)])
        if _fat_enough(poly) and np.all(np.diff(theta) > 1e-3):
            return poly, center, radius


def _circle_intersections(p, q, r):
    """Points at distance ``r`` from both ``p`` and ``q`` (may be empty)."""
    d = float(np.linalg.norm(q - p))
    if d == 0 or d > 2 * r:
        return []
    mid = (p + q) / 2
    h = math.sqrt(max(r * r - d * d / 4, 0.0))
    perp = np.array([-(q - p)[1], (q - p)[0]]) / d
    return [mid + h * perp, mid - h * perp]


def random_equilateral_polygon(rng, n: int, side: float = 1.0) -> np.ndarray:
    """Closed polygon with all sides of length ``side``.

    A random walk of ``n - 2`` unit steps is closed by the intersection of
    the two circles around its ends.
    """
    while True:
        steps = rng.uniform(0, 2 * np.pi, size=n - 2)
        walk = np.vstack([[0.0, 0.0], np.cumsum(np.column_stack([np.cos(steps), np.sin(steps)]), axis=0)])
        closing = _circle_intersections(walk[-1], walk[0], 1.0)
        if not closing:
            continue
        poly = np.vstack([walk, closing[rng.integers(2)]])
        edges = np.roll(poly, -1, axis=0) - poly
        if np.min(np.linalg.norm(edges, axis=1)) < 0.5 or not _fat_enough(poly, 0.05):
            continue
        rot = random_rotation(rng, 2)
        return side * poly @ rot.T + rng.uniform(-5, 5, size=2)


def random_mirror_polygon(rng, k: int):
    """Polygon with a reflection symmetry; returns ``(poly, (point, direction))``.

    Built as a star-shaped chain above the x-axis and its mirror image, then
    moved by a random rigid motion.
    """
    while True:
        theta = np.sort(rng.uniform(0.05, np.pi - 0.05, size=k))
        radii = rng.uniform(1, 5, size=k)
        upper = np.column_stack([radii * np.cos(theta), radii * np.sin(theta)])
        lower = upper[::-1] * [1, -1]
        poly = np.vstack([upper, lower])
        if rng.random() < 0.5:
            poly = np.vstack([[rng.uniform(1, 5), 0.0], poly])
        if _fat_enough(poly):
            break
    rot = random_rotation(rng, 2)
    shift = rng.uniform(-5, 5, size=2)
    return poly @ rot.T + shift, (shift, rot @ np.array([1.0, 0.0]))


def random_rotational_polygon(rng, k: int, m: int):
    """Polygon invariant under rotation by ``2 pi / m`` with no side line
    through the center; returns ``(poly, center)``."""
    while True:
        theta = np.sort(rng.uniform(0, 2 * np.pi / m, size=k))
        radii = rng.uniform(1, 5, size=k)
        chain = np.column_stack([radii * np.cos(theta), radii * np.sin(theta)])
        copies = []
        for j in range(m):
            c, s = math.cos(2 * np.pi * j / m), math.sin(2 * np.pi * j / m)
            copies.append(chain @ np.array([[c, s], [-s, c]]))
        poly = np.vstack(copies)
        edges = np.roll(poly, -1, axis=0) - poly
        lens = np.linalg.norm(edges, axis=1)
        if lens.min() < 1e-2:
            continue
        # distance from the origin to each side line
        dist = np.abs(poly[:, 0] * edges[:, 1] - poly[:, 1] * edges[:, 0]) / lens
        if dist.min() > 0.05 and _fat_enough(poly):
            break
    shift = rng.uniform(-5, 5, size=2)
    return poly + shift, shift


def random_three_equal_quadrilateral(rng):
    """Quadrilateral whose first three sides share a length and whose fourth
    (from the last vertex back to the first) does not."""
    while True:
        turns = rng.uniform(0.3, np.pi - 0.3, size=2)
        heading = np.cumsum(np.concatenate([[0.0], turns]))
        steps = np.column_stack([np.cos(heading), np.sin(heading)])
        poly = np.vstack([[0.0, 0.0], np.cumsum(steps, axis=0)])
        odd = float(np.linalg.norm(poly[0] - poly[-1]))
        if abs(odd - 1.0) > 0.1 and _fat_enough(poly, 0.05):
            break
    rot = random_rotation(rng, 2)
    return rng.uniform(0.5, 3) * poly @ rot.T + rng.uniform(-5, 5, size=2)


def triangle_oval(theta):
    """Radius of a smooth star-shaped oval without symmetry."""
    return 1.0 + 0.25 * np.cos(theta) + 0.12 * np.sin(2 * theta) + 0.05 * np.cos(3 * theta + 0.4)


def sample_oval(n: int, radius=triangle_oval, center=(0.3, -0.2)) -> np.ndarray:
    theta = 2 * np.pi * np.arange(n) / n
    r = radius(theta)
    return np.asarray(center) + np.column_stack([r * np.cos(theta), r * np.sin(theta)])


def spherical_oval_colatitude(phi):
    return 0.6 + 0.15 * np.cos(phi) + 0.08 * np.sin(2 * phi + 0.3)


def sample_spherical_oval(n: int, colatitude=spherical_oval_colatitude) -> np.ndarray:
    phi = 2 * np.pi * np.arange(n) / n
    th = colatitude(phi)
    return np.column_stack([np.sin(th) * np.cos(phi), np.sin(th) * np.sin(phi), np.cos(th)])


# ---------------------------------------------------------------------------
# polytopes

def orient_outward(vertices, facets, interior) -> np.ndarray:
    """Reorder each facet so the cone from ``interior`` has positive volume."""
    pts = np.asarray(vertices, dtype=float)
    facets = np.array(facets, dtype=np.int64)
    dets = np.linalg.det(pts[facets] - interior)
    flip = dets < 0
    facets[flip, :2] = facets[flip, 1::-1]
    return facets


def hull_boundary(points) -> SimplicialBoundary:
    """Outward boundary of the convex hull, keeping only hull vertices."""
    pts = np.asarray(points, dtype=float)
    hull = ConvexHull(pts)
    used = np.unique(hull.simplices)
    remap = -np.ones(len(pts), dtype=np.int64)
    remap[used] = np.arange(len(used))
    verts = pts[used]
    facets = orient_outward(verts, remap[hull.simplices], verts.mean(axis=0))
    return SimplicialBoundary(verts, facets)


def random_polytope(rng, dim: int, npts: int | None = None) -> SimplicialBoundary:
    npts = npts or 2 * dim + 4
    return hull_boundary(rng.normal(size=(npts, dim)) * rng.uniform(0.5, 3) + rng.uniform(-3, 3, size=dim))


def random_inscribed_polytope(rng, dim: int, npts: int | None = None):
    """Hull of random points on a random sphere; returns ``(boundary, center, radius)``."""
    npts = npts or 2 * dim + 4
    center = rng.uniform(-5, 5, size=dim)
    radius = rng.uniform(0.5, 5)
    while True:
        d = rng.normal(size=(npts, dim))
        d /= np.linalg.norm(d, axis=1, keepdims=True)
        boundary = hull_boundary(center + radius * d)
        if len(boundary.vertices) > dim + 1:
            return boundary, center, radius


def random_simplex(rng, dim: int) -> np.ndarray:
    while True:
        s = rng.normal(size=(dim + 1, dim)) + rng.uniform(-3, 3, size=dim)
        edges = s[1:] - s[0]
        if abs(np.linalg.det(edges)) > 0.05 * np.prod(np.linalg.norm(edges, axis=1)):
            return s


def box_boundary(lo, hi) -> SimplicialBoundary:
    """Axis-parallel box in R^3, each face split along a diagonal."""
    lo, hi = np.asarray(lo, float), np.asarray(hi, float)
    corners = np.array([[(hi if (i >> k) & 1 else lo)[k] for k in range(3)] for i in range(8)])
    quads = [(0, 1, 3, 2), (4, 6, 7, 5), (0, 4, 5, 1), (2, 3, 7, 6), (0, 2, 6, 4), (1, 5, 7, 3)]
    facets = [t for a, b, c, d in quads for t in ((a, b, c), (a, c, d))]
    return SimplicialBoundary(corners, orient_outward(corners, facets, (lo + hi) / 2))


def octahedron_boundary(scale: float = 1.0) -> SimplicialBoundary:
    verts = scale * np.array([(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)], float)
    facets = [(x, y, z) for x in (0, 1) for y in (2, 3) for z in (4, 5)]
    return SimplicialBoundary(verts, orient_outward(verts, facets, np.zeros(3)))


def split_at_vertex(p: SimplicialBoundary, v: int, apex) -> tuple[SimplicialBoundary, SimplicialBoundary]:
    """Cut off the star of vertex ``v`` by the cone from ``apex`` over its link.

    The cut surface is bounded by existing edges of ``p``, so no vertex is
    added to the outer boundary.  Returns ``(rest, cap)``.
    """
    apex = np.asarray(apex, dtype=float)
    verts = np.vstack([p.vertices, apex])
    x = len(p.vertices)
    star = np.any(p.facets == v, axis=1)
    cone = np.where(p.facets[star] == v, x, p.facets[star])
    rest = np.vstack([p.facets[~star], cone])
    cap = np.vstack([p.facets[star], cone[:, [1, 0, *range(2, p.dim)]]])
    return SimplicialBoundary(verts, rest), SimplicialBoundary(verts, cap)


def tetrahedron_split(rng, simplex=None):
    """Split a tetrahedron by a cut disk spanning the skew edge cycle
    ``V0 V1 V3 V2`` with an interior apex.  Returns ``(simplex, q, r)``."""
    s = random_simplex(rng, 3) if simplex is None else np.asarray(simplex, float)
    whole = simplex_boundary(s)
    apex = s.mean(axis=0) + 0.1 * rng.normal(size=3) * diameter(s)
    q, r = split_at_vertex(whole, 0, apex)
    return s, q, r


# ---------------------------------------------------------------------------
# sphere

def tangent_frame(axis) -> np.ndarray:
    """Orthonormal ``(e1, e2, axis)`` with ``axis`` last."""
    axis = np.asarray(axis, dtype=float)
    axis = axis / np.linalg.norm(axis)
    helper = np.eye(3)[np.argmin(np.abs(axis))]
    e1 = np.cross(axis, helper)
    e1 /= np.linalg.norm(e1)
    return np.array([e1, np.cross(axis, e1), axis])


def lift_to_sphere(points2d, axis=(0.0, 0.0, 1.0)) -> np.ndarray:
    """Inverse gnomonic projection from the tangent plane at ``axis``."""
    frame = tangent_frame(axis)
    pts = np.asarray(points2d, dtype=float)
    v = pts[:, :1] * frame[0] + pts[:, 1:2] * frame[1] + frame[2]
    return v / np.linalg.norm(v, axis=1, keepdims=True)


def gnomonic(points, axis=(0.0, 0.0, 1.0)) -> np.ndarray:
    frame = tangent_frame(axis)
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    local = pts @ frame.T
    return local[:, :2] / local[:, 2:3]


def random_unit(rng, dim: int = 3) -> np.ndarray:
    v = rng.normal(size=dim)
    return v / np.linalg.norm(v)


def random_spherical_polygon(rng, n: int, spread: float = 0.6) -> np.ndarray:
    """Random polygon in the cap around a random axis (tangent-plane radius ``spread``)."""
    while True:
        flat = rng.uniform(-spread, spread, size=(n, 2))
        if _fat_enough(flat):
            return lift_to_sphere(flat, random_unit(rng))


def random_equilateral_spherical_polygon(rng, n: int, side: float) -> np.ndarray:
    """Closed spherical polygon with every side an arc of length ``side``."""
    cos_l = math.cos(side)
    while True:
        v = [random_unit(rng)]
        for _ in range(n - 2):
            t = random_unit(rng)
            t -= (t @ v[-1]) * v[-1]
            t /= np.linalg.norm(t)
            v.append(math.cos(side) * v[-1] + math.sin(side) * t)
        a, b = v[-1], v[0]
        # X = p a + p b + r (a x b) with X.a = X.b = cos_l and |X| = 1
        g = float(a @ b)
        if abs(1 + g) < 1e-6 or abs(1 - g) < 1e-6:
            continue
        p = cos_l / (1 + g)
        c = np.cross(a, b)
        rest = 1 - (2 * p * p * (1 + g))
        if rest <= 0:
            continue
        x = p * (a + b) + (math.sqrt(rest) / np.linalg.norm(c)) * c * (1 if rng.random() < 0.5 else -1)
        poly = np.array(v + [x])
        flat = gnomonic(poly, poly.mean(axis=0))
        if np.all(poly @ poly.mean(axis=0) > 0.2) and _fat_enough(flat, 0.05):
            return poly / np.linalg.norm(poly, axis=1, keepdims=True)


def hyperboloid_point(x, y) -> np.ndarray:
    return np.array([x, y, math.sqrt(1.0 + x * x + y * y)])


def hyperboloid_plane_points(normal, offset, ys) -> np.ndarray:
    """Points of the upper sheet on the plane ``normal . v = offset`` with the
    given ``y`` coordinates (``normal`` must have nonzero x component)."""
    nx, ny, nz = normal
    out = []
    for y in ys:
        # x = (offset - ny y - nz z) / nx substituted in z^2 - x^2 - y^2 = 1
        a = 1 - (nz / nx) ** 2
        bq = 2 * nz * (offset - ny * y) / nx**2
        c = -((offset - ny * y) / nx) ** 2 - y * y - 1
        if abs(a) < 1e-14:
            z = -c / bq
        else:
            disc = bq * bq - 4 * a * c
            roots = [(-bq + s * math.sqrt(disc)) / (2 * a) for s in (1, -1)]
            z = max(r for r in roots if r > 0)
        out.append([(offset - ny * y - nz * z) / nx, y, z])
    return np.array(out)
