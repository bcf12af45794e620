"""Simplices and simplicial polytopes in R^n (2 <= n <= 6).

A polytope is described by the oriented simplicial complex of its
boundary: a vertex table and a list of facets, each an ordered list of
``n`` vertex indices.  The order of a facet fixes its orientation; a facet
is outward when the cone over it from an interior point has positive
signed volume.  For ``n = 2`` the facets are the polygon's edges.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .core import (
    DEFAULT_EPS_REL,
    INFINITE,
    Tolerance,
    WeightedPoint,
    as_points,
    as_vec,
    combine,
    diameter,
    is_infinite,
)
from .errors import (
    DangerousConeError,
    DegenerateSimplexError,
    InvalidBoundaryError,
    ZeroVolumeError,
    ZeroVolumePieceError,
)

MIN_DIM, MAX_DIM = 2, 6
_CONE_RADIUS_LIMIT = 1e3
_BASE_RETRIES = 8


def _volume_tolerance(points, dim, eps_rel=DEFAULT_EPS_REL) -> Tolerance:
    return Tolerance.for_points(points, eps_rel=eps_rel, power=dim)


def as_simplex(s) -> np.ndarray:
    simplex = as_points(s, name="simplex")
    n = simplex.shape[1]
    if simplex.shape[0] != n + 1:
        raise ValueError(f"a simplex in R^{n} has {n + 1} vertices, got {simplex.shape[0]}")
    return simplex


def simplex_signed_volume(s) -> float:
    """Signed volume ``det M / n!`` where ``M`` is the vertex matrix bordered
    by a leading row of ones; this equals ``det(V_1 - V_0, ..., V_n - V_0) / n!``.
    """
    simplex = as_simplex(s)
    n = simplex.shape[1]
    return float(np.linalg.det(simplex[1:] - simplex[0])) / math.factorial(n)


def _cramer_centers(edges: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Circumcenters (relative to the apex) of simplices given by edge stacks.

    ``edges`` has shape ``(k, n, n)``: row ``j`` of block ``f`` is
    ``V_{j+1} - V_0``.  Coordinate ``i`` is ``det M_i / (2 det M)``, with
    ``M_i`` the column matrix whose ``i``-th row is replaced by the squared
    norms.  Returns ``(numerators, dets)`` with numerators of shape (k, n).
    """
    cols = np.swapaxes(edges, 1, 2)  # columns are the vertices
    norms = np.einsum("kjd,kjd->kj", edges, edges)
    n = cols.shape[1]
    stacked = np.repeat(cols[:, None, :, :], n, axis=1)
    idx = np.arange(n)
    stacked[:, idx, idx, :] = norms[:, None, :]
    return np.linalg.det(stacked), np.linalg.det(cols)


def simplex_circumcenter(s, tol: Tolerance | None = None) -> np.ndarray:
    """Circumcenter from the determinant ratio ``det M_i / (2 det M)``.

    The determinants are taken in coordinates relative to ``V_0`` and
    evaluated by LU factorization with partial pivoting.
    """
    simplex = as_simplex(s)
    n = simplex.shape[1]
    tol = tol or _volume_tolerance(simplex, n)
    if abs(simplex_signed_volume(simplex)) <= tol.eps_area:
        raise DegenerateSimplexError("simplex volume is below the floor")
    num, det = _cramer_centers((simplex[1:] - simplex[0])[None])
    return simplex[0] + num[0] / (2.0 * det[0])


def simplex_circumradius(s):
    """Circumradius, the minimal-sphere limit for consistent degenerate
    simplices, or :data:`INFINITE` when the circumcenter escapes."""
    simplex = as_simplex(s)
    edges = simplex[1:] - simplex[0]
    rhs = 0.5 * np.einsum("ij,ij->i", edges, edges)
    scale = float(np.max(np.abs(edges))) if edges.size else 0.0
    if scale == 0.0:
        raise DegenerateSimplexError("all vertices coincide")
    sol, _, rank, _ = np.linalg.lstsq(edges / scale, rhs / scale**2, rcond=1e-12)
    if rank < len(edges):
        resid = np.linalg.norm(edges / scale @ sol - rhs / scale**2)
        if resid > 1e-9 * max(1.0, float(np.linalg.norm(rhs / scale**2))):
            return INFINITE
    return float(np.linalg.norm(sol)) * scale


@dataclass(frozen=True)
class SimplicialBoundary:
    """Oriented boundary complex of a simplicial polytope.

    Parameters
    ----------
    vertices : (m, n) array
    facets : (k, n) integer array
        Ordered index lists; the order induces the outward orientation.
    check : bool
        Verify on construction that the facets form a cycle: the signed
        projected volume along every coordinate axis must vanish.
    """

    vertices: np.ndarray
    facets: np.ndarray
    check: bool = field(default=True, repr=False, compare=False)

    def __post_init__(self):
        verts = as_points(self.vertices, name="vertices")
        n = verts.shape[1]
        if not MIN_DIM <= n <= MAX_DIM:
            raise InvalidBoundaryError(f"dimension {n} outside the supported range {MIN_DIM}..{MAX_DIM}")
        facets = np.array(self.facets, dtype=np.int64)
        if facets.ndim != 2 or facets.shape[1] != n or len(facets) == 0:
            raise InvalidBoundaryError(f"facets must be a non-empty (k, {n}) index table")
        if facets.min() < 0 or facets.max() >= len(verts):
            raise InvalidBoundaryError("facet index out of range")
        if any(len(set(f)) != n for f in facets.tolist()):
            raise InvalidBoundaryError("a facet repeats a vertex index")
        verts.setflags(write=False)
        facets.setflags(write=False)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "facets", facets)
        if self.check:
            resid, scale = self.cycle_residual()
            if np.max(np.abs(resid)) > DEFAULT_EPS_REL * max(scale, 1e-300):
                raise InvalidBoundaryError(
                    f"facets do not close up: projected volumes sum to {resid.tolist()}"
                )

    @property
    def dim(self) -> int:
        return self.vertices.shape[1]

    @property
    def facet_points(self) -> np.ndarray:
        """Stack ``(k, n, n)`` of facet vertex coordinates."""
        return self.vertices[self.facets]

    def cycle_residual(self) -> tuple[np.ndarray, float]:
        """Per-axis sum of signed projected facet volumes, and their scale.

        Dropping axis ``i`` maps each facet to a simplex in R^(n-1); the
        signed volumes of these images sum to zero for a closed boundary.
        """
        pts = self.facet_points
        n = self.dim
        sums, scale = np.zeros(n), 0.0
        for i in range(n):
            proj = np.delete(pts, i, axis=2)
            if n == 2:
                vols = proj[:, 1, 0] - proj[:, 0, 0]
            else:
                vols = np.linalg.det(proj[:, 1:] - proj[:, :1]) / math.factorial(n - 1)
            sums[i] = vols.sum()
            scale = max(scale, float(np.abs(vols).sum()))
        return sums, scale

    def tolerance(self, eps_rel: float = DEFAULT_EPS_REL) -> Tolerance:
        return _volume_tolerance(self.vertices, self.dim, eps_rel)


def as_boundary(p) -> SimplicialBoundary:
    if isinstance(p, SimplicialBoundary):
        return p
    vertices, facets = p
    return SimplicialBoundary(vertices, facets)


def polygon_boundary(vertices) -> SimplicialBoundary:
    """Encode a planar polygon as its cycle of oriented edges."""
    verts = as_points(vertices, dim=2, name="polygon")
    m = len(verts)
    return SimplicialBoundary(verts, [(i, (i + 1) % m) for i in range(m)])


def simplex_boundary(vertices) -> SimplicialBoundary:
    """Outward-oriented boundary of a single simplex."""
    simplex = as_simplex(vertices)
    n = simplex.shape[1]
    facets = []
    for j in range(n + 1):
        face = [i for i in range(n + 1) if i != j]
        if j % 2 == 1:
            face[0], face[1] = face[1], face[0]
        facets.append(face)
    if simplex_signed_volume(simplex) < 0:
        facets = [[f[1], f[0], *f[2:]] for f in facets]
    return SimplicialBoundary(simplex, facets)


def _cone_edges(p: SimplicialBoundary, o: np.ndarray) -> np.ndarray:
    return p.facet_points - o


def polytope_volume(p, o=None) -> float:
    """Signed volume as the sum of cones over the facets (apex ``o``)."""
    p = as_boundary(p)
    o = np.zeros(p.dim) if o is None else as_vec(o, p.dim, "base point")
    return float(np.linalg.det(_cone_edges(p, o)).sum()) / math.factorial(p.dim)


def _checked(p, tol):
    p = as_boundary(p)
    tol = tol or p.tolerance()
    vol = polytope_volume(p)
    if abs(vol) <= tol.eps_area:
        raise ZeroVolumeError(f"polytope volume {vol!r} is below the floor {tol.eps_area!r}")
    return p, vol, tol


def _cone_spread(p: SimplicialBoundary, o: np.ndarray, tol: Tolerance) -> float:
    """Largest cone circumradius over the polytope diameter; inf if dangerous."""
    diam = diameter(p.vertices)
    edges = _cone_edges(p, o)
    vols = np.linalg.det(edges) / math.factorial(p.dim)
    good = np.abs(vols) > tol.eps_area
    worst = 0.0
    if np.any(good):
        num, det = _cramer_centers(edges[good])
        worst = float(np.max(np.linalg.norm(num / (2.0 * det[:, None]), axis=1))) / diam
    for f in np.flatnonzero(~good):
        radius = simplex_circumradius(np.vstack([o, p.facet_points[f]]))
        if is_infinite(radius) or radius > diam / tol.eps_rel:
            return math.inf
    return worst


def is_admissible_polytope_base(p, o, tol: Tolerance | None = None) -> bool:
    """True when no cone from ``o`` is a dangerous degeneration."""
    p = as_boundary(p)
    tol = tol or p.tolerance()
    return math.isfinite(_cone_spread(p, as_vec(o, p.dim, "base point"), tol))


def default_polytope_base(p, tol: Tolerance | None = None) -> np.ndarray:
    p = as_boundary(p)
    tol = tol or p.tolerance()
    rng = np.random.default_rng(0)
    lo, hi = p.vertices.min(axis=0), p.vertices.max(axis=0)
    candidates = [p.vertices.mean(axis=0)] + [rng.uniform(lo, hi) for _ in range(_BASE_RETRIES)]
    best, best_spread = None, math.inf
    for cand in candidates:
        spread = _cone_spread(p, cand, tol)
        if spread <= _CONE_RADIUS_LIMIT:
            return cand
        if spread < best_spread:
            best, best_spread = cand, spread
    if best is None:
        raise DangerousConeError("every candidate base point lies on a facet hyperplane")
    return best


def ccm_polytope(p, o=None, tol: Tolerance | None = None) -> np.ndarray:
    """Volume-weighted mean of the circumcenters of the cones over the facets.

    Raises
    ------
    DangerousConeError
        If ``o`` lies on a facet hyperplane so that a cone's circumcenter
        escapes to infinity.
    ZeroVolumeError
        If the total signed volume vanishes.
    """
    p, _vol, tol = _checked(p, tol)
    o = default_polytope_base(p, tol) if o is None else as_vec(o, p.dim, "base point")
    edges = _cone_edges(p, o)
    vols = np.linalg.det(edges) / math.factorial(p.dim)
    good = np.abs(vols) > tol.eps_area
    diam = diameter(p.vertices)
    for f in np.flatnonzero(~good):
        radius = simplex_circumradius(np.vstack([o, p.facet_points[f]]))
        if is_infinite(radius) or radius > diam / tol.eps_rel:
            raise DangerousConeError(f"base point {o.tolist()} lies on the hyperplane of facet {f}")
    num, det = _cramer_centers(edges[good])
    centers = o + num / (2.0 * det[:, None])
    return vols[good] @ centers / vols[good].sum()


def ccm_moment_polytope(p) -> np.ndarray:
    """Volume times circumcenter of mass: ``sum_F det A_i(F) / (2 n!)``."""
    p = as_boundary(p)
    num, _ = _cramer_centers(p.facet_points)
    return num.sum(axis=0) / (2.0 * math.factorial(p.dim))


def cm_moment_polytope(p) -> np.ndarray:
    p = as_boundary(p)
    pts = p.facet_points
    dets = np.linalg.det(pts) / math.factorial(p.dim)
    return dets @ pts.sum(axis=1) / (p.dim + 1)


def ccm_polytope_closed_form(p, tol: Tolerance | None = None) -> np.ndarray:
    """Circumcenter of mass as a facet-determinant sum with the origin as apex.

    Coordinate ``i`` is ``sum_F det A_i(F) / (2 n! V(P))`` where ``A(F)`` has
    the facet's vertices as columns and ``A_i(F)`` replaces its ``i``-th row
    by the squared norms.
    """
    p, vol, _ = _checked(p, tol)
    return ccm_moment_polytope(p) / vol


def cm_polytope(p, tol: Tolerance | None = None) -> np.ndarray:
    """Centroid of the solid bounded by ``p``."""
    p, vol, _ = _checked(p, tol)
    return cm_moment_polytope(p) / vol


def c_t_polytope(p, t: float, tol: Tolerance | None = None) -> np.ndarray:
    t = float(t)
    if not math.isfinite(t):
        raise ValueError("center parameter must be finite")
    p, vol, _ = _checked(p, tol)
    return (t * cm_moment_polytope(p) + (1.0 - t) * ccm_moment_polytope(p)) / vol


def monge_parameter(n: int) -> float:
    if n < 2:
        raise ValueError("the Monge point needs dimension at least 2")
    return (n + 1) / (n - 1)


def monge_point(p, tol: Tolerance | None = None) -> np.ndarray:
    """The center ``C_t`` with ``t = (n + 1) / (n - 1)``; the orthocenter for n = 2."""
    p = as_boundary(p)
    return c_t_polytope(p, monge_parameter(p.dim), tol)


def archimedes_combine_polytope(q, r, t: float = 0.0, tol: Tolerance | None = None) -> np.ndarray:
    """Volume-weighted combination of ``C_t`` of two pieces of a decomposition.

    The pieces must meet along a common internal boundary carrying opposite
    orientations, and the cut must not add vertices to the outer boundary
    (otherwise flat, zero-volume simplices are hidden in the split).
    """
    q, r = as_boundary(q), as_boundary(r)
    pieces = []
    for piece in (q, r):
        ptol = tol or piece.tolerance()
        vol = polytope_volume(piece)
        if abs(vol) <= ptol.eps_area:
            raise ZeroVolumePieceError("a piece has zero volume")
        pieces.append(WeightedPoint(c_t_polytope(piece, t, ptol), vol))
    return combine(pieces).point


__all__ = [
    "SimplicialBoundary",
    "archimedes_combine_polytope",
    "as_boundary",
    "c_t_polytope",
    "ccm_moment_polytope",
    "ccm_polytope",
    "ccm_polytope_closed_form",
    "cm_moment_polytope",
    "cm_polytope",
    "default_polytope_base",
    "is_admissible_polytope_base",
    "monge_parameter",
    "monge_point",
    "polygon_boundary",
    "polytope_volume",
    "simplex_boundary",
    "simplex_circumcenter",
    "simplex_circumradius",
    "simplex_signed_volume",
]
