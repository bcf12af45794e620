"""Randomized verification suites behind ``ccm verify``.

Each suite draws its cases from ``numpy.random.default_rng(seed)`` and
compares two independent computations of the same center.  A case fails
when the discrepancy exceeds the suite tolerance; failures carry enough
detail to reproduce the case.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import quad

from . import samples
from .axioms import angles_from_tangents, euler_height_function, functional_eq_residual
from .core import diameter
from .errors import GeometryError, UnknownSuiteError, ZeroAreaPieceError
from .planar import (
    archimedes_combine,
    c_t,
    ccm_closed_form,
    ccm_fan,
    cm_lamina,
    curve_ccm,
    euler_line,
    is_admissible_base,
    symmetry_diagnostics,
)
from .polytope import (
    archimedes_combine_polytope,
    ccm_polytope,
    ccm_polytope_closed_form,
    is_admissible_polytope_base,
    monge_point,
    polytope_volume,
    simplex_circumcenter,
)
from .spherical import (
    MinkowskiClass,
    classify_minkowski,
    spherical_ccm,
    spherical_ccm_fan,
    spherical_curve_ccm,
    spherical_polygon_lamina_cm,
)


@dataclass
class SuiteResult:
    suite: str
    seed: int
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    expected_errors: list[str] = field(default_factory=list)
    max_error: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, label: str, error: float, limit: float) -> None:
        self.cases += 1
        if not math.isfinite(error) or error > limit:
            self.failures.append(f"{label}: error {error:.3e} exceeds {limit:.1e}")
        elif error > self.max_error:
            self.max_error = float(error)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = (f"{status} {self.suite} seed={self.seed} checks={self.cases} "
                f"max_error={self.max_error:.3e}")
        if self.expected_errors:
            line += f" expected_errors={len(self.expected_errors)}"
        return line


def _angle(u, v) -> float:
    u, v = np.asarray(u, float), np.asarray(v, float)
    return math.atan2(float(np.linalg.norm(np.cross(u, v))), float(u @ v))


def admissible_bases(rng, poly, count: int = 3) -> list[np.ndarray]:
    """``count`` random base points in the padded bounding box that keep
    every fan triangle's circumcenter at a bounded distance."""
    lo, hi = poly.min(axis=0), poly.max(axis=0)
    pad = 0.25 * (hi - lo)
    out = []
    while len(out) < count:
        o = rng.uniform(lo - pad, hi + pad)
        if is_admissible_base(poly, o) and _fan_bounded(poly, o):
            out.append(o)
    return out


def _fan_bounded(poly, o, limit=1e3) -> bool:
    # reject nearly dangerous fans: their moments cancel with large roundoff
    n = len(poly)
    d = diameter(np.vstack([poly, o]))
    for i in range(n):
        a, b = poly[i] - o, poly[(i + 1) % n] - o
        area = abs(a[0] * b[1] - a[1] * b[0]) / 2
        if area == 0:
            continue
        r = np.linalg.norm(a) * np.linalg.norm(b) * np.linalg.norm(a - b) / (4 * area)
        if r > limit * d:
            return False
    return True


def admissible_polytope_bases(rng, p, count: int = 3) -> list[np.ndarray]:
    lo, hi = p.vertices.min(axis=0), p.vertices.max(axis=0)
    pad = 0.25 * (hi - lo)
    out = []
    while len(out) < count:
        o = rng.uniform(lo - pad, hi + pad)
        if is_admissible_polytope_base(p, o):
            out.append(o)
    return out


# ---------------------------------------------------------------------------
# suites

def suite_o_independence(rng, cases: int, result: SuiteResult) -> None:
    for k in range(cases):
        poly = samples.random_polygon(rng, int(rng.integers(3, 13)))
        d = diameter(poly)
        ref = ccm_closed_form(poly)
        for o in admissible_bases(rng, poly):
            result.check(f"polygon case {k} base {o.tolist()}", np.linalg.norm(ccm_fan(poly, o) - ref) / d, 1e-9)
    for k in range(max(1, cases // 2)):
        p = samples.random_polytope(rng, int(rng.integers(3, 5)))
        d = diameter(p.vertices)
        ref = ccm_polytope_closed_form(p)
        for o in admissible_polytope_bases(rng, p):
            result.check(f"polytope case {k} base {o.tolist()}", np.linalg.norm(ccm_polytope(p, o) - ref) / d, 1e-9)


def zero_area_piece_case() -> tuple[np.ndarray, int, int, np.ndarray]:
    """Right isosceles triangle cut from ``A`` to the foot ``D`` of the
    altitude and on to ``C``: the piece ``A D C`` has zero area but a
    circumcenter far from its neighbours' weighted average."""
    a, b, c = np.array([-1.0, 0.0]), np.array([0.0, 1.0]), np.array([1.0, 0.0])
    return np.array([a, b, c]), 0, 2, np.array([[0.0, 0.0]])


def suite_archimedes(rng, cases: int, result: SuiteResult) -> None:
    for k in range(cases):
        n = int(rng.integers(4, 11))
        poly = samples.random_convex_polygon(rng, n)
        i = int(rng.integers(n))
        j = (i + int(rng.integers(2, n - 1))) % n
        t = float(rng.uniform(-2, 4))
        got = archimedes_combine(poly, i, j, t=t)
        result.check(f"polygon case {k} cut {i}-{j} t={t:.3f}",
                     np.linalg.norm(got - c_t(poly, t)) / diameter(poly), 1e-9)
    for k in range(max(1, cases // 4)):
        s, q, r = samples.tetrahedron_split(rng)
        got = archimedes_combine_polytope(q, r)
        result.check(f"tetrahedron split {k}", np.linalg.norm(got - simplex_circumcenter(s)) / diameter(s), 1e-9)
        p = samples.random_polytope(rng, 3)
        v = int(rng.integers(len(p.vertices)))
        apex = p.vertices.mean(axis=0)
        q, r = samples.split_at_vertex(p, v, apex)
        if abs(polytope_volume(r)) < 1e-6 * diameter(p.vertices) ** 3:
            continue
        got = archimedes_combine_polytope(q, r)
        result.check(f"polytope split {k} vertex {v}",
                     np.linalg.norm(got - ccm_polytope_closed_form(p)) / diameter(p.vertices), 1e-9)
    poly, i, j, via = zero_area_piece_case()
    try:
        archimedes_combine(poly, i, j, via)
    except ZeroAreaPieceError as exc:
        result.expected_errors.append(f"zero-area piece: {exc.code}")
    else:
        result.failures.append("zero-area piece: combined without an error")


def suite_inscribed(rng, cases: int, result: SuiteResult) -> None:
    for k in range(cases):
        poly, center, radius = samples.random_cyclic_polygon(rng, int(rng.integers(3, 13)))
        result.check(f"cyclic polygon {k}", np.linalg.norm(ccm_closed_form(poly) - center) / radius, 1e-9)
    for k in range(max(1, cases // 4)):
        p, center, radius = samples.random_inscribed_polytope(rng, 3)
        result.check(f"inscribed polytope {k}", np.linalg.norm(ccm_polytope(p) - center) / radius, 1e-9)


def suite_equilateral(rng, cases: int, result: SuiteResult) -> None:
    for k in range(cases):
        poly = samples.random_equilateral_polygon(rng, int(rng.integers(3, 13)), rng.uniform(0.2, 5))
        result.check(f"equilateral polygon {k}",
                     np.linalg.norm(ccm_closed_form(poly) - cm_lamina(poly)) / diameter(poly), 1e-8)
    for k in range(max(1, cases // 2)):
        n = int(rng.integers(3, 10))
        poly = samples.random_equilateral_spherical_polygon(rng, n, rng.uniform(0.05, 0.5))
        err = _angle(spherical_ccm(poly).direction, spherical_polygon_lamina_cm(poly).direction)
        result.check(f"equilateral spherical polygon {k}", err / diameter(poly), 1e-8)


def planar_oval_centroid(radius, center) -> np.ndarray:
    """Quadrature centroid of the star-shaped region ``r <= radius(theta)``."""
    opts = {"epsabs": 1e-13, "epsrel": 1e-13, "limit": 200}
    area = quad(lambda t: radius(t) ** 2 / 2, 0, 2 * np.pi, **opts)[0]
    mx = quad(lambda t: radius(t) ** 3 / 3 * np.cos(t), 0, 2 * np.pi, **opts)[0]
    my = quad(lambda t: radius(t) ** 3 / 3 * np.sin(t), 0, 2 * np.pi, **opts)[0]
    return np.asarray(center, float) + np.array([mx, my]) / area


def spherical_cap_centroid(colatitude) -> np.ndarray:
    """Direction of the integral of the position vector over
    ``theta <= colatitude(phi)``, with the radial integrals done in closed form."""
    opts = {"epsabs": 1e-13, "epsrel": 1e-13, "limit": 200}

    def side(p):
        th = colatitude(p)
        return th / 2 - math.sin(2 * th) / 4

    v = np.array([
        quad(lambda p: side(p) * math.cos(p), 0, 2 * np.pi, **opts)[0],
        quad(lambda p: side(p) * math.sin(p), 0, 2 * np.pi, **opts)[0],
        quad(lambda p: math.sin(colatitude(p)) ** 2 / 2, 0, 2 * np.pi, **opts)[0],
    ])
    return v / np.linalg.norm(v)


CONVERGENCE_SIZES = (64, 128, 256, 512)


def planar_convergence(radius=samples.triangle_oval, center=(0.3, -0.2)) -> tuple[list, list]:
    oracle = planar_oval_centroid(radius, center)
    errors = [float(np.linalg.norm(curve_ccm(samples.sample_oval(n, radius, center)) - oracle))
              for n in CONVERGENCE_SIZES]
    return errors, [errors[i] / errors[i + 1] for i in range(len(errors) - 1)]


def spherical_convergence(colatitude=samples.spherical_oval_colatitude) -> tuple[list, list]:
    oracle = spherical_cap_centroid(colatitude)
    errors = [_angle(spherical_curve_ccm(samples.sample_spherical_oval(n, colatitude)).direction, oracle)
              for n in CONVERGENCE_SIZES]
    return errors, [errors[i] / errors[i + 1] for i in range(len(errors) - 1)]


def suite_continuous_limit(rng, cases: int, result: SuiteResult) -> None:
    for k in range(cases):
        a, b, c = rng.uniform(-0.2, 0.2, size=3)
        ph = rng.uniform(0, 2 * np.pi)

        def radius(t, a=a, b=b, c=c, ph=ph):
            return 1.0 + a * np.cos(t) + b * np.sin(2 * t + ph) + c * np.cos(3 * t)

        def colat(p, a=a, b=b, ph=ph):
            return 0.6 + 0.5 * a * np.cos(p) + 0.5 * b * np.sin(2 * p + ph)

        for label, (_, ratios) in (("planar", planar_convergence(radius)), ("spherical", spherical_convergence(colat))):
            worst = max(abs(r - 4.0) for r in ratios)
            result.check(f"{label} oval {k} ratios {[round(r, 3) for r in ratios]}", worst, 0.5)


def suite_euler_uniqueness(rng, cases: int, result: SuiteResult) -> None:
    lo, hi = 0.05, np.pi / 2 - 0.1
    for k in range(cases):
        t = float(rng.uniform(-5, 5))
        alpha, beta = rng.uniform(lo, hi, size=2)
        try:
            res = functional_eq_residual(euler_height_function(t), alpha, beta)
        except GeometryError:
            continue
        result.check(f"t={t:.4f} alpha={alpha:.4f} beta={beta:.4f}", abs(res), 1e-9)
    alpha, beta, _ = angles_from_tangents(1.0, 2.0)
    res = functional_eq_residual(lambda a: math.tan(a) ** 2, alpha, beta)
    result.cases += 1
    if not abs(res) > 1e-3:
        result.failures.append(f"tan^2 witness residual {res:.3e} not separated from zero")


def suite_spherical(rng, cases: int, result: SuiteResult) -> None:
    for k in range(cases):
        poly = samples.random_spherical_polygon(rng, int(rng.integers(3, 10)))
        ref = spherical_ccm(poly).direction
        axis = poly.mean(axis=0)
        for _ in range(3):
            w = samples.lift_to_sphere(rng.uniform(-0.5, 0.5, size=(1, 2)), axis)[0]
            result.check(f"spherical polygon {k} apex {w.tolist()}", _angle(spherical_ccm_fan(poly, w).direction, ref), 1e-9)
    exponent, _ = flat_limit_exponent(samples.random_convex_polygon(rng, 6) / 10)
    result.check(f"flat limit exponent {exponent:.3f}", abs(exponent - 2.0), 0.2)
    for label, v, want in minkowski_witnesses():
        result.cases += 1
        got = classify_minkowski(v)
        if got is not want:
            result.failures.append(f"minkowski {label}: classified {got.name}")


FLAT_SCALES = (1e-2, 1e-3)


def flat_limit_exponent(flat, axis=(0.0, 0.0, 1.0)) -> tuple[float, list[float]]:
    """Scale a planar polygon by ``delta`` onto the sphere and return the
    log-slope of the relative gnomonic discrepancy against the planar CCM."""
    flat = np.asarray(flat, float)
    ref = ccm_closed_form(flat)
    d = diameter(flat)
    rel = []
    for delta in FLAT_SCALES:
        sph = spherical_ccm(samples.lift_to_sphere(flat * delta, axis)).direction
        rel.append(float(np.linalg.norm(samples.gnomonic(sph, axis)[0] / delta - ref) / d))
    slope = math.log(rel[0] / rel[1]) / math.log(FLAT_SCALES[0] / FLAT_SCALES[1])
    return slope, rel


def minkowski_witnesses() -> list[tuple[str, np.ndarray, MinkowskiClass]]:
    """Cyclic cross sums whose Minkowski class is known by construction.

    A triangle on the hyperboloid gives a time-like sum.  Points of the
    hyperboloid on a plane tangent to the light cone, or on a plane through
    the origin, make the sum null or space-like.
    """
    from .spherical import minkowski_ccm

    tri = np.array([samples.hyperboloid_point(0.0, 0.0), samples.hyperboloid_point(1.0, 0.0),
                    samples.hyperboloid_point(0.0, 1.0)])
    # plane z - x = 1 is tangent to the light cone: its hyperbolic trace is a horocycle
    horo = samples.hyperboloid_plane_points((-1.0, 0.0, 1.0), 1.0, (-1.0, 0.5, 2.0))
    # plane x = 0.5 y through the origin cuts a geodesic
    geo = samples.hyperboloid_plane_points((1.0, -0.5, 0.0), 0.0, (-1.0, 0.3, 1.5))
    return [
        ("time-like", minkowski_ccm(tri).vector, MinkowskiClass.TIME_LIKE),
        ("null", minkowski_ccm(horo).vector, MinkowskiClass.NULL),
        ("space-like", minkowski_ccm(geo).vector, MinkowskiClass.SPACE_LIKE),
    ]


def suite_polytope(rng, cases: int, result: SuiteResult) -> None:
    from .polytope import simplex_boundary

    for k in range(cases):
        dim = int(rng.integers(2, 6))
        s = samples.random_simplex(rng, dim)
        d = diameter(s)
        result.check(f"simplex dim {dim} case {k}",
                     np.linalg.norm(ccm_polytope(simplex_boundary(s)) - simplex_circumcenter(s)) / d, 1e-9)
        p = samples.random_polytope(rng, int(rng.integers(3, 5)))
        result.check(f"polytope closed form case {k}",
                     np.linalg.norm(ccm_polytope(p) - ccm_polytope_closed_form(p)) / diameter(p.vertices), 1e-9)
        tet = samples.random_simplex(rng, 3)
        result.check(f"monge case {k}",
                     np.linalg.norm(monge_point(simplex_boundary(tet)) - monge_plane_oracle(tet)) / diameter(tet), 1e-8)


def monge_plane_oracle(tet) -> np.ndarray:
    """Common point of the six planes through each edge midpoint normal to
    the opposite edge, solved by least squares."""
    tet = np.asarray(tet, float)
    rows, rhs = [], []
    for i in range(4):
        for j in range(i + 1, 4):
            k, m = [x for x in range(4) if x not in (i, j)]
            normal = tet[m] - tet[k]
            rows.append(normal)
            rhs.append(normal @ (tet[i] + tet[j]) / 2)
    return np.linalg.lstsq(np.array(rows), np.array(rhs), rcond=None)[0]


def suite_symmetry(rng, cases: int, result: SuiteResult) -> None:
    for k in range(cases):
        poly, mirror = samples.random_mirror_polygon(rng, int(rng.integers(2, 7)))
        report = symmetry_diagnostics(poly, mirror=mirror)
        result.check(f"mirror polygon {k}", report.mirror_distance / diameter(poly), 1e-9)

        poly, center = samples.random_rotational_polygon(rng, int(rng.integers(1, 4)), int(rng.integers(3, 7)))
        line = euler_line(poly)
        spread = max(np.linalg.norm(line.ccm - center), np.linalg.norm(line.cm - center)) / diameter(poly)
        result.check(f"rotational polygon {k}", spread, 1e-9)
        if not line.degenerate:
            result.failures.append(f"rotational polygon {k}: Euler line not flagged degenerate")

        quad4 = samples.random_three_equal_quadrilateral(rng)
        report = symmetry_diagnostics(quad4)
        if report.odd_side is None:
            result.failures.append(f"quadrilateral {k}: odd side not detected")
            continue
        result.check(f"quadrilateral {k}", abs(abs(report.odd_side_angle) - math.pi / 2), 1e-9)


SUITES = {
    "o-independence": suite_o_independence,
    "archimedes": suite_archimedes,
    "inscribed": suite_inscribed,
    "equilateral": suite_equilateral,
    "continuous-limit": suite_continuous_limit,
    "euler-uniqueness": suite_euler_uniqueness,
    "spherical": suite_spherical,
    "polytope": suite_polytope,
    "symmetry": suite_symmetry,
}


def run_suite(name: str, seed: int = 0, cases: int = 100) -> SuiteResult:
    """Run one suite; unexpected geometry errors are recorded as failures."""
    if name not in SUITES:
        raise UnknownSuiteError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if cases < 1:
        raise ValueError("cases must be positive")
    result = SuiteResult(suite=name, seed=seed)
    try:
        SUITES[name](np.random.default_rng(seed), cases, result)
    except GeometryError as exc:
        result.failures.append(f"unexpected {exc.code}: {exc}")
    return result


__all__ = [
    "SUITES",
    "SuiteResult",
    "flat_limit_exponent",
    "minkowski_witnesses",
    "monge_plane_oracle",
    "planar_convergence",
    "planar_oval_centroid",
    "run_suite",
    "spherical_cap_centroid",
    "spherical_convergence",
    "zero_area_piece_case",
]
