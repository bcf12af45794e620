import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from oracles import angle_between, spherical_region_moment, spherical_triangle_moment

from ccm import samples
from ccm.core import diameter
from ccm.errors import (
    AntipodalPairError,
    BalancedConfigurationError,
    ConstraintViolationError,
    DegenerateBoundaryError,
    DegeneratePolygonError,
    GreatCircleDegenerateError,
)
from ccm.planar import ccm_closed_form
from ccm.polytope import simplex_boundary
from ccm.spherical import (
    MassedDirection,
    MinkowskiClass,
    as_spherical_polygon,
    classify_minkowski,
    generalized_cross,
    minkowski_ccm,
    minkowski_cross,
    minkowski_form,
    spherical_ccm,
    spherical_ccm_fan,
    spherical_ccm_polytope,
    spherical_ccm_polytope_fan,
    spherical_circumcenter,
    spherical_curve_ccm,
    spherical_distance,
    spherical_mass_center,
    spherical_polygon_lamina_cm,
    spherical_triangle_lamina_cm,
)

seeds = st.integers(0, 2**32 - 1)
E = np.eye(3)


def unit(v):
    v = np.asarray(v, float)
    return v / np.linalg.norm(v)


def ring(colatitude, n, phase=0.0):
    phi = phase + 2 * np.pi * np.arange(n) / n
    return np.column_stack([np.sin(colatitude) * np.cos(phi), np.sin(colatitude) * np.sin(phi),
                            np.full(n, np.cos(colatitude))])


# circumcenters and masses

def test_octant_circumcenter():
    c = spherical_circumcenter(*E)
    np.testing.assert_allclose(c.direction, unit((1, 1, 1)), atol=1e-15)
    assert c.mass == pytest.approx(math.sqrt(3))
    flipped = spherical_circumcenter(E[0], E[2], E[1])
    np.testing.assert_allclose(flipped.direction, -unit((1, 1, 1)), atol=1e-15)


def test_great_circle_degenerate():
    with pytest.raises(GreatCircleDegenerateError):
        spherical_circumcenter(E[0], E[0], E[1])


@given(seeds)
def test_circumcenter_equidistant(seed):
    rng = np.random.default_rng(seed)
    tri = samples.random_spherical_polygon(rng, 3)
    c = spherical_circumcenter(*tri).direction
    d = [spherical_distance(c, v) for v in tri]
    assert max(d) - min(d) < 1e-9


def test_mass_center_examples():
    m = spherical_mass_center([MassedDirection(E[0], 1), MassedDirection(E[1], 1)])
    np.testing.assert_allclose(m.direction, unit((1, 1, 0)))
    with pytest.raises(BalancedConfigurationError):
        spherical_mass_center([MassedDirection(E[2], 2), MassedDirection(-E[2], 2)])


def test_massed_direction_validation():
    with pytest.raises(ValueError):
        MassedDirection(E[0], -1.0)
    with pytest.raises(ValueError):
        MassedDirection((1.0, 1.0, 0.0), 1.0)


@given(seeds)
def test_mass_center_associative(seed):
    rng = np.random.default_rng(seed)
    pts = [MassedDirection(samples.random_unit(rng), m) for m in rng.uniform(0.5, 2, 3)]
    pair = spherical_mass_center(pts[:2])
    np.testing.assert_allclose(spherical_mass_center([pair, pts[2]]).direction,
                               spherical_mass_center(pts).direction, atol=1e-12)


def test_spherical_distance_accuracy():
    assert spherical_distance(E[0], unit((1, 1e-9, 0))) == pytest.approx(1e-9, rel=1e-9)
    assert spherical_distance(E[0], unit((-1, 1e-9, 0))) == pytest.approx(math.pi - 1e-9, rel=1e-12)


# laminas

def test_octant_lamina():
    np.testing.assert_allclose(spherical_triangle_lamina_cm(*E).direction, unit((1, 1, 1)), atol=1e-15)


def test_tiny_triangle_flat_limit():
    flat = np.array([(0, 0), (1e-3, 0), (0.3e-3, 0.8e-3)])
    tri = samples.lift_to_sphere(flat)
    lam = spherical_triangle_lamina_cm(*tri)
    centroid = samples.lift_to_sphere(flat.mean(axis=0, keepdims=True))[0]
    assert angle_between(lam.direction, centroid) < 1e-8
    # the lamina vector counts area twice, like the circumcenter mass
    assert lam.mass / (0.5 * 1e-3 * 0.8e-3) == pytest.approx(2.0, rel=1e-5)


def test_random_triangle_against_quadrature():
    rng = np.random.default_rng(2)
    for _ in range(3):
        tri = samples.random_spherical_polygon(rng, 3, spread=0.8)
        moment = spherical_triangle_moment(*tri)
        lam = spherical_triangle_lamina_cm(*tri)
        assert angle_between(lam.direction, moment) < 1e-9
        assert lam.mass == pytest.approx(2 * np.linalg.norm(moment), rel=1e-8)


def test_antipodal_neighbours_rejected():
    with pytest.raises(AntipodalPairError):
        as_spherical_polygon([E[0], -E[0], E[1]])
    with pytest.raises(AntipodalPairError):
        spherical_triangle_lamina_cm(E[0], -E[0], E[1])


def test_polygon_lamina_apex_free():
    rng = np.random.default_rng(8)
    poly = samples.random_spherical_polygon(rng, 6)
    w = unit(poly.mean(axis=0) + 0.1 * rng.normal(size=3))
    a, b = spherical_polygon_lamina_cm(poly), spherical_polygon_lamina_cm(poly, w)
    assert angle_between(a.direction, b.direction) < 1e-12
    assert a.mass == pytest.approx(b.mass, rel=1e-12)


# circumcenter of mass

def test_spherical_square():
    np.testing.assert_allclose(spherical_ccm(ring(0.7, 4)).direction, (0, 0, 1), atol=1e-15)


def test_vanishing_sum_rejected():
    # centrally symmetric bowtie: the two loops cancel
    bowtie = np.array([(0, 0), (1, 1), (1, 0), (0, 1)], float) - 0.5
    with pytest.raises(DegeneratePolygonError):
        spherical_ccm(samples.lift_to_sphere(0.5 * bowtie))


def test_equator_bounds_a_hemisphere():
    np.testing.assert_allclose(spherical_ccm(ring(math.pi / 2, 6)).direction, (0, 0, 1), atol=1e-15)


@given(seeds)
def test_apex_identity_and_independence(seed):
    rng = np.random.default_rng(seed)
    poly = samples.random_spherical_polygon(rng, int(rng.integers(3, 9)))
    nxt = np.roll(poly, -1, axis=0)
    w = samples.random_unit(rng)
    residual = np.sum(np.cross(w, poly) + np.cross(nxt, w), axis=0)
    assert np.linalg.norm(residual) < 1e-14 * len(poly)
    ref = spherical_ccm(poly).direction
    for _ in range(3):
        apex = samples.lift_to_sphere(rng.uniform(-0.5, 0.5, size=(1, 2)), poly.mean(axis=0))[0]
        assert angle_between(spherical_ccm_fan(poly, apex).direction, ref) < 1e-9


@given(seeds)
def test_rotation_equivariance(seed):
    rng = np.random.default_rng(seed)
    poly = samples.random_spherical_polygon(rng, 5)
    rot = samples.random_rotation(rng, 3)
    got = spherical_ccm(poly @ rot.T).direction
    np.testing.assert_allclose(got, rot @ spherical_ccm(poly).direction, atol=1e-12)


@given(seeds)
def test_equilateral_ccm_equals_lamina(seed):
    rng = np.random.default_rng(seed)
    side = rng.uniform(0.05, 0.5)
    poly = samples.random_equilateral_spherical_polygon(rng, int(rng.integers(3, 9)), side)
    arcs = [spherical_distance(a, b) for a, b in zip(poly, np.roll(poly, -1, axis=0))]
    assert np.ptp(arcs) < 1e-9 * side
    assert angle_between(spherical_ccm(poly).direction, spherical_polygon_lamina_cm(poly).direction) < 1e-9


def test_flat_limit_is_quadratic():
    flat = np.array([(0.0, 0.0), (1.0, -0.2), (1.3, 0.7), (0.4, 1.1), (-0.3, 0.5)])
    ref = ccm_closed_form(flat)
    rel = []
    for delta in (1e-2, 1e-3):
        sph = spherical_ccm(samples.lift_to_sphere(flat * delta)).direction
        rel.append(np.linalg.norm(samples.gnomonic(sph)[0] / delta - ref) / diameter(flat))
    slope = math.log(rel[0] / rel[1]) / math.log(10)
    assert 1.8 < slope < 2.2
    assert rel[1] < 1e-5


# curves

def test_circle_samples():
    np.testing.assert_allclose(spherical_curve_ccm(ring(0.9, 256)).direction, (0, 0, 1), atol=1e-14)
    u = unit((0.3, -1.0, 0.4))
    frame = samples.tangent_frame(u)
    circle = ring(0.4, 64) @ frame
    np.testing.assert_allclose(spherical_curve_ccm(circle).direction, u, atol=1e-14)
    with pytest.raises(ValueError):
        spherical_curve_ccm(ring(0.4, 8))


def test_spherical_oval_against_quadrature():
    oracle = spherical_region_moment(samples.spherical_oval_colatitude)
    errors = [angle_between(spherical_curve_ccm(samples.sample_spherical_oval(n)).direction, oracle)
              for n in (64, 128, 256)]
    slope = np.polyfit(np.log([64, 128, 256]), np.log(errors), 1)[0]
    assert -2.2 < slope < -1.8
    assert errors[-1] < 1e-5


# higher dimensions

def test_generalized_cross_examples():
    np.testing.assert_allclose(generalized_cross([E[0], E[1]]), E[2])
    np.testing.assert_allclose(generalized_cross([(1, 2, 3), (2, 4, 6)]), 0, atol=1e-14)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_generalized_cross_determinant_identity(n):
    rng = np.random.default_rng(n)
    vs = rng.normal(size=(n, n + 1))
    xi = rng.normal(size=n + 1)
    x = generalized_cross(vs)
    assert x @ xi == pytest.approx(np.linalg.det(np.vstack([vs, xi])), rel=1e-10)
    swapped = vs.copy()
    swapped[[0, 1]] = swapped[[1, 0]]
    np.testing.assert_allclose(generalized_cross(swapped), -x, atol=1e-12)
    np.testing.assert_allclose(x @ vs.T, 0, atol=1e-12)


def test_polygon_as_arc_boundary():
    rng = np.random.default_rng(12)
    poly = samples.random_spherical_polygon(rng, 6)
    arcs = [(i, (i + 1) % 6) for i in range(6)]
    a = spherical_ccm_polytope(poly, arcs).direction
    assert angle_between(a, spherical_ccm(poly).direction) < 1e-12
    np.testing.assert_allclose(spherical_ccm_polytope(ring(0.5, 4), [(i, (i + 1) % 4) for i in range(4)]).direction,
                               (0, 0, 1), atol=1e-15)


def _cap_on_s3(theta, offsets):
    """Points of S^3 tilted from the pole e4 towards the given 3-D offsets."""
    offsets = np.asarray(offsets, float)
    offsets = offsets / np.linalg.norm(offsets, axis=1, keepdims=True)
    return np.column_stack([math.sin(theta) * offsets, np.full(len(offsets), math.cos(theta))])


def test_symmetric_cross_polytope_on_s3():
    octa = samples.octahedron_boundary()
    verts = _cap_on_s3(0.6, octa.vertices)
    got = spherical_ccm_polytope(verts, octa.facets).direction
    np.testing.assert_allclose(got, (0, 0, 0, 1), atol=1e-14)


def test_s3_tetrahedron_apex_independent():
    rng = np.random.default_rng(21)
    for _ in range(5):
        s = samples.random_simplex(rng, 3) * 0.1
        bound = simplex_boundary(s)
        lifted = np.column_stack([s, np.ones(4)])
        verts = lifted / np.linalg.norm(lifted, axis=1, keepdims=True)
        ref = spherical_ccm_polytope(verts, bound.facets).direction
        for _ in range(2):
            w = np.append(0.05 * rng.normal(size=3), 1.0)
            w /= np.linalg.norm(w)
            got = spherical_ccm_polytope_fan(verts, bound.facets, w).direction
            assert np.linalg.norm(got - ref) < 1e-9


def test_cancelling_facets_are_degenerate():
    # an arc traversed both ways encloses nothing
    with pytest.raises(DegenerateBoundaryError):
        spherical_ccm_polytope(E, [(0, 2), (2, 0)])


# hyperboloid

def plane_points(normal, offset, ys):
    return samples.hyperboloid_plane_points(normal, offset, ys)


def test_minkowski_cross_and_form():
    a, b = samples.hyperboloid_point(0.3, 0.1), samples.hyperboloid_point(-0.5, 0.7)
    c = minkowski_cross(a, b)
    # Minkowski-orthogonal to both factors
    for v in (a, b):
        assert c[2] * v[2] - c[0] * v[0] - c[1] * v[1] == pytest.approx(0, abs=1e-12)
    assert minkowski_form(samples.hyperboloid_point(2.0, -1.0)) == pytest.approx(1.0)


def test_rotation_symmetric_polygon_is_time_like():
    pts = np.array([samples.hyperboloid_point(0.8 * math.cos(a), 0.8 * math.sin(a))
                    for a in 2 * np.pi * np.arange(5) / 5])
    center = minkowski_ccm(pts)
    assert center.kind is MinkowskiClass.TIME_LIKE
    np.testing.assert_allclose(center.point, (0, 0, 1), atol=1e-14)


def test_equidistant_is_space_like():
    # plane x = 0.5 is steeper than the light cone: its trace is an equidistant curve
    thin = plane_points((1.0, 0.0, 0.0), 0.5, (-3.0, 0.1, 2.5))
    center = minkowski_ccm(thin)
    assert center.kind is MinkowskiClass.SPACE_LIKE
    assert center.point is None
    assert minkowski_form(center.vector) < 0


def test_horocycle_is_null():
    horo = plane_points((-1.0, 0.0, 1.0), 1.0, (-1.0, 0.5, 2.0))
    assert minkowski_ccm(horo).kind is MinkowskiClass.NULL


def test_off_hyperboloid_rejected():
    with pytest.raises(ConstraintViolationError):
        minkowski_ccm([(0, 0, 1), (1, 0, 1), (0, 1, 2)])


def test_classify_thresholds():
    assert classify_minkowski((0, 0, 1)) is MinkowskiClass.TIME_LIKE
    assert classify_minkowski((1, 0, 0)) is MinkowskiClass.SPACE_LIKE
    assert classify_minkowski((1, 0, 1 + 1e-12)) is MinkowskiClass.NULL
