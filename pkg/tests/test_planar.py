import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from oracles import (
    altitude_orthocenter,
    fan_ccm,
    polar_region_centroid,
    triangle_fan_centroid,
)

from ccm import samples
from ccm.core import circumcenter, diameter
from ccm.errors import (
    DangerousTriangulationError,
    InvalidCutError,
    ParallelBisectorsError,
    ZeroAreaError,
    ZeroAreaPieceError,
)
from ccm.planar import (
    archimedes_combine,
    c_t,
    ccm_closed_form,
    ccm_fan,
    ccm_quadrilateral_bisectors,
    ccm_rotated,
    cm_lamina,
    curve_ccm,
    default_base_point,
    euler_line,
    is_admissible_base,
    polygon_area,
    split_polygon,
    subtriangle_distance_ratios,
    symmetry_diagnostics,
)

seeds = st.integers(0, 2**32 - 1)
SQUARE = np.array([(1, 1), (-1, 1), (-1, -1), (1, -1)], float)
RIGHT = np.array([(0, 0), (4, 0), (0, 3)], float)
BOWTIE = np.array([(0, 0), (1, 1), (1, 0), (0, 1)], float)


def close(a, b, scale=1.0, rel=1e-9):
    assert np.linalg.norm(np.asarray(a) - np.asarray(b)) <= rel * scale, (a, b)


# fan and closed form

def test_fan_examples():
    close(ccm_fan(SQUARE, (0.3, 0.2)), (0, 0))
    close(ccm_fan(RIGHT, RIGHT.mean(axis=0)), (2, 1.5))


def test_fan_rejects_base_on_side_line():
    with pytest.raises(DangerousTriangulationError):
        ccm_fan(SQUARE, (3.0, 1.0))
    assert not is_admissible_base(SQUARE, (3.0, 1.0))


def test_fan_skips_safe_degenerate_triangles():
    # base point at a vertex: two fan triangles collapse safely
    close(ccm_fan(SQUARE, (1.0, 1.0)), (0, 0))


def test_zero_area_polygon():
    with pytest.raises(ZeroAreaError) as info:
        ccm_closed_form(BOWTIE)
    assert info.value.code == "ZeroArea"
    with pytest.raises(ZeroAreaError):
        ccm_fan(BOWTIE, (0.5, 0.2))


def test_pentagon_two_bases():
    pent = np.array([(0, 0), (3, -1), (4, 2), (1.5, 3.5), (-1, 2)], float)
    a, b = ccm_fan(pent, (1.0, 1.0)), ccm_fan(pent, (2.0, 0.5))
    close(a, b, diameter(pent))
    close(a, ccm_closed_form(pent), diameter(pent))


@given(seeds)
def test_fan_independent_of_base(seed):
    rng = np.random.default_rng(seed)
    poly = samples.random_polygon(rng, int(rng.integers(3, 13)))
    d = diameter(poly)
    ref = ccm_closed_form(poly)
    for o in rng.uniform(-12, 12, size=(3, 2)):
        if is_admissible_base(poly, o):
            close(ccm_fan(poly, o), ref, d, 1e-8)


@given(seeds)
def test_closed_form_matches_fan_oracle(seed):
    rng = np.random.default_rng(seed)
    poly = samples.random_polygon(rng, 6)
    close(ccm_closed_form(poly), fan_ccm(poly, np.zeros(2)), diameter(poly), 1e-8)


@given(seeds)
def test_rotated_vector_turns_back(seed):
    poly = samples.random_polygon(np.random.default_rng(seed), 7)
    rot = ccm_rotated(poly)
    close(np.array([rot[1], -rot[0]]), ccm_closed_form(poly), diameter(poly))


def test_triangle_closed_form_is_circumcenter():
    rng = np.random.default_rng(5)
    for _ in range(20):
        tri = samples.random_polygon(rng, 3)
        close(ccm_closed_form(tri), circumcenter(tri), diameter(tri))


def test_default_base_point_is_centroid_when_admissible():
    np.testing.assert_allclose(default_base_point(SQUARE), [0, 0])


def test_default_base_point_moves_off_side_lines():
    # the vertex centroid (0, 0) lies on the line of the side through (-1,0),(3,0)
    poly = np.array([(-1, 0), (3, 0), (2, 2), (-4, -2)], float)
    o = default_base_point(poly)
    assert is_admissible_base(poly, o)
    close(ccm_fan(poly, o), ccm_closed_form(poly), diameter(poly))


# centroid and C_t

def test_cm_examples():
    close(cm_lamina(SQUARE), (0, 0))
    close(cm_lamina([(0, 0), (3, 0), (0, 3)]), (1, 1))


def test_cm_l_shape_against_decomposition():
    ell = [(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)]
    # rectangles [0,2]x[0,1] (area 2) and [0,1]x[1,2] (area 1)
    expected = (2 * np.array([1.0, 0.5]) + 1 * np.array([0.5, 1.5])) / 3
    close(cm_lamina(ell), expected)
    close(cm_lamina(ell), (5 / 6, 5 / 6))


@given(seeds)
def test_cm_matches_triangle_oracle(seed):
    poly = samples.random_polygon(np.random.default_rng(seed), 8)
    close(cm_lamina(poly), triangle_fan_centroid(poly), diameter(poly), 1e-8)


def test_c_t_triangle():
    close(c_t(RIGHT, 0), (2, 1.5))
    close(c_t(RIGHT, 1), (4 / 3, 1))
    close(c_t(RIGHT, 3), (0, 0))


def test_c_t_rejects_non_finite():
    with pytest.raises(ValueError):
        c_t(RIGHT, math.nan)


@given(seeds)
def test_orthocenter_is_c3(seed):
    tri = samples.random_polygon(np.random.default_rng(seed), 3)
    close(c_t(tri, 3), altitude_orthocenter(*tri), diameter(tri), 1e-8)
    close(c_t(tri, 1), tri.mean(axis=0), diameter(tri))


@given(seeds)
def test_equivariance_and_dilation(seed):
    rng = np.random.default_rng(seed)
    poly = samples.random_polygon(rng, int(rng.integers(3, 10)))
    rot, shift, lam = samples.random_rotation(rng, 2), rng.uniform(-20, 20, 2), rng.uniform(0.1, 10)
    t = rng.uniform(-3, 3)
    d = diameter(poly)
    close(c_t(poly @ rot.T + shift, t), rot @ c_t(poly, t) + shift, d, 1e-8)
    close(c_t(lam * poly, t), lam * c_t(poly, t), lam * d, 1e-8)


def test_translation_example():
    shift = np.array([3.0, -7.0])
    pent = np.array([(0, 0), (3, -1), (4, 2), (1.5, 3.5), (-1, 2)], float)
    close(ccm_closed_form(pent + shift), ccm_closed_form(pent) + shift, 10)


@given(seeds)
def test_equilateral_polygon_ccm_equals_cm(seed):
    rng = np.random.default_rng(seed)
    poly = samples.random_equilateral_polygon(rng, int(rng.integers(3, 12)), rng.uniform(0.1, 5))
    close(ccm_closed_form(poly), cm_lamina(poly), diameter(poly), 1e-8)
    t = rng.uniform(-2, 4)
    close(c_t(poly, t), cm_lamina(poly), diameter(poly), 1e-8)


@given(seeds)
def test_cyclic_polygon_ccm_is_center(seed):
    poly, center, radius = samples.random_cyclic_polygon(np.random.default_rng(seed), 7)
    close(ccm_closed_form(poly), center, radius)


# Euler line

def test_euler_line_examples():
    assert euler_line([(2, 0), (0, 1), (-2, 0), (0, -1)]).degenerate
    assert euler_line(SQUARE).degenerate
    iso = np.array([(-1, 0), (1, 0), (0, 3)], float)
    line = euler_line(iso)
    assert not line.degenerate
    assert abs(line.ccm[0]) < 1e-12 and abs(line.cm[0]) < 1e-12
    np.testing.assert_allclose(abs(line.direction), [0, 1], atol=1e-12)
    quad = [(0, 0), (4, 0), (5, 3), (1, 2)]
    assert not euler_line(quad).degenerate
    np.testing.assert_allclose(euler_line(quad).point(3), c_t(quad, 3))


# quadrilaterals

def test_bisector_examples():
    close(ccm_quadrilateral_bisectors(*SQUARE), (0, 0))
    quad = [(0, 0), (4, 0), (5, 3), (1, 2)]
    close(ccm_quadrilateral_bisectors(*quad), ccm_closed_form(quad), 5)
    with pytest.raises(ParallelBisectorsError):
        ccm_quadrilateral_bisectors(*BOWTIE)


@given(seeds)
def test_bisectors_match_closed_form(seed):
    quad = samples.random_polygon(np.random.default_rng(seed), 4)
    close(ccm_quadrilateral_bisectors(*quad), ccm_closed_form(quad), diameter(quad), 1e-8)


@pytest.mark.parametrize("t", [0.0, 1.0, 2.5])
def test_subtriangle_distance_identities(t):
    rng = np.random.default_rng(11)
    for _ in range(10):
        a, b, c, d = samples.random_convex_polygon(rng, 4)
        da, db, dc, dd = subtriangle_distance_ratios(a, b, c, d, t)
        area = lambda *tri: abs(polygon_area(np.array(tri)))
        assert da * area(b, c, d) == pytest.approx(dc * area(d, a, b), rel=1e-8)
        assert db * area(c, d, a) == pytest.approx(dd * area(a, b, c), rel=1e-8)


def test_subtriangle_square_symmetric():
    dist = subtriangle_distance_ratios(*SQUARE, t=0)
    assert max(dist) - min(dist) < 1e-12


# Archimedes

def test_square_diagonal_cut():
    close(archimedes_combine(SQUARE, 0, 2), (0, 0))
    q, r = split_polygon(SQUARE, 0, 2)
    assert len(q) == 3 and len(r) == 3
    assert polygon_area(q) + polygon_area(r) == pytest.approx(polygon_area(SQUARE))


def test_pentagon_polyline_cut():
    pent = np.array([(0, 0), (4, 0), (5, 3), (2, 5), (-1, 3)], float)
    got = archimedes_combine(pent, 0, 3, via=[(2.5, 1.5), (2.0, 3.0)])
    close(got, ccm_closed_form(pent), diameter(pent))


def test_invalid_cuts():
    with pytest.raises(InvalidCutError):
        split_polygon(SQUARE, 1, 1)
    with pytest.raises(InvalidCutError):
        split_polygon(SQUARE, 0, 9)
    with pytest.raises(InvalidCutError):
        split_polygon(SQUARE, 0, 1)


def test_hidden_degenerate_piece():
    # right isosceles triangle A B C, altitude foot D; cut A -> D -> C
    a, b, c = (-1.0, 0.0), (0.0, 1.0), (1.0, 0.0)
    tri = np.array([a, b, c])
    with pytest.raises(ZeroAreaPieceError) as info:
        archimedes_combine(tri, 0, 2, via=[(0.0, 0.0)])
    assert info.value.code == "ZeroAreaPiece"
    close(archimedes_combine(tri, 0, 2, via=[(0.0, 0.0)], retain_degenerate=True), (0, 0))
    # dropping the flat piece gives a wrong answer: ABD alone is centered at (-1/2, 1/2)
    q, _ = split_polygon(tri, 0, 2, [(0.0, 0.0)])
    assert np.linalg.norm(ccm_closed_form(q) - (0, 0)) > 0.1


@given(seeds)
def test_archimedes_random_cuts(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(4, 10))
    poly = samples.random_convex_polygon(rng, n)
    i = int(rng.integers(n))
    j = (i + int(rng.integers(2, n - 1))) % n
    for t in (0.0, 1.0, rng.uniform(-2, 4)):
        close(archimedes_combine(poly, i, j, t=t), c_t(poly, t), diameter(poly))


# continuous limit

def test_circle_and_ellipse_samples():
    th = 2 * np.pi * np.arange(256) / 256
    circle = np.column_stack([2 + 3 * np.cos(th), 3 + 3 * np.sin(th)])
    close(curve_ccm(circle), (2, 3), rel=1e-6)
    th = 2 * np.pi * np.arange(512) / 512
    ellipse = np.column_stack([-1 + 4 * np.cos(th), 4 + 1.5 * np.sin(th)])
    close(curve_ccm(ellipse), (-1, 4), rel=1e-6)


def test_curve_needs_enough_samples():
    with pytest.raises(ValueError):
        curve_ccm(samples.sample_oval(8))


def test_oval_converges_quadratically_to_region_centroid():
    oracle = polar_region_centroid(samples.triangle_oval, (0.3, -0.2))
    errors = [np.linalg.norm(curve_ccm(samples.sample_oval(n)) - oracle) for n in (64, 128, 256)]
    assert errors[2] < 1e-5
    slope = np.polyfit(np.log([64, 128, 256]), np.log(errors), 1)[0]
    assert -2.2 < slope < -1.8


# symmetry

def test_isosceles_mirror():
    iso = np.array([(-1, 0), (1, 0), (0.2, 3)]) @ samples.random_rotation(np.random.default_rng(0), 2).T
    # rebuild a genuinely symmetric triangle: apex on the perpendicular bisector of the base
    base_mid = (iso[0] + iso[1]) / 2
    axis = np.array([-(iso[1] - iso[0])[1], (iso[1] - iso[0])[0]])
    tri = np.array([iso[0], iso[1], base_mid + 1.7 * axis])
    report = symmetry_diagnostics(tri, mirror=(base_mid, axis))
    assert report.on_mirror
    assert report.mirror_distance < 1e-9 * diameter(tri)


def test_centrally_symmetric_hexagon():
    hexagon = np.array([(2, 0), (1, 1.5), (-1, 1.2), (-2, 0), (-1, -1.5), (1, -1.2)], float) + (4, -1)
    line = euler_line(hexagon)
    assert line.degenerate
    close(line.ccm, (4, -1), 4)
    close(line.cm, (4, -1), 4)


def test_three_equal_sides_orthogonal():
    rng = np.random.default_rng(3)
    for _ in range(10):
        quad = samples.random_three_equal_quadrilateral(rng)
        report = symmetry_diagnostics(quad)
        assert report.odd_side == 3
        assert abs(report.odd_side_angle - math.pi / 2) < 1e-9


@given(seeds)
def test_mirror_polygons(seed):
    poly, mirror = samples.random_mirror_polygon(np.random.default_rng(seed), 4)
    assert symmetry_diagnostics(poly, mirror=mirror).mirror_distance < 1e-9 * diameter(poly)
