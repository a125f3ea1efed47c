import math
from fractions import Fraction

import pytest

from conftest import box, q
from diamax import (EuclideanNorm, MaxNorm, PreconditionError, SumNorm, ball, chebyshev,
                    convex_hull, diam, diameter, farthest_radius, hausdorff, inner_radius,
                    point_dist, self_radius)
from diamax.metrics import min_enclosing_disk

M, S = MaxNorm(), SumNorm()


def lattice(body, step=Fraction(1, 8)):
    """Rational points of a planar body on a fine lattice: a brute-force oracle."""
    from diamax import contains

    (x0, y0), (x1, y1) = body.bounding_box()
    nx, ny = int((x1 - x0) / step), int((y1 - y0) / step)
    pts = [(x0 + i * step, y0 + j * step) for i in range(nx + 1) for j in range(ny + 1)]
    return [p for p in pts if contains(body, p)]


# ---- diameter


def test_sum_triangle_diameter(ex1b_triangle):
    assert diameter(ex1b_triangle, S).value == 2


def test_max_triangle_diameter(ex2_triangle):
    assert diameter(ex2_triangle, M).value == 1


def test_segment_witness(segment):
    res = diameter(segment, M)
    assert res.value == 1
    assert res.witness == (q(0, 0), q(1, 0))


def test_witness_is_lexicographically_least(unit_square):
    assert diameter(unit_square, M).witness == (q(0, 0), q(0, 1))


def test_singleton_has_no_diameter():
    with pytest.raises(PreconditionError):
        diameter(convex_hull([q(0, 0)]), M)
    assert diam(convex_hull([q(0, 0)]), M) == 0


# ---- farthest radius


def test_farthest_from_unique_center(ex1b_triangle):
    assert farthest_radius(ex1b_triangle, q(1, 1, 1), S) == 1


def test_farthest_from_origin(ex1b_triangle):
    # oracle: each vertex has coordinate sum 2
    assert farthest_radius(ex1b_triangle, q(0, 0, 0), S) == max(sum(v) for v in ex1b_triangle.vertices)


def test_vertex_radius_bounded_by_diameter(ex2_triangle):
    for v in ex2_triangle.vertices:
        assert farthest_radius(ex2_triangle, v, M) <= diam(ex2_triangle, M)


# ---- Chebyshev radius and centers


def test_unique_center_in_sum_norm(ex1b_triangle):
    cs = chebyshev(ex1b_triangle, S)
    assert cs.radius == 1
    assert cs.centers == convex_hull([q(1, 1, 1)])


def test_segment_centers_form_vertical_segment(segment):
    cs = chebyshev(segment, M)
    assert cs.radius == Fraction(1, 2)
    assert cs.centers == convex_hull([q("1/2", "-1/2"), q("1/2", "1/2")])
    # oracle: lattice points of a big box that reach radius 1/2
    hits = [x for x in lattice(box((-1, -1), (2, 1))) if farthest_radius(segment, x, M) == Fraction(1, 2)]
    assert min(hits) == q("1/2", "-1/2") and max(hits) == q("1/2", "1/2")


def test_ball_is_its_own_center():
    cs = chebyshev(ball(M, q(0, 0), 1), M)
    assert cs.radius == 1
    assert cs.centers.vertices == (q(0, 0),)


def test_center_vertices_attain_the_radius(ex2_triangle):
    cs = chebyshev(ex2_triangle, M)
    assert all(farthest_radius(ex2_triangle, c, M) == cs.radius for c in cs.centers.vertices)


def test_euclidean_center_is_single_and_flagged():
    cs = chebyshev(convex_hull([(0.0, 0.0), (2.0, 0.0), (1.0, 1.0)]), EuclideanNorm())
    assert cs.radius == pytest.approx(1.0)
    assert not cs.multiplicity_known
    assert len(cs.centers.vertices) == 1


def test_welzl_on_equilateral_triangle():
    c, r = min_enclosing_disk([(-1.0, 0.0), (1.0, 0.0), (0.0, math.sqrt(3))])
    assert r == pytest.approx(2 / math.sqrt(3))
    assert c[1] == pytest.approx(1 / math.sqrt(3))


# ---- self radius


def test_self_radius_of_triangle(ex2_triangle):
    assert self_radius(ex2_triangle, M) == Fraction(1, 2)
    # oracle: minimum over lattice points of D
    assert min(farthest_radius(ex2_triangle, x, M) for x in lattice(ex2_triangle)) == Fraction(1, 2)


def test_self_radius_of_complete_set(unit_square):
    assert self_radius(unit_square, M) == chebyshev(unit_square, M).radius == Fraction(1, 2)


def test_self_radius_of_segment(segment):
    assert self_radius(segment, M) == Fraction(1, 2)


def test_radius_chain(ex2_triangle, ex1b_triangle):
    for D, n in ((ex2_triangle, M), (ex1b_triangle, S)):
        r, rr, d = chebyshev(D, n).radius, self_radius(D, n), diam(D, n)
        assert r <= rr <= d <= 2 * r


# ---- inner radius


def test_inner_radius_of_triangle(ex2_triangle):
    assert inner_radius(ex2_triangle, M) == Fraction(1, 4)


def test_inner_radius_without_interior(segment):
    assert inner_radius(segment, M) == 0


def test_inner_radius_of_square(unit_square):
    assert inner_radius(unit_square, M) == Fraction(1, 2)


# ---- distances


def test_point_distance_to_triangle(ex2_triangle):
    assert point_dist(q(0, 1), ex2_triangle, M) == Fraction(1, 2)
    assert min(M(tuple(a - b for a, b in zip(q(0, 1), y))) for y in lattice(ex2_triangle)) == Fraction(1, 2)


def test_point_distance_inside_is_zero(ex2_triangle):
    assert point_dist(q("3/4", "1/4"), ex2_triangle, M) == 0


def test_point_distance_axis_offset(unit_square):
    assert point_dist(q(2, 0), unit_square, M) == 1


def test_euclidean_point_distance():
    tri = convex_hull([(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)])
    assert point_dist((1.0, 1.0), tri, EuclideanNorm()) == pytest.approx(math.sqrt(2) / 2)


def test_hausdorff_triangle_to_square(ex2_triangle, unit_square):
    assert hausdorff(ex2_triangle, unit_square, M) == Fraction(1, 2)


def test_hausdorff_to_itself(ex2_triangle):
    assert hausdorff(ex2_triangle, ex2_triangle, M) == 0


def test_hausdorff_square_to_tall_rectangle(unit_square):
    assert hausdorff(unit_square, box((0, -1), (1, 1)), M) == 1


def test_translation_invariance(ex2_triangle):
    t = q("3/2", "-7/3")
    moved = ex2_triangle.translate(t)
    assert diam(moved, M) == diam(ex2_triangle, M)
    assert chebyshev(moved, M).radius == chebyshev(ex2_triangle, M).radius
    assert inner_radius(moved, M) == inner_radius(ex2_triangle, M)
    assert self_radius(moved, M) == self_radius(ex2_triangle, M)
