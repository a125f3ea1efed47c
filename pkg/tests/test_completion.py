import itertools
import math
from fractions import Fraction

import pytest

from conftest import box, q
from diamax import (EuclideanNorm, MaxNorm, PreconditionError, SumNorm, ball, ball_hull,
                    ball_intersection, ball_intersection_at, chebyshev, convex_hull, diam,
                    hausdorff, is_subset, self_radius)
from diamax.completion import (CAPPED, EXACT, TOLERANCE, check_constant_diameter,
                               complete_one, completion_spread, has_unique_completion,
                               is_complete, is_mC, sample_completions, subset_completion_scan)
from diamax.geometry import EmptyIntersection

M, S = MaxNorm(), SumNorm()
UNIT = box((0, 0), (1, 1))


def is_axis_cube(body, side):
    """Vertex set equals the 2^d corners of the bounding box, all sides equal."""
    lo, hi = body.bounding_box()
    if any(b - a != side for a, b in zip(lo, hi)):
        return False
    corners = set(itertools.product(*zip(lo, hi)))
    return set(body.vertices) == corners


# ---- ball intersection and ball hull


def test_segment_ball_intersection(segment):
    assert ball_intersection(segment, M) == box((0, -1), (1, 1))


def test_triangle_ball_intersection_and_hull(ex2_triangle):
    assert ball_intersection(ex2_triangle, M) == UNIT
    assert ball_hull(ex2_triangle, M) == UNIT


def test_complete_body_is_fixed(unit_square):
    assert ball_intersection(unit_square, M) == unit_square
    assert ball_hull(unit_square, M) == unit_square


def test_segment_is_its_own_hull(segment):
    assert ball_hull(segment, M) == segment


def test_singleton_intersection_is_the_ball():
    assert ball_intersection_at(convex_hull([q(0, 0)]), 1, S) == ball(S, q(0, 0), 1)


def test_radius_below_chebyshev_is_empty(segment):
    with pytest.raises(EmptyIntersection):
        ball_intersection_at(segment, Fraction(1, 3), M)


def test_nonpositive_radius_rejected(segment):
    with pytest.raises(PreconditionError):
        ball_intersection_at(segment, 0, M)


def test_ball_intersection_of_a_point_needs_diameter():
    with pytest.raises(PreconditionError):
        ball_intersection(convex_hull([q(1, 1)]), M)


def test_euclidean_lens():
    E = EuclideanNorm(64)
    A = ball_intersection_at(convex_hull([(0.0, 0.0), (1.0, 0.0)]), 1.0, E)
    (_, y0), (_, y1) = A.bounding_box()
    assert y1 == pytest.approx(math.sqrt(3) / 2, rel=1e-3)
    assert y0 == pytest.approx(-math.sqrt(3) / 2, rel=1e-3)
    assert diam(A, E) == pytest.approx(math.sqrt(3), rel=1e-3)


def test_euclidean_segment_hull_is_thin_lens():
    E = EuclideanNorm(64)
    H = ball_hull(convex_hull([(0.0, 0.0), (1.0, 0.0)]), E)
    # B((1/2, -sqrt3/2), 1) meets y >= 0 only up to height 1 - sqrt3/2
    (_, y0), (_, y1) = H.bounding_box()
    assert y1 == pytest.approx(1 - math.sqrt(3) / 2, abs=1e-3)
    assert y0 == pytest.approx(-(1 - math.sqrt(3) / 2), abs=1e-3)


def test_hull_identities(ex2_triangle, ex1b_triangle):
    for D, n in ((ex2_triangle, M), (ex1b_triangle, S)):
        Dc, Dp = ball_hull(D, n), ball_intersection(D, n)
        assert is_subset(D, Dc) and is_subset(Dc, Dp)
        assert diam(Dc, n) == diam(D, n)
        assert ball_hull(Dc, n) == Dc
        assert ball_intersection(Dc, n) == Dp


# ---- completeness and uniqueness


def test_completeness_flags(unit_square, ex2_triangle):
    assert is_complete(unit_square, M)
    assert not is_complete(ex2_triangle, M)


def test_reuleaux_triangle_is_complete():
    E = EuclideanNorm(64)
    A = convex_hull([(-1.0, 0.0), (1.0, 0.0), (0.0, math.sqrt(3))])
    assert is_complete(ball_hull(A, E), E)


def test_unique_completion_flags(ex2_triangle, segment, ex1b_triangle):
    assert has_unique_completion(ex2_triangle, M)
    assert not has_unique_completion(segment, M)
    assert has_unique_completion(convex_hull([q(0, 0), q(1, 1)]), M)
    assert not has_unique_completion(ex1b_triangle, S)


def test_sum_triangle_far_pair(ex1b_triangle):
    Dp = ball_intersection(ex1b_triangle, S)
    from diamax import contains
    a, b = q(0, 0, 0), q("4/3", "4/3", "4/3")
    assert contains(Dp, a) and contains(Dp, b)
    assert S(tuple(y - x for x, y in zip(a, b))) == 4
    assert diam(Dp, S) == 4


def test_center_outside_sum_hull(ex1b_triangle):
    from diamax import contains
    Dc = ball_hull(ex1b_triangle, S)
    assert chebyshev(ex1b_triangle, S).centers.vertices == (q(1, 1, 1),)
    assert not contains(Dc, q(1, 1, 1))
    assert is_subset(Dc, ball(S, q(0, 0, 0), 2))


# ---- complete_one


def test_triangle_completes_to_square(ex2_triangle):
    tr = complete_one(ex2_triangle, M)
    assert tr.status == EXACT and tr.complete
    assert tr.final == UNIT
    assert tr.initial == ex2_triangle


def test_random_completion_is_unit_cube(segment):
    for seed in range(6):
        tr = complete_one(segment, M, "random", seed)
        assert tr.status == EXACT
        assert is_axis_cube(tr.final, 1)
        (_, t), _ = tr.final.bounding_box()
        assert -1 <= t <= 0
        assert is_subset(segment, tr.final)


def test_trace_invariants(ex1b_triangle):
    tr = complete_one(ex1b_triangle, S)
    assert tr.status == EXACT
    assert diam(tr.final, S) == diam(ex1b_triangle, S)
    assert is_subset(ex1b_triangle, tr.final)
    assert ball_intersection(tr.final, S) == tr.final


def test_constrained_completion(ex2_triangle):
    d = q("1/2", "1/2")
    r = self_radius(ex2_triangle, M) + Fraction(1, 8)
    tr = complete_one(ex2_triangle, M, within=(d, r))
    assert tr.status == EXACT
    assert is_subset(tr.final, ball(M, d, r))


def test_constraint_radius_above_diameter_rejected(ex2_triangle):
    with pytest.raises(PreconditionError, match="r <= delta"):
        complete_one(ex2_triangle, M, within=(q(0, 0), 2))


def test_constraint_must_contain_body(ex2_triangle):
    with pytest.raises(PreconditionError):
        complete_one(ex2_triangle, M, within=(q(5, 5), 1))


def test_unknown_strategy(ex2_triangle):
    with pytest.raises(ValueError):
        complete_one(ex2_triangle, M, "widest")


def test_iteration_cap_reports_gap(ex1b_triangle):
    tr = complete_one(ex1b_triangle, S, max_iter=0)
    assert tr.status == CAPPED
    assert tr.gap > 0


def test_euclidean_completion_stops_within_tolerance():
    E = EuclideanNorm(16)
    tr = complete_one(convex_hull([(0.0, 0.0), (1.0, 0.0)]), E)
    assert tr.status in (TOLERANCE, EXACT)
    assert diam(tr.final, E) == pytest.approx(1.0, rel=1e-6)


# ---- sampling


def test_segment_has_several_completions(segment):
    finals = {t.final for t in sample_completions(segment, M, 8, 0)}
    assert len(finals) >= 2
    assert all(is_axis_cube(f, 1) for f in finals)


def test_sum_triangle_has_several_completions(ex1b_triangle):
    assert len({t.final for t in sample_completions(ex1b_triangle, S, 8, 0)}) >= 2


def test_unique_completion_samples_agree(ex2_triangle):
    assert {t.final for t in sample_completions(ex2_triangle, M, 4, 1)} == {UNIT}


def test_sampling_is_deterministic(segment):
    a = [t.final for t in sample_completions(segment, M, 5, 42)]
    b = [t.final for t in sample_completions(segment, M, 5, 42)]
    assert a == b


def test_sample_count_must_be_positive(segment):
    with pytest.raises(PreconditionError):
        sample_completions(segment, M, 0)


def test_spread_of_segment(segment):
    # oracle: H([0,1]x[0,1], [0,1]x[-1,0]) = 1 in the max norm
    assert hausdorff(UNIT, box((0, -1), (1, 0)), M) == 1
    spread = completion_spread(segment, M, 8, 0)
    assert spread == 1
    assert diam(ball_intersection(segment, M), M) - diam(segment, M) <= spread


def test_spread_of_unique_completion(ex2_triangle):
    assert completion_spread(ex2_triangle, M, 4, 0) == 0


def test_spread_needs_two_samples(segment):
    with pytest.raises(PreconditionError):
        completion_spread(segment, M, 1)


# ---- constant diameter


def test_constant_diameter_at_a_point(unit_square):
    assert check_constant_diameter(unit_square, M, points=[q(2, "1/2")])


def test_constant_diameter_random_probes(unit_square):
    assert check_constant_diameter(unit_square, M, probes=32, seed=5)


def test_constant_diameter_skips_interior(unit_square):
    assert check_constant_diameter(unit_square, M, points=[q("1/2", "1/2")])


def test_constant_diameter_reuleaux():
    E = EuclideanNorm(64)
    T = ball_hull(convex_hull([(-1.0, 0.0), (1.0, 0.0), (0.0, math.sqrt(3))]), E)
    assert check_constant_diameter(T, E, probes=16, seed=0)


def test_constant_diameter_requires_complete(ex2_triangle):
    with pytest.raises(PreconditionError):
        check_constant_diameter(ex2_triangle, M)


# ---- minimality


def test_diagonals_and_edges_are_mC(segment):
    assert is_mC(convex_hull([q(0, 0), q(1, 1)]), UNIT, M)
    assert is_mC(convex_hull([q(0, 1), q(1, 0)]), UNIT, M)
    assert is_mC(segment, UNIT, M)


def test_triangle_is_not_mC():
    D4 = convex_hull([q(0, 0), q(0, 1), q(1, "1/2")])
    assert not is_mC(D4, UNIT, M)


def test_square_is_not_mC_of_itself():
    assert not is_mC(UNIT, UNIT, M)


def test_mC_preconditions(ex2_triangle):
    with pytest.raises(PreconditionError, match="complete"):
        is_mC(ex2_triangle, ex2_triangle, M)
    with pytest.raises(PreconditionError, match="contained"):
        is_mC(convex_hull([q(0, 0), q(2, 0)]), UNIT, M)
    with pytest.raises(PreconditionError, match="diameter"):
        is_mC(convex_hull([q(0, 0), q("1/2", 0)]), UNIT, M)


def test_triangle_scan_shows_no_unique_subset():
    D4 = convex_hull([q(0, 0), q(0, 1), q(1, "1/2")])
    rep = subset_completion_scan(D4, UNIT, M)
    assert rep.preserving
    assert rep.muc_evidence
    assert all(p.subset != D4 and is_subset(p.subset, D4) for p in rep.probes)


def test_edge_of_triangle_has_wide_ball_intersection():
    edge = convex_hull([q(0, 0), q(0, 1)])
    assert diam(edge, M) == 1
    Sp = ball_intersection(edge, M)
    assert Sp == box((-1, 0), (1, 1))
    assert diam(Sp, M) == 2
    assert not has_unique_completion(edge, M)


def test_diagonal_has_no_preserving_subsegment():
    D2 = convex_hull([q(0, 0), q(1, 1)])
    rep = subset_completion_scan(D2, UNIT, M)
    assert rep.probes and not rep.preserving


def test_scan_requires_unique_completion(segment):
    with pytest.raises(PreconditionError):
        subset_completion_scan(segment, UNIT, M)
