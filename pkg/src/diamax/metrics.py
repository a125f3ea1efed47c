"""Size functionals of bounded convex sets: diameter, radii, distances.

For polytopes every supremum over the body reduces to a maximum over its
vertices (norms are convex), and every infimum is a small linear program in
``dim + 1`` variables when the norm has a polytope unit ball.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import lp
from .geometry import (ConvexBody, DimensionMismatch, PreconditionError, ccw_ring,
                       contains, convex_hull, dot, sub)
from .norms import EuclideanNorm, Norm


@dataclass(frozen=True)
class DiameterResult:
    value: object
    witness: tuple


@dataclass(frozen=True)
class CenterSet:
    """Chebyshev radius together with the set of all centers.

    ``multiplicity_known`` is False in the Euclidean mode, where only one
    center of the minimum enclosing disk is reported.
    """

    radius: object
    centers: ConvexBody
    multiplicity_known: bool = True


def _require_segment(D: ConvexBody):
    if len(D.vertices) < 2:
        raise PreconditionError("the body must contain at least two points")


def _zero(D):
    return Fraction(0) if D.exact else 0.0


@lru_cache(maxsize=8192)
def diameter(D: ConvexBody, n: Norm) -> DiameterResult:
    """Largest distance between two points of D, with its witness pair."""
    _require_segment(D)
    best = None
    V = D.vertices
    for i in range(len(V)):
        for j in range(i + 1, len(V)):
            d = n(sub(V[i], V[j]))
            if best is None or d > best[0]:
                best = (d, (V[i], V[j]))
    return DiameterResult(*best)


def diam(D: ConvexBody, n: Norm):
    """Diameter value, with 0 for a single point."""
    if D.is_point:
        return _zero(D)
    return diameter(D, n).value


def farthest_radius(D: ConvexBody, x, n: Norm):
    """``r(D, x)``: the largest distance from x to a point of D."""
    x = tuple(x)
    if len(x) != D.dim:
        raise DimensionMismatch("point and body dimensions differ")
    return max(n(sub(x, v)) for v in D.vertices)


def _support_offsets(D, n):
    return [(a, max(dot(a, v) for v in D.vertices)) for a in n.facet_normals(D.dim)]


def _enclosing_rows(D, n):
    # -a.c - t <= -max_v a.v  <=>  a.(v - c) <= t for all vertices v
    rows, rhs = [], []
    for a, h in _support_offsets(D, n):
        rows.append([-x for x in a] + [-1])
        rhs.append(-h)
    return rows, rhs


def _minimize(c, G, h, exact):
    if exact:
        return lp.minimize([Fraction(x) for x in c], G, h, 0)
    return lp.minimize([float(x) for x in c], [[float(x) for x in r] for r in G], [float(x) for x in h])


def _circle_two(p, q):
    c = ((p[0] + q[0]) / 2, (p[1] + q[1]) / 2)
    return c, math.dist(p, q) / 2


def _circle_three(p, q, s):
    ax, ay = p
    bx, by = q
    cx, cy = s
    d = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    if abs(d) < 1e-15:
        pairs = [(p, q), (p, s), (q, s)]
        return max((_circle_two(*pr) for pr in pairs), key=lambda cr: cr[1])
    ux = ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay) + (cx * cx + cy * cy) * (ay - by)) / d
    uy = ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx) + (cx * cx + cy * cy) * (bx - ax)) / d
    return (ux, uy), math.dist((ux, uy), p)


def min_enclosing_disk(points, eps=1e-12):
    """Welzl's randomized incremental algorithm with a fixed shuffle."""
    pts = [tuple(float(c) for c in p) for p in points]
    random.Random(0).shuffle(pts)
    c, r = pts[0], 0.0
    for i, p in enumerate(pts):
        if math.dist(p, c) <= r + eps:
            continue
        c, r = p, 0.0
        for j in range(i):
            q = pts[j]
            if math.dist(q, c) <= r + eps:
                continue
            c, r = _circle_two(p, q)
            for k in range(j):
                s = pts[k]
                if math.dist(s, c) > r + eps:
                    c, r = _circle_three(p, q, s)
    return c, r


@lru_cache(maxsize=4096)
def chebyshev(D: ConvexBody, n: Norm) -> CenterSet:
    """Chebyshev radius ``r(D)`` and the full center set ``C_D``."""
    _require_segment(D)
    if isinstance(n, EuclideanNorm):
        c, r = min_enclosing_disk(D.vertices)
        return CenterSet(r, convex_hull([c]), multiplicity_known=False)
    from .completion import ball_intersection_at

    rows, rhs = _enclosing_rows(D, n)
    c = [0] * D.dim + [1]
    r = _minimize(c, rows, rhs, True)
    return CenterSet(r, ball_intersection_at(D, r, n))


@lru_cache(maxsize=4096)
def self_radius(D: ConvexBody, n: Norm):
    """``r(D, D)``: smallest enclosing radius with the center inside D.

    In the Euclidean mode the enclosing balls are the 2k-gons, so the value
    is an approximation from above by at most a factor ``1/cos(pi/2k)``.
    """
    _require_segment(D)
    rows, rhs = _enclosing_rows(D, n)
    for h in D.facets:
        rows.append(list(h.normal) + [0])
        rhs.append(h.offset)
    return _minimize([0] * D.dim + [1], rows, rhs, D.exact and n.exact)


@lru_cache(maxsize=4096)
def inner_radius(D: ConvexBody, n: Norm):
    """``r'(D)``: radius of the largest ball contained in D (0 without interior)."""
    if D.affine_dim < D.dim:
        return _zero(D)
    rows, rhs = [], []
    for h in D.facets:
        rows.append(list(h.normal) + [n.support(h.normal)])
        rhs.append(h.offset)
    rows.append([0] * D.dim + [-1])
    rhs.append(0)
    return -_minimize([0] * D.dim + [-1], rows, rhs, D.exact and n.exact)


def _segment_dist(x, p, q):
    d = sub(q, p)
    dd = dot(d, d)
    t = 0.0 if dd == 0 else max(0.0, min(1.0, dot(sub(x, p), d) / dd))
    return math.dist(x, (p[0] + t * d[0], p[1] + t * d[1]))


def point_dist(x, D: ConvexBody, n: Norm):
    """``dist(x, D)``; zero exactly when x lies in D."""
    x = tuple(x)
    if len(x) != D.dim:
        raise DimensionMismatch("point and body dimensions differ")
    if contains(D, x):
        return _zero(D)
    if isinstance(n, EuclideanNorm):
        ring = ccw_ring(D)
        if len(ring) == 1:
            return math.dist(x, ring[0])
        return min(_segment_dist(x, p, q) for p, q in zip(ring, ring[1:] + ring[:1]))
    return _point_dist_lp(x, D, n)


@lru_cache(maxsize=65536)
def _point_dist_lp(x, D, n):
    rows, rhs = [], []
    for a in n.facet_normals(D.dim):
        rows.append(list(a) + [-1])
        rhs.append(dot(a, x))
    for h in D.facets:
        rows.append(list(h.normal) + [0])
        rhs.append(h.offset)
    return _minimize([0] * D.dim + [1], rows, rhs, D.exact and n.exact)


def hausdorff(A: ConvexBody, B: ConvexBody, n: Norm):
    """Hausdorff distance; the vertices of each body suffice."""
    if A.dim != B.dim:
        raise DimensionMismatch("bodies of different dimension")
    a = max(point_dist(v, B, n) for v in A.vertices)
    b = max(point_dist(w, A, n) for w in B.vertices)
    return max(a, b)
