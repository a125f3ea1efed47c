"""Norms with polytope unit balls, plus the Euclidean plane.

Every norm exposes its unit ball as ``{y : a . y <= 1 for a in facet_normals}``
so that balls, ball intersections and the linear programs in
:mod:`diamax.metrics` all work from the same facet list. For the Euclidean
norm that list describes the inscribed regular ``2k``-gon, while
:meth:`EuclideanNorm.__call__` stays exact.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache

from .geometry import (ConvexBody, DimensionMismatch, GeometryError, add,
                       convex_hull, dot, scale, vector)
from .scalar import as_float, as_fraction


class Norm:
    kind = ""
    exact = True

    def __call__(self, v):
        raise NotImplementedError

    def facet_normals(self, dim):
        raise NotImplementedError

    def unit_vertices(self, dim):
        raise NotImplementedError

    def support(self, a):
        """Support function of the unit ball: ``max{a . u : ||u|| <= 1}``."""
        return max(dot(a, u) for u in self.unit_vertices(len(a)))

    def coerce(self, v):
        return vector(v, self.exact)

    def to_json(self):
        return {"type": self.kind}

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self):
        return hash((type(self).__name__, self._key()))

    def _key(self):
        return ()

    def __repr__(self):
        return f"{type(self).__name__}()"


class MaxNorm(Norm):
    kind = "max"

    def __call__(self, v):
        return max(abs(c) for c in v)

    @lru_cache(maxsize=None)
    def facet_normals(self, dim):
        one = Fraction(1)
        out = []
        for i in range(dim):
            for s in (one, -one):
                a = [Fraction(0)] * dim
                a[i] = s
                out.append(tuple(a))
        return tuple(out)

    @lru_cache(maxsize=None)
    def unit_vertices(self, dim):
        return tuple(itertools.product((Fraction(-1), Fraction(1)), repeat=dim))

    def support(self, a):
        return sum(abs(x) for x in a)


class SumNorm(Norm):
    kind = "sum"

    def __call__(self, v):
        return sum(abs(c) for c in v)

    @lru_cache(maxsize=None)
    def facet_normals(self, dim):
        return tuple(itertools.product((Fraction(-1), Fraction(1)), repeat=dim))

    @lru_cache(maxsize=None)
    def unit_vertices(self, dim):
        return MaxNorm.facet_normals(MaxNorm(), dim)

    def support(self, a):
        return max(abs(x) for x in a)


class EuclideanNorm(Norm):
    """Exact Euclidean length; balls are inscribed regular ``2k``-gons (planar only)."""

    kind = "euclidean"
    exact = False

    def __init__(self, k: int = 64):
        if k < 8 or k % 2:
            raise GeometryError("polygon refinement k must be even and at least 8")
        self.k = int(k)

    def __call__(self, v):
        return math.hypot(*(float(c) for c in v))

    def _key(self):
        return (self.k,)

    def _planar(self, dim):
        if dim != 2:
            raise GeometryError("the Euclidean mode is planar only")

    @lru_cache(maxsize=None)
    def unit_vertices(self, dim=2):
        self._planar(dim)
        n = 2 * self.k
        return tuple((math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n)) for i in range(n))

    @lru_cache(maxsize=None)
    def facet_normals(self, dim=2):
        self._planar(dim)
        n = 2 * self.k
        apothem = math.cos(math.pi / n)
        return tuple((math.cos(math.pi * (2 * i + 1) / n) / apothem,
                      math.sin(math.pi * (2 * i + 1) / n) / apothem) for i in range(n))

    def support(self, a):
        return math.hypot(*a)

    def polygon_gap(self, r=1.0):
        """Largest distance between the true disk of radius r and its 2k-gon."""
        return r * (1 - math.cos(math.pi / (2 * self.k)))

    def to_json(self):
        return {"type": self.kind, "k": self.k}

    def __repr__(self):
        return f"EuclideanNorm(k={self.k})"


class GaugeNorm(Norm):
    """Norm whose unit ball is a given centrally symmetric polytope."""

    kind = "gauge"

    def __init__(self, unit_ball: ConvexBody):
        if not unit_ball.exact:
            raise GeometryError("gauge unit balls must have rational vertices")
        verts = set(unit_ball.vertices)
        if any(tuple(-c for c in v) not in verts for v in verts):
            raise GeometryError("gauge unit ball is not centrally symmetric")
        if unit_ball.affine_dim != unit_ball.dim:
            raise GeometryError("gauge unit ball must have the origin in its interior")
        normals = []
        for h in unit_ball.facets:
            if h.offset <= 0:
                raise GeometryError("gauge unit ball must have the origin in its interior")
            normals.append(tuple(a / h.offset for a in h.normal))
        self.unit_ball = unit_ball
        self.dim = unit_ball.dim
        self._normals = tuple(sorted(normals))

    def _check(self, dim):
        if dim != self.dim:
            raise DimensionMismatch(f"gauge norm lives in dimension {self.dim}, got {dim}")

    def __call__(self, v):
        self._check(len(v))
        return max(dot(a, v) for a in self._normals)

    def facet_normals(self, dim):
        self._check(dim)
        return self._normals

    def unit_vertices(self, dim):
        self._check(dim)
        return self.unit_ball.vertices

    def _key(self):
        return (self.unit_ball.vertices,)

    def to_json(self):
        from .io import body_to_json
        return {"type": self.kind, "unit_ball": body_to_json(self.unit_ball)}

    def __repr__(self):
        return f"GaugeNorm({self.unit_ball!r})"


def norm_eval(n: Norm, v):
    return n(n.coerce(v))


def ball(n: Norm, center, r) -> ConvexBody:
    """The ball ``B(center, r)`` as a polytope (inner 2k-gon for Euclidean)."""
    center = n.coerce(center)
    r = as_fraction(r) if n.exact else as_float(r)
    if r <= 0:
        raise GeometryError("ball radius must be positive")
    dim = len(center)
    if isinstance(n, EuclideanNorm):
        n._planar(dim)
    return convex_hull([add(center, scale(r, u)) for u in n.unit_vertices(dim)])


def adapt(body: ConvexBody, n: Norm) -> ConvexBody:
    """Bring a body into the arithmetic mode of a norm."""
    if body.exact == n.exact:
        return body
    if n.exact:
        raise GeometryError("exact norms need bodies with rational coordinates")
    return convex_hull([tuple(float(c) for c in v) for v in body.vertices])


def symmetric_gauge(points) -> GaugeNorm:
    """Gauge norm whose unit ball is the hull of ``points`` and their negatives."""
    pts = [tuple(as_fraction(c) for c in p) for p in points]
    return GaugeNorm(convex_hull(pts + [tuple(-c for c in p) for p in pts]))
