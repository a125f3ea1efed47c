"""Brute-force grid oracle for planar ball intersections.

The oracle never touches the polytope machinery: it evaluates the norm
directly (true Euclidean length for the Euclidean norm) at every grid point
and keeps the points within ``rho`` of all vertices of S.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..completion import ball_intersection_at
from ..geometry import ConvexBody, EmptyIntersection
from ..metrics import chebyshev
from ..norms import EuclideanNorm, MaxNorm, Norm, SumNorm


@dataclass
class Grid:
    xs: np.ndarray
    ys: np.ndarray
    inside: np.ndarray  # shape (len(ys), len(xs))
    cell: float

    def points(self):
        """Coordinates of the in-points as an ``(m, 2)`` array."""
        yy, xx = np.nonzero(self.inside)
        return np.column_stack([self.xs[xx], self.ys[yy]])


def _norm_values(n: Norm, dx, dy):
    if isinstance(n, EuclideanNorm):
        return np.hypot(dx, dy)
    A = np.array([[float(c) for c in a] for a in n.facet_normals(2)])
    return np.max(A[:, 0, None, None] * dx + A[:, 1, None, None] * dy, axis=0)


def _lipschitz(n: Norm) -> float:
    if isinstance(n, EuclideanNorm):
        return 1.0
    return max(math.hypot(float(a[0]), float(a[1])) for a in n.facet_normals(2))


def _farthest_field(S: ConvexBody, n: Norm, X, Y):
    out = None
    for v in S.vertices:
        d = _norm_values(n, X - float(v[0]), Y - float(v[1]))
        out = d if out is None else np.maximum(out, d)
    return out


def _axes(S: ConvexBody, rho, resolution):
    if S.dim != 2:
        raise ValueError("the grid oracle is planar")
    if resolution < 8:
        raise ValueError("resolution must be at least 8")
    lo, hi = S.bounding_box()
    r = float(rho)
    # the intersection lies in B(v, rho) for every vertex v; a box around S
    # grown by rho in the Euclidean unit suffices after scaling by the norm
    pad = r * 2
    x0, x1 = float(lo[0]) - pad, float(hi[0]) + pad
    y0, y1 = float(lo[1]) - pad, float(hi[1]) + pad
    side = max(x1 - x0, y1 - y0)
    xs = np.linspace(x0, x0 + side, resolution)
    ys = np.linspace(y0, y0 + side, resolution)
    return xs, ys, side / (resolution - 1)


def grid_oracle(S: ConvexBody, n: Norm, rho, resolution: int = 200) -> Grid:
    """Classify a ``resolution x resolution`` grid against ``max_v ||x - v|| <= rho``."""
    xs, ys, cell = _axes(S, rho, resolution)
    X, Y = np.meshgrid(xs, ys)
    inside = _farthest_field(S, n, X, Y) <= float(rho)
    return Grid(xs, ys, inside, cell)


@dataclass
class Agreement:
    checked: int
    skipped: int
    mismatches: int
    empty: bool

    @property
    def agree(self) -> bool:
        return self.mismatches == 0


def grid_agreement(S: ConvexBody, n: Norm, rho, resolution: int = 200) -> Agreement:
    """Compare the computed intersection with the oracle away from boundaries.

    A grid point is skipped when it lies within one cell diagonal of the
    boundary of either set (signed facet distance for the polytope, the
    oracle's defining function scaled by the norm's Lipschitz bound).
    """
    xs, ys, cell = _axes(S, rho, resolution)
    X, Y = np.meshgrid(xs, ys)
    field = _farthest_field(S, n, X, Y) - float(rho)
    oracle_in = field <= 0
    band = cell * math.sqrt(2)
    near = np.abs(field) <= _lipschitz(n) * band
    try:
        P = ball_intersection_at(S, rho, n)
    except EmptyIntersection:
        P = None
    if P is None:
        computed_in = np.zeros_like(oracle_in)
    else:
        sd = None
        for h in P.facets:
            a = np.array([float(c) for c in h.normal])
            s = (a[0] * X + a[1] * Y - float(h.offset)) / np.hypot(a[0], a[1])
            sd = s if sd is None else np.maximum(sd, s)
        computed_in = sd <= 0
        near |= np.abs(sd) <= band
    mism = (oracle_in != computed_in) & ~near
    return Agreement(int((~near).sum()), int(near.sum()), int(mism.sum()), P is None)


def random_cases(count: int, seed: int = 0):
    """Random planar polyhedral cases ``(S, norm, rho)``; some are empty."""
    from .properties import random_body, random_gauge

    rng = random.Random(seed)
    cases = []
    for _ in range(count):
        kind = rng.choice(("max", "sum", "gauge"))
        n = {"max": MaxNorm, "sum": SumNorm}.get(kind, lambda: random_gauge(rng, 2))()
        S = random_body(rng, 2)
        r = chebyshev(S, n).radius
        rho = r + Fraction(rng.randint(-2, 12), 8)
        if rho <= 0:
            rho = r + Fraction(1, 8)
        cases.append((S, n, rho))
    return cases
