"""Ball intersections, ball hulls and completions of convex bodies.

With ``delta`` the diameter of D, the ball intersection is
``D' = {x : ||x - d|| <= delta for all d in D}`` and the ball hull ``D^c`` is
the ball intersection taken over the points of ``D'`` instead of D. A body
is complete when ``D == D'``; it has a unique completion exactly when ``D'``
keeps the diameter of D.

Completions are built greedily: keep adding a vertex of the current ball
intersection until the body equals its own ball intersection. Every added
point lies in ``D_k'`` so the diameter never grows.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .geometry import (ConvexBody, EmptyIntersection, GeometryError, Halfspace,
                       PreconditionError, add, bodies_equal, canonical_halfspaces,
                       clip_polygon, contains, convex_hull, dot, edges,
                       intersect_bodies, is_subset, scale, sub, vertex_enum)
from .lp import LPError
from .metrics import diam, farthest_radius, hausdorff, point_dist
from .norms import Norm, adapt, ball
from .scalar import TAU, as_float, as_fraction

EXACT = "ExactComplete"
TOLERANCE = "ToleranceComplete"
CAPPED = "IterationCap"

MAX_ITER = 64


def _radius(rho, n):
    rho = as_fraction(rho) if n.exact else as_float(rho)
    if rho <= 0:
        raise PreconditionError("ball radius must be positive")
    return rho


def _approx_tol(D, n):
    """Comparison slack for Euclidean bodies built from inscribed 2k-gons."""
    if n.exact:
        return None
    return max(TAU, 8 * n.polygon_gap(max(float(diam(D, n)), 1.0)))


@lru_cache(maxsize=8192)
def _cap(S: ConvexBody, rho, n: Norm) -> ConvexBody:
    if S.exact and n.exact:
        den, V = S.integer_vertices
        hs = []
        for a in n.facet_normals(S.dim):
            ad = 1
            for c in a:
                ad = lcm(ad, c.denominator)
            ai = [int(c * ad) for c in a]
            low = min(sum(x * y for x, y in zip(ai, v)) for v in V)
            hs.append(Halfspace(a, Fraction(low, ad * den) + rho))
    else:
        hs = [Halfspace(a, min(dot(a, v) for v in S.vertices) + rho)
              for a in n.facet_normals(S.dim)]
    if S.dim == 2:
        return clip_polygon(ball(n, S.vertices[0], rho), canonical_halfspaces(hs, n.exact))
    return vertex_enum(hs, S.dim, check_bounded=False)


def ball_intersection_at(S: ConvexBody, rho, n: Norm) -> ConvexBody:
    """Intersection of the balls of radius rho centred at the points of S.

    Raises :class:`EmptyIntersection` when rho is below the Chebyshev radius.
    """
    return _cap(adapt(S, n), _radius(rho, n), n)


def _require_diameter(D, n):
    if D.is_point:
        raise PreconditionError("the body must contain at least two points")
    return diam(D, n)


def ball_intersection(D: ConvexBody, n: Norm) -> ConvexBody:
    D = adapt(D, n)
    return ball_intersection_at(D, _require_diameter(D, n), n)


def ball_hull(D: ConvexBody, n: Norm) -> ConvexBody:
    D = adapt(D, n)
    delta = _require_diameter(D, n)
    return ball_intersection_at(ball_intersection(D, n), delta, n)


def is_complete(D: ConvexBody, n: Norm, tol=None) -> bool:
    D = adapt(D, n)
    if tol is None:
        tol = _approx_tol(D, n)
    return bodies_equal(D, ball_intersection(D, n), tol)


def has_unique_completion(D: ConvexBody, n: Norm, tol=None) -> bool:
    D = adapt(D, n)
    delta = _require_diameter(D, n)
    grown = diam(ball_intersection(D, n), n)
    if n.exact and tol is None:
        return grown == delta
    if tol is None:
        tol = _approx_tol(D, n)
    return grown - delta <= tol


@dataclass(frozen=True)
class CompletionTrace:
    initial: ConvexBody
    added: tuple
    final: ConvexBody
    status: str
    gap: object = None

    @property
    def complete(self) -> bool:
        return self.status == EXACT


def _floated(body):
    return ConvexBody([tuple(float(c) for c in v) for v in body.vertices],
                      [Halfspace(tuple(float(a) for a in h.normal), float(h.offset)) for h in body.facets])


def _farthest(cands, body, n):
    """Candidate farthest from the body, least one on ties.

    Exact runs rank candidates with float distances first and settle only
    the near-ties exactly, which gives the same answer much faster.
    """
    if n.exact and len(cands) > 1:
        approx = _floated(body)
        try:
            est = [point_dist(tuple(float(c) for c in v), approx, n) for v in cands]
        except LPError:
            est = None  # float trouble only costs speed
        if est is not None:
            cut = max(est) - 1e-6
            cands = [v for v, e in zip(cands, est) if e >= cut]
    far = [(point_dist(v, body, n), v) for v in cands]
    top = max(d for d, _ in far)
    return min(v for d, v in far if d == top)


def complete_one(D: ConvexBody, n: Norm, strategy: str = "farthest", seed=None,
                 within=None, max_iter: int = MAX_ITER, tol=None, first=None) -> CompletionTrace:
    """Grow D to a complete body of the same diameter.

    ``strategy`` is ``"farthest"`` (add the vertex of ``D_k'`` farthest from
    ``D_k``, least vertex on ties) or ``"random"`` (uniform choice driven by
    ``seed``). With ``within=(center, r)`` the completion is kept inside
    ``B(center, r)``, which requires ``D`` inside that ball and ``r <= delta``.
    ``first`` fixes the first added vertex (index into the sorted candidates,
    taken modulo their number) for the random strategy.
    """
    D = adapt(D, n)
    delta = _require_diameter(D, n)
    if strategy not in ("farthest", "random"):
        raise ValueError(f"unknown strategy {strategy!r}")
    constraint = None
    if within is not None:
        center, r = within
        center = n.coerce(center)
        r = _radius(r, n)
        if r > delta:
            raise PreconditionError("the constraining radius must satisfy r <= delta(D)")
        if farthest_radius(D, center, n) > r + (0 if n.exact else TAU):
            raise PreconditionError("D must lie inside the constraining ball")
        constraint = ball(n, center, r)
    if tol is None:
        tol = 0 if n.exact else _approx_tol(D, n)
    rng = random.Random(seed)

    current = D
    added = []
    gap = None
    status = CAPPED
    for step in range(max_iter + 1):
        grown = ball_intersection_at(current, delta, n)
        if n.exact and grown == current:
            status, gap = EXACT, None
            break
        # exact runs only need the gap when they give up
        if not n.exact or step == max_iter:
            gap = hausdorff(current, grown, n)
        if not n.exact and gap <= tol:
            status = TOLERANCE
            break
        if step == max_iter:
            break
        region = grown if constraint is None else intersect_bodies([grown, constraint])
        cands = [v for v in region.vertices if not contains(current, v)]
        if not cands:
            if n.exact:
                raise GeometryError("no admissible vertex left although the body is incomplete")
            status = TOLERANCE
            break
        if strategy == "farthest":
            v = _farthest(cands, current, n)
        elif step == 0 and first is not None:
            v = cands[first % len(cands)]
        else:
            v = cands[rng.randrange(len(cands))]
        added.append(v)
        current = convex_hull(current.vertices + (v,))
    return CompletionTrace(D, tuple(added), current, status, gap)


def sample_completions(D: ConvexBody, n: Norm, count: int, seed=0, **kwargs) -> list:
    """Random-vertex completions with seeded sub-streams.

    Sample ``i`` starts from the ``i``-th candidate vertex (cyclically) so
    that small samples still cover different first moves.
    """
    if count < 1:
        raise PreconditionError("count must be at least 1")
    rng = random.Random(seed)
    seeds = [rng.getrandbits(32) for _ in range(count)]
    return [complete_one(D, n, "random", s, first=i, **kwargs) for i, s in enumerate(seeds)]


def completion_spread(D: ConvexBody, n: Norm, samples: int = 8, seed=0):
    """Largest Hausdorff distance between sampled completions.

    This only bounds the supremum over all completions from below.
    """
    if samples < 2:
        raise PreconditionError("need at least two samples")
    finals = [t.final for t in sample_completions(D, n, samples, seed)]
    zero = Fraction(0) if n.exact else 0.0
    return max([zero] + [hausdorff(a, b, n) for a, b in itertools.combinations(finals, 2)])


def _random_point(rng, lo, hi, exact):
    if exact:
        return tuple(a + (b - a) * Fraction(rng.randrange(65), 64) for a, b in zip(lo, hi))
    return tuple(a + (b - a) * rng.random() for a, b in zip(lo, hi))


def check_constant_diameter(C: ConvexBody, n: Norm, probes: int = 32, seed=0, points=None) -> bool:
    """Test ``r(C, x) == delta(C) + dist(x, C)`` at exterior probe points."""
    C = adapt(C, n)
    if not is_complete(C, n):
        raise PreconditionError("constant diameter is only defined for complete bodies")
    delta = diam(C, n)
    if points is None:
        rng = random.Random(seed)
        lo, hi = C.bounding_box()
        lo = tuple(a - delta for a in lo)
        hi = tuple(b + delta for b in hi)
        points = [_random_point(rng, lo, hi, n.exact) for _ in range(probes)]
    slack = 0 if n.exact else max(TAU, 4 * n.polygon_gap(float(delta)))
    for x in points:
        x = n.coerce(x)
        if contains(C, x):
            continue
        if abs(farthest_radius(C, x, n) - (delta + point_dist(x, C, n))) > slack:
            return False
    return True


def is_mC(D: ConvexBody, C: ConvexBody, n: Norm) -> bool:
    """Minimal sets having C as a completion are the diametral segments in C."""
    D, C = adapt(D, n), adapt(C, n)
    if not is_complete(C, n):
        raise PreconditionError("C must be complete")
    if not is_subset(D, C, _approx_tol(C, n)):
        raise PreconditionError("D must be contained in C")
    if D.is_point or diam(D, n) != diam(C, n):
        raise PreconditionError("D must have the same diameter as C")
    return len(D.vertices) == 2


@dataclass(frozen=True)
class Probe:
    subset: ConvexBody
    kind: str
    delta_preserved: bool
    unique_completion: bool | None
    completion_is_target: bool | None


@dataclass(frozen=True)
class MinimalityReport:
    """Outcome of a finite probe of proper subsets; evidence, not a proof."""

    subject: ConvexBody
    target: ConvexBody
    probes: tuple = field(default_factory=tuple)

    @property
    def preserving(self):
        return [p for p in self.probes if p.delta_preserved]

    @property
    def muc_evidence(self) -> bool:
        return all(not p.unique_completion for p in self.preserving)


def _shaved(D, cuts):
    nbrs = {v: set() for v in D.vertices}
    for u, w in edges(D):
        nbrs[u].add(w)
        nbrs[w].add(u)
    for v in D.vertices:
        rest = [u for u in D.vertices if u != v]
        for t in cuts:
            new = [add(v, scale(t, sub(w, v))) for w in sorted(nbrs[v])]
            yield f"shave {v} t={t}", convex_hull(rest + new)


def _faces(D):
    V = D.vertices
    if len(V) <= 6:
        sizes = range(2, len(V))
    else:
        sizes = (2, len(V) - 1)
    for k in sizes:
        for sub_ in itertools.combinations(V, k):
            yield f"hull of {len(sub_)} vertices", convex_hull(sub_)


def subset_completion_scan(D: ConvexBody, C: ConvexBody, n: Norm,
                           cut_family=(Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)),
                           seed=0, random_cuts: int = 2) -> MinimalityReport:
    """Probe proper convex subsets of D that keep its diameter.

    Subsets come from shaving each vertex along its edges at the parameters
    in ``cut_family`` (plus ``random_cuts`` seeded parameters) and from the
    hulls of vertex subsets.
    """
    D, C = adapt(D, n), adapt(C, n)
    if not has_unique_completion(D, n) or not bodies_equal(ball_intersection(D, n), C, _approx_tol(D, n)):
        raise PreconditionError("C must be the unique completion of D")
    rng = random.Random(seed)
    cuts = [as_fraction(t) if n.exact else as_float(t) for t in cut_family]
    for _ in range(random_cuts):
        t = Fraction(rng.randrange(1, 64), 64)
        cuts.append(t if n.exact else float(t))
    delta = diam(D, n)
    tol = _approx_tol(D, n)
    probes = []
    seen = set()
    for kind, S in itertools.chain(_shaved(D, cuts), _faces(D)):
        if S in seen or S == D:
            continue
        seen.add(S)
        assert is_subset(S, D, tol)
        keep = (diam(S, n) == delta) if n.exact else abs(diam(S, n) - delta) <= tol
        unique = same = None
        if keep:
            unique = has_unique_completion(S, n)
            same = unique and bodies_equal(ball_intersection(S, n), C, tol)
        probes.append(Probe(S, kind, keep, unique, same))
    return MinimalityReport(D, C, tuple(probes))


__all__ = [
    "CAPPED", "EXACT", "TOLERANCE", "CompletionTrace", "EmptyIntersection",
    "MinimalityReport", "Probe", "ball_hull", "ball_intersection",
    "ball_intersection_at", "check_constant_diameter", "complete_one",
    "completion_spread", "has_unique_completion", "is_complete", "is_mC",
    "sample_completions", "subset_completion_scan",
]
