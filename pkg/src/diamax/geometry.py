"""Convex polytopes of dimension at most 3.

A :class:`ConvexBody` is stored by its canonical vertex list (deduplicated,
extreme points only, sorted lexicographically) together with a lazily
computed H-representation. Segments and points are ordinary bodies; their
H-representation carries opposite halfspace pairs for the affine hull.

Coordinates are Fractions in exact mode and floats in approximate mode.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm

from . import lp
from .linalg import integer_direction, nullspace, rank, rref, solve
from .scalar import TAU, as_float, as_fraction


class GeometryError(ValueError):
    pass


class DimensionMismatch(GeometryError):
    pass


class EmptyIntersection(GeometryError):
    """The requested intersection has no points."""


class PreconditionError(GeometryError):
    """An operation was called outside its domain (e.g. a one-point body)."""


class UnboundedError(GeometryError):
    pass


def sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def scale(t, u):
    return tuple(t * a for a in u)


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def vector(coords, exact=True):
    """Build a coordinate tuple in the requested mode."""
    coords = tuple(coords)
    if not coords:
        raise GeometryError("vectors need at least one coordinate")
    if exact:
        return tuple(as_fraction(c) for c in coords)
    return tuple(as_float(c) for c in coords)


@dataclass(frozen=True)
class Halfspace:
    """The set ``{y : normal . y <= offset}``."""

    normal: tuple
    offset: object

    def __post_init__(self):
        if all(a == 0 for a in self.normal):
            raise GeometryError("halfspace normal must be nonzero")

    def value(self, y):
        return dot(self.normal, y)

    def contains(self, y, eps=0):
        return dot(self.normal, y) <= self.offset + eps


def _mode_of(points):
    kinds = {type(c) for p in points for c in p}
    if float in kinds:
        if Fraction in kinds:
            raise TypeError("cannot mix exact and floating coordinates in one body")
        return False
    return True


def _normalize(h: Halfspace, exact: bool):
    if exact:
        n, f = integer_direction(h.normal)
        return n, h.offset * f
    length = sum(a * a for a in h.normal) ** 0.5
    return tuple(a / length for a in h.normal), h.offset / length


def canonical_halfspaces(halfspaces, exact=True):
    """Normalize normals and keep the tightest offset per direction."""
    best = {}
    for h in halfspaces:
        n, b = _normalize(h, exact)
        key = n if exact else tuple(round(a, 9) for a in n)
        if key not in best or b < best[key][1]:
            best[key] = (n, b)
    return [Halfspace(n, b) for n, b in best.values()]


class ConvexBody:
    """A polytope given by its canonical vertices.

    Use :func:`convex_hull` or :func:`vertex_enum` to build one; the
    constructor trusts its input to be canonical already.
    """

    def __init__(self, vertices, facets=None):
        self.vertices = tuple(tuple(v) for v in vertices)
        if not self.vertices:
            raise GeometryError("a body needs at least one vertex")
        self.dim = len(self.vertices[0])
        if facets is not None:
            self.__dict__["facets"] = tuple(facets)

    @cached_property
    def exact(self) -> bool:
        return _mode_of(self.vertices)

    @cached_property
    def integer_facets(self):
        """Facets scaled to integers, for fast exact membership tests."""
        out = []
        for h in self.facets:
            den = 1
            for c in h.normal + (h.offset,):
                den = lcm(den, c.denominator)
            out.append((tuple(int(c * den) for c in h.normal), int(h.offset * den)))
        return out

    @cached_property
    def integer_vertices(self):
        """``(den, vertices * den)`` with a common integer denominator."""
        den = 1
        for v in self.vertices:
            for c in v:
                den = lcm(den, c.denominator)
        return den, [tuple(int(c * den) for c in v) for v in self.vertices]

    @property
    def eps(self):
        return 0 if self.exact else TAU

    @cached_property
    def facets(self) -> tuple:
        return convex_hull(self.vertices).facets

    @cached_property
    def affine_dim(self) -> int:
        p0 = self.vertices[0]
        return rank([sub(p, p0) for p in self.vertices[1:]], self.eps) if len(self.vertices) > 1 else 0

    @property
    def is_point(self) -> bool:
        return len(self.vertices) == 1

    def translate(self, t):
        t = tuple(t)
        return ConvexBody([add(v, t) for v in self.vertices],
                          [Halfspace(h.normal, h.offset + dot(h.normal, t)) for h in self.facets])

    def centroid(self):
        n = len(self.vertices)
        return tuple(sum(c) / n for c in zip(*self.vertices))

    def bounding_box(self):
        cols = list(zip(*self.vertices))
        return tuple(min(c) for c in cols), tuple(max(c) for c in cols)

    def __eq__(self, other):
        return isinstance(other, ConvexBody) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        pts = ", ".join("(" + ", ".join(str(c) for c in v) + ")" for v in self.vertices)
        return f"ConvexBody([{pts}])"


# --------------------------------------------------------------------- hulls

def _dedupe(points, exact):
    if exact:
        return sorted(set(points))
    out = []
    for p in sorted(points):
        if not any(max(abs(a - b) for a, b in zip(p, q)) <= TAU for q in out):
            out.append(p)
    return out


def _chain(points, eps):
    """Andrew's monotone chain; counterclockwise extreme points."""
    pts = sorted(points)
    if len(pts) <= 2:
        return pts

    def turn(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and turn(lower[-2], lower[-1], p) <= eps:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and turn(upper[-2], upper[-1], p) <= eps:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _facets_2d(ring):
    out = []
    for p, q in zip(ring, ring[1:] + ring[:1]):
        n = (q[1] - p[1], p[0] - q[0])
        out.append((n, dot(n, p)))
    return out


def _spans_space(normals):
    return any(dot(a, cross(b, c)) != 0 for a, b, c in itertools.combinations(normals, 3))


def _facets_3d_int(points):
    den = 1
    for p in points:
        for c in p:
            den = lcm(den, c.denominator)
    P = [tuple(int(c * den) for c in p) for p in points]
    found = {}
    keys, tight_sets = [], []
    on = [[] for _ in P]
    for i, j, k in itertools.combinations(range(len(P)), 3):
        if any(j in tight_sets[f] and k in tight_sets[f] for f in on[i]):
            continue
        (ax, ay, az), (bx, by, bz), (cx, cy, cz) = P[i], P[j], P[k]
        ux, uy, uz = bx - ax, by - ay, bz - az
        vx, vy, vz = cx - ax, cy - ay, cz - az
        nx, ny, nz = uy * vz - uz * vy, uz * vx - ux * vz, ux * vy - uy * vx
        if nx == 0 and ny == 0 and nz == 0:
            continue
        off = nx * ax + ny * ay + nz * az
        lo = hi = False
        tight = set()
        for idx, (x, y, z) in enumerate(P):
            s_ = nx * x + ny * y + nz * z - off
            if s_ > 0:
                hi = True
            elif s_ < 0:
                lo = True
            else:
                tight.add(idx)
            if lo and hi:
                break
        else:
            if hi:
                nx, ny, nz, off = -nx, -ny, -nz, -off
            g = gcd(gcd(nx, ny), nz)
            key = (nx // g, ny // g, nz // g)
            if key in found:
                continue
            found[key] = Fraction(off, g * den)
            keys.append(key)
            tight_sets.append(tight)
            for idx in tight:
                on[idx].append(len(keys) - 1)
    facets = [(tuple(Fraction(c) for c in key), b) for key, b in found.items()]
    verts = [i for i, fs in enumerate(on) if _spans_space([keys[f] for f in fs])]
    return facets, verts


def _facets_3d(points, exact):
    """Facets of a full-dimensional 3D point set and the indices of its vertices.

    Brute force over point triples; exact input is scaled to integers first.
    """
    if exact:
        return _facets_3d_int(points)
    span = max(max(abs(c) for c in p) for p in points) or 1.0
    eps = TAU * span * span * span
    found = {}
    on = {}
    for i, j, k in itertools.combinations(range(len(points)), 3):
        a, b, c = points[i], points[j], points[k]
        nrm = cross(sub(b, a), sub(c, a))
        if all(abs(x) <= eps for x in nrm):
            continue
        off = dot(nrm, a)
        lo = hi = 0
        tight = []
        for idx, p in enumerate(points):
            s = dot(nrm, p) - off
            if s > eps:
                hi = 1
            elif s < -eps:
                lo = 1
            else:
                tight.append(idx)
            if lo and hi:
                break
        else:
            if hi:
                nrm, off = tuple(-x for x in nrm), -off
            key, b_ = _normalize(Halfspace(nrm, off), False)
            kk = tuple(round(x, 9) for x in key)
            if kk not in found:
                found[kk] = (key, b_)
                for idx in tight:
                    on.setdefault(idx, []).append(key)
    verts = [i for i, normals in on.items() if len(normals) >= 3 and rank(normals, TAU) == 3]
    return list(found.values()), sorted(verts)


def _hull(points, exact):
    eps = 0 if exact else TAU
    d = len(points[0])
    p0 = points[0]
    dirs = [sub(p, p0) for p in points[1:]]
    red, piv = rref(dirs, eps) if dirs else ([], [])
    k = len(piv)
    equalities = nullspace(red, d, eps) if k < d else []
    proj = [tuple(p[i] for i in piv) for p in points]
    if k == 0:
        verts = [p0]
        low = []
    elif k == 1:
        lo = min(range(len(points)), key=lambda i: proj[i])
        hi = max(range(len(points)), key=lambda i: proj[i])
        verts = [points[lo], points[hi]]
        one = Fraction(1) if exact else 1.0
        low = [((one,), proj[hi][0]), ((-one,), -proj[lo][0])]
    elif k == 2:
        index = {q: i for i, q in enumerate(proj)}
        ring = _chain(proj, eps)
        verts = [points[index[q]] for q in ring]
        low = _facets_2d(ring)
    else:
        low, idx = _facets_3d(proj, exact)
        verts = [points[i] for i in idx]
    zero = Fraction(0) if exact else 0.0
    facets = []
    for n, b in low:
        full = [zero] * d
        for i, a in zip(piv, n):
            full[i] = a
        h = Halfspace(tuple(full), b)
        nn, bb = _normalize(h, exact)
        facets.append(Halfspace(nn, bb))
    for n in equalities:
        if exact:
            n, _ = integer_direction(n)
        c = dot(n, p0)
        facets.append(Halfspace(tuple(n), c))
        facets.append(Halfspace(tuple(-a for a in n), -c))
    return verts, facets


def _prepare(points):
    pts = [tuple(p) for p in points]
    if not pts:
        raise GeometryError("convex hull of an empty point list")
    d = len(pts[0])
    if d < 1 or any(len(p) != d for p in pts):
        raise DimensionMismatch("points of mixed dimension")
    exact = _mode_of(pts)
    if exact:
        pts = [tuple(as_fraction(c) for c in p) for p in pts]
    else:
        pts = [tuple(float(c) for c in p) for p in pts]
    return pts, exact


def convex_hull(points) -> ConvexBody:
    pts, exact = _prepare(points)
    if len(pts[0]) > 3:
        raise GeometryError("dimension above 3 is not supported")
    pts = _dedupe(pts, exact)
    verts, facets = _hull(pts, exact)
    return ConvexBody(sorted(verts), facets)


def facet_enum(body: ConvexBody) -> list:
    return list(body.facets)


def ccw_ring(body: ConvexBody):
    """Planar vertices in counterclockwise order (segments: endpoint pair)."""
    if body.dim != 2:
        raise DimensionMismatch("ccw_ring needs a planar body")
    if len(body.vertices) <= 2:
        return list(body.vertices)
    ring = _chain(body.vertices, body.eps)
    if len(ring) < len(body.vertices):
        return list(body.vertices)
    return ring


# ------------------------------------------------------- H -> V conversions

def _is_bounded(halfspaces, d, exact):
    one = Fraction(1) if exact else 1.0
    zero = one - one
    G = [list(h.normal) for h in halfspaces]
    h = [zero] * len(G)
    for i in range(d):
        e = [zero] * d
        e[i] = one
        G.append(list(e))
        h.append(one)
        G.append([-x for x in e])
        h.append(one)
    for i in range(d):
        for sign in (one, -one):
            c = [zero] * d
            c[i] = -sign
            if lp.minimize(c, G, h, 0 if exact else TAU) < (0 if exact else -TAU):
                return False
    return True


def _vertices_3d_int(hs):
    """Vertices of an exact 3D halfspace system, plus the body when full-dimensional.

    Cramer's rule on integer-scaled rows avoids Fraction arithmetic in the
    inner loop: a point ``(X, Y, Z) / det`` satisfies row ``(a, b)`` when
    ``a . (X, Y, Z) <= b * det`` (with ``det > 0``).
    """
    rows = []
    for h in hs:
        den = 1
        for c in h.normal + (h.offset,):
            den = lcm(den, c.denominator)
        rows.append((tuple(int(c * den) for c in h.normal), int(h.offset * den)))
    found = set()
    for (a, p), (b, q), (c, r) in itertools.combinations(rows, 3):
        bc = cross(b, c)
        det = dot(a, bc)
        if det == 0:
            continue
        ca, ab = cross(c, a), cross(a, b)
        num = tuple(p * bc[i] + q * ca[i] + r * ab[i] for i in range(3))
        if det < 0:
            det, num = -det, tuple(-x for x in num)
        g = gcd(gcd(gcd(num[0], num[1]), num[2]), det)
        key = tuple(x // g for x in num) + (det // g,)
        if key in found:
            continue
        if all(dot(n, num) <= off * det for n, off in rows):
            found.add(key)
    pairs = sorted((tuple(Fraction(x, k[3]) for x in k[:3]), k) for k in found)
    verts = [v for v, _ in pairs]
    pts = [k for _, k in pairs]
    # For a full-dimensional result the facets are the rows tight at three
    # non-collinear vertices; a row tight everywhere means the result is flat.
    facets = []
    for h, (n, off) in zip(hs, rows):
        tight = [v for k, v in zip(pts, verts) if dot(n, k[:3]) == off * k[3]]
        if len(tight) == len(verts):
            return verts, None
        if len(tight) >= 3 and any(any(cross(sub(y, x), sub(z, x)))
                                   for x, y, z in itertools.combinations(tight, 3)):
            facets.append(h)
    return verts, ConvexBody(verts, facets)


def vertex_enum(halfspaces, dim=None, check_bounded=True) -> ConvexBody:
    """Vertices of ``{y : h.normal . y <= h.offset for all h}``."""
    hs = list(halfspaces)
    if not hs:
        raise UnboundedError("no halfspaces")
    d = dim or len(hs[0].normal)
    if any(len(h.normal) != d for h in hs):
        raise DimensionMismatch("halfspaces of mixed dimension")
    if d > 3:
        raise GeometryError("dimension above 3 is not supported")
    exact = _mode_of([h.normal for h in hs] + [(h.offset,) for h in hs])
    if exact:
        hs = [Halfspace(tuple(as_fraction(a) for a in h.normal), as_fraction(h.offset)) for h in hs]
    hs = canonical_halfspaces(hs, exact)
    eps = 0 if exact else TAU
    if check_bounded and not _is_bounded(hs, d, exact):
        raise UnboundedError("halfspace system is unbounded")
    body = None
    if exact and d == 3:
        cands, body = _vertices_3d_int(hs)
    else:
        cands = []
        for combo in itertools.combinations(hs, d):
            x = solve([h.normal for h in combo], [h.offset for h in combo], eps)
            if x is None:
                continue
            if all(dot(h.normal, x) <= h.offset + eps for h in hs):
                cands.append(x)
    if not cands:
        raise EmptyIntersection("halfspace system has no points")
    if body is not None:
        return body
    return convex_hull(cands)


def _clip(ring, h, eps):
    out = []
    n = len(ring)
    for i in range(n):
        p, q = ring[i], ring[(i + 1) % n]
        vp, vq = dot(h.normal, p) - h.offset, dot(h.normal, q) - h.offset
        if vq <= eps:
            if vp > eps:
                t = vp / (vp - vq)
                out.append(add(p, scale(t, sub(q, p))))
            out.append(q)
        elif vp <= eps:
            if vp < -eps or n == 1:
                t = vp / (vp - vq)
                out.append(add(p, scale(t, sub(q, p))))
    return out


def clip_polygon(body: ConvexBody, halfspaces) -> ConvexBody:
    """Planar intersection of a body with halfspaces (Sutherland-Hodgman)."""
    ring = ccw_ring(body)
    eps = body.eps
    for h in halfspaces:
        ring = _clip(ring, h, eps)
        if not ring:
            raise EmptyIntersection("clipped polygon is empty")
    return convex_hull(ring)


def intersect_bodies(bodies) -> ConvexBody:
    bodies = list(bodies)
    if not bodies:
        raise GeometryError("nothing to intersect")
    d = bodies[0].dim
    if any(b.dim != d for b in bodies):
        raise DimensionMismatch("bodies of mixed dimension")
    if len(bodies) == 1:
        return bodies[0]
    if d == 2:
        hs = canonical_halfspaces([h for b in bodies[1:] for h in b.facets], bodies[0].exact)
        return clip_polygon(bodies[0], hs)
    if d == 1:
        lo = max(b.vertices[0][0] for b in bodies)
        hi = min(b.vertices[-1][0] for b in bodies)
        if lo > hi + bodies[0].eps:
            raise EmptyIntersection("disjoint intervals")
        return convex_hull([(lo,), (hi,)])
    return vertex_enum([h for b in bodies for h in b.facets], d, check_bounded=False)


# ------------------------------------------------------------- predicates

def _check_dims(a, b):
    if a != b:
        raise DimensionMismatch(f"dimension {a} vs {b}")


def contains(body: ConvexBody, point, tol=None) -> bool:
    point = tuple(point)
    _check_dims(body.dim, len(point))
    eps = body.eps if tol is None else tol
    if body.exact and eps == 0 and all(type(c) is Fraction for c in point):
        den = 1
        for c in point:
            den = lcm(den, c.denominator)
        p = [int(c * den) for c in point]
        return all(sum(a * x for a, x in zip(n, p)) <= off * den for n, off in body.integer_facets)
    return all(dot(h.normal, point) <= h.offset + eps for h in body.facets)


def is_subset(a: ConvexBody, b: ConvexBody, tol=None) -> bool:
    _check_dims(a.dim, b.dim)
    return all(contains(b, v, tol) for v in a.vertices)


def bodies_equal(a: ConvexBody, b: ConvexBody, tol=None) -> bool:
    _check_dims(a.dim, b.dim)
    if a.exact and b.exact and not tol:
        return a.vertices == b.vertices
    return is_subset(a, b, tol) and is_subset(b, a, tol)


def edges(body: ConvexBody):
    """Vertex pairs spanning an edge of the body."""
    eps = body.eps
    if len(body.vertices) == 2:
        return [tuple(body.vertices)]
    out = []
    for u, w in itertools.combinations(body.vertices, 2):
        tight = [h.normal for h in body.facets
                 if abs(dot(h.normal, u) - h.offset) <= eps and abs(dot(h.normal, w) - h.offset) <= eps]
        if tight and rank(tight, eps) == body.dim - 1:
            out.append((u, w))
    return out
