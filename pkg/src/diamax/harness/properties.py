"""Randomized property suite over polyhedral norms.

Each trial draws a norm (max, sum or a random symmetric gauge), a dimension
and a random rational polytope, then pushes the body through every property
below. A property returns ``True`` (holds), ``False`` (counterexample) or
``None`` when its premise is not met for that body. Reports are reproducible
from ``(seed, config)``: trial ``i`` uses its own ``Random(f"{seed}:{i}")``.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from ..completion import (EXACT, ball_hull, ball_intersection, ball_intersection_at,
                          complete_one, has_unique_completion, is_complete,
                          sample_completions)
from ..geometry import (ConvexBody, EmptyIntersection, add, contains, convex_hull,
                        intersect_bodies, is_subset, scale)
from ..metrics import (chebyshev, diam, farthest_radius, hausdorff, inner_radius,
                       self_radius)
from ..norms import MaxNorm, Norm, SumNorm, symmetric_gauge

NORM_FAMILIES = ("max", "sum", "gauge")


@dataclass
class PropertyConfig:
    seed: int = 0
    trials: int = 200
    dims: tuple = (2, 3)
    norms: tuple = NORM_FAMILIES
    samples: int = 3
    probes: int = 8
    only: tuple | None = None


@dataclass
class PropertyStats:
    passed: int = 0
    failed: int = 0
    vacuous: int = 0
    counterexample: dict | None = None


@dataclass
class PropertyReport:
    config: PropertyConfig
    stats: dict = field(default_factory=dict)

    @property
    def failures(self) -> int:
        return sum(s.failed for s in self.stats.values())

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def table(self) -> str:
        width = max(len(k) for k in self.stats) if self.stats else 8
        lines = [f"{'property':<{width}}  pass  fail  n/a"]
        for name, s in self.stats.items():
            lines.append(f"{name:<{width}}  {s.passed:>4}  {s.failed:>4}  {s.vacuous:>3}")
        return "\n".join(lines)


# ------------------------------------------------------------------ sampling

def _rat(rng, lo=-2, hi=2, den=4):
    return Fraction(rng.randint(lo * den, hi * den), den)


def random_body(rng: random.Random, dim: int, lo=3, hi=8) -> ConvexBody:
    """Hull of 3 to 8 random points with coordinates in [-2, 2] (step 1/4)."""
    while True:
        pts = [tuple(_rat(rng) for _ in range(dim)) for _ in range(rng.randint(lo, hi))]
        body = convex_hull(pts)
        if len(body.vertices) >= 2:
            return body


def random_gauge(rng: random.Random, dim: int):
    while True:
        pts = [tuple(Fraction(rng.randint(-2, 2), rng.randint(1, 2)) for _ in range(dim))
               for _ in range(dim + rng.randint(0, 1))]
        try:
            return symmetric_gauge(pts)
        except ValueError:
            continue


def make_norm(kind: str, rng: random.Random, dim: int) -> Norm:
    if kind == "max":
        return MaxNorm()
    if kind == "sum":
        return SumNorm()
    if kind == "gauge":
        return random_gauge(rng, dim)
    raise ValueError(f"unknown norm family {kind!r}")


def _random_in(rng, body: ConvexBody):
    """A random convex combination of the vertices of a body."""
    w = [Fraction(rng.randint(0, 8)) for _ in body.vertices]
    if not any(w):
        w[0] = Fraction(1)
    s = sum(w)
    pt = tuple(Fraction(0) for _ in range(body.dim))
    for wi, v in zip(w, body.vertices):
        pt = add(pt, scale(wi / s, v))
    return pt


def _random_near(rng, body: ConvexBody, pad=Fraction(1, 2)):
    lo, hi = body.bounding_box()
    return tuple(a - pad + (b - a + 2 * pad) * Fraction(rng.randint(0, 32), 32) for a, b in zip(lo, hi))


# ------------------------------------------------------------------ context

class Trial:
    """One random instance with the derived bodies every property needs."""

    def __init__(self, index, rng, dim, norm, body, config):
        self.index = index
        self.rng = rng
        self.dim = dim
        self.n = norm
        self.D = body
        self.config = config
        self.delta = diam(body, norm)
        self.Dp = ball_intersection(body, norm)
        self.Dc = ball_hull(body, norm)
        self._samples = None
        self._extension = None

    @property
    def samples(self):
        if self._samples is None:
            self._samples = sample_completions(self.D, self.n, self.config.samples, self.rng.getrandbits(32))
        return self._samples

    @property
    def extension(self):
        """``hull(D + v)`` for a vertex v of ``D'`` outside D; keeps the diameter."""
        if self._extension is None:
            outside = [v for v in self.Dp.vertices if not contains(self.D, v)]
            v = outside[self.rng.randrange(len(outside))] if outside else self.Dp.vertices[0]
            self._extension = convex_hull(self.D.vertices + (v,))
        return self._extension

    def describe(self) -> dict:
        from ..io import body_to_json
        return {"trial": self.index, "dim": self.dim, "norm": self.n.to_json(),
                "body": body_to_json(self.D)}


# ------------------------------------------------------------------ properties

def p_chain(t: Trial):
    n, D, Dp = t.n, t.D, t.Dp
    anchors = list(D.vertices) + [_random_in(t.rng, D) for _ in range(2)]
    terms = [diam(Dp, n), 2 * chebyshev(Dp, n).radius, 2 * self_radius(Dp, n),
             2 * min(farthest_radius(Dp, x, n) for x in anchors),
             2 * t.delta, 4 * chebyshev(D, n).radius]
    ok = all(a <= b for a, b in zip(terms, terms[1:]))
    return ok, {"terms": terms}


def p_inner_bound(t: Trial):
    rp = inner_radius(t.D, t.n)
    lhs, rhs = diam(t.Dp, t.n), 2 * t.delta - 2 * rp
    return lhs <= rhs, {"delta(D')": lhs, "2delta-2r'": rhs}


def p_hausdorff_bound(t: Trial):
    rp = inner_radius(t.D, t.n)
    h = hausdorff(t.D, t.Dp, t.n)
    mid = t.delta - 2 * rp
    top = 2 * (chebyshev(t.D, t.n).radius - rp)
    return h <= mid <= top, {"H(D,D')": h, "delta-2r'": mid, "2(r-r')": top}


def p_membership(t: Trial):
    for _ in range(t.config.probes):
        x = _random_near(t.rng, t.Dp)
        if contains(t.Dp, x) != (farthest_radius(t.D, x, t.n) <= t.delta):
            return False, {"x": x}
    for v in t.Dp.vertices:
        if farthest_radius(t.D, v, t.n) > t.delta:
            return False, {"x": v}
    return True, {}


def p_hull_near(t: Trial):
    h, rr = hausdorff(t.D, t.Dc, t.n), self_radius(t.D, t.n)
    return h <= rr, {"H(D,D^c)": h, "r(D,D)": rr}


def _same_pair(A, B, n):
    same_hull = ball_hull(A, n) == ball_hull(B, n)
    same_inter = ball_intersection(A, n) == ball_intersection(B, n)
    return same_hull == same_inter, {"A": A, "B": B, "A^c==B^c": same_hull, "A'==B'": same_inter}


def p_hull_iff_intersection(t: Trial):
    other = random_body(t.rng, t.dim)
    for A, B in ((t.D, t.Dc), (t.D, t.extension), (t.D, other)):
        ok, info = _same_pair(A, B, t.n)
        if not ok:
            return False, info
    return True, {}


def p_center_bound(t: Trial):
    cs = chebyshev(t.D, t.n)
    lhs = diam(cs.centers, t.n)
    rhs = 2 * cs.radius - 2 * t.delta + diam(t.Dp, t.n)
    inside = is_subset(cs.centers, t.Dp)
    return lhs <= rhs and inside, {"delta(C_D)": lhs, "bound": rhs, "C_D in D'": inside}


def p_blow_up(t: Trial):
    r = chebyshev(t.D, t.n).radius
    alpha = r + Fraction(t.rng.randint(0, 8), 8)
    eps = Fraction(t.rng.randint(1, 8), 8)
    A = ball_intersection_at(t.D, alpha, t.n)
    Ae = ball_intersection_at(t.D, alpha + eps, t.n)
    lhs, rhs = diam(Ae, t.n), diam(A, t.n) + 2 * eps
    return lhs >= rhs, {"alpha": alpha, "eps": eps, "delta(A_eps)": lhs, "delta(A)+2eps": rhs}


def _union_not_convex(D1, D2):
    # a midpoint of two vertices outside both bodies witnesses non-convexity
    for u, v in itertools.product(D1.vertices, D2.vertices):
        m = scale(Fraction(1, 2), add(u, v))
        if not contains(D1, m) and not contains(D2, m):
            return True
    return False


def p_completion_pairs(t: Trial):
    finals = list(dict.fromkeys(s.final for s in t.samples if s.status == EXACT))
    if len(finals) < 2:
        return None, {}
    for D1, D2 in itertools.combinations(finals, 2):
        hull = convex_hull(D1.vertices + D2.vertices)
        if not (_union_not_convex(D1, D2) or not is_complete(hull, t.n)):
            return False, {"D1": D1, "D2": D2, "part": "union"}
        try:
            cap = intersect_bodies([D1, D2])
        except EmptyIntersection:
            return False, {"D1": D1, "D2": D2, "part": "empty intersection"}
        if diam(cap, t.n) != t.delta or is_complete(cap, t.n):
            return False, {"D1": D1, "D2": D2, "part": "intersection"}
    return True, {}


def p_equal_diameters(t: Trial):
    other = random_body(t.rng, t.dim)
    if diam(other, t.n) != t.delta:
        if ball_hull(other, t.n) == t.Dc or ball_intersection(other, t.n) == t.Dp:
            return False, {"B": other}
    # contrapositive: equal ball intersections force equal diameters
    for B in (t.Dc, t.extension):
        if ball_intersection(B, t.n) == t.Dp and diam(B, t.n) != t.delta:
            return False, {"B": B}
    return True, {}


def p_hull_shares(t: Trial):
    a, b = chebyshev(t.D, t.n), chebyshev(t.Dc, t.n)
    if a.radius != b.radius or a.centers != b.centers:
        return False, {"r(D)": a.radius, "r(D^c)": b.radius}
    for s in sample_completions(t.Dc, t.n, t.config.samples, t.rng.getrandbits(32)):
        C = s.final
        if s.status != EXACT or not is_subset(t.D, C) or diam(C, t.n) != t.delta:
            return False, {"completion of D^c": C}
    for s in t.samples:
        if s.status == EXACT and not is_subset(t.Dc, s.final):
            return False, {"completion of D": s.final}
    return True, {}


def p_unique_heredity(t: Trial):
    A, B = t.D, t.extension
    if not has_unique_completion(A, t.n):
        return None, {}
    ok = has_unique_completion(B, t.n) and ball_intersection(B, t.n) == t.Dp
    return ok, {"B": B}


def p_monotone(t: Trial):
    A, B = t.D, t.extension
    if diam(B, t.n) != t.delta:
        return False, {"B": B, "why": "extension changed the diameter"}
    ok = is_subset(ball_hull(A, t.n), ball_hull(B, t.n)) and is_subset(ball_intersection(B, t.n), t.Dp)
    return ok, {"B": B}


def p_hull_idempotent(t: Trial):
    ok = ball_hull(t.Dc, t.n) == t.Dc and ball_intersection(t.Dc, t.n) == t.Dp
    return ok, {}


def p_hull_diameter(t: Trial):
    d = diam(t.Dc, t.n)
    return d == t.delta and is_subset(t.D, t.Dc) and is_subset(t.Dc, t.Dp), {"delta(D^c)": d}


def p_radius(t: Trial):
    r = chebyshev(t.D, t.n).radius
    if chebyshev(t.Dc, t.n).radius != r:
        return False, {"r(D)": r}
    for s in t.samples:
        if chebyshev(s.final, t.n).radius < r:
            return False, {"completion": s.final}
    return True, {}


def p_hull_in_completions(t: Trial):
    for s in t.samples:
        if s.status != EXACT:
            return False, {"status": s.status}
        if not is_subset(t.Dc, s.final):
            return False, {"completion": s.final}
    return True, {}


def p_constructive(t: Trial):
    for v in t.Dp.vertices:
        tr = complete_one(convex_hull(t.D.vertices + (v,)), t.n)
        C = tr.final
        if tr.status != EXACT or not contains(C, v) or not is_subset(t.D, C) or diam(C, t.n) != t.delta:
            return False, {"v": v, "status": tr.status}
    return True, {}


def p_translation(t: Trial):
    shift = tuple(_rat(t.rng, -1, 1) for _ in range(t.dim))
    moved = t.D.translate(shift)
    same = (diam(moved, t.n) == t.delta
            and chebyshev(moved, t.n).radius == chebyshev(t.D, t.n).radius
            and inner_radius(moved, t.n) == inner_radius(t.D, t.n)
            and self_radius(moved, t.n) == self_radius(t.D, t.n)
            and ball_intersection(moved, t.n) == t.Dp.translate(shift))
    return same, {"shift": shift}


PROPERTIES = {
    "radius_chain": p_chain,
    "inner_radius_bound": p_inner_bound,
    "hausdorff_bound": p_hausdorff_bound,
    "membership": p_membership,
    "hull_near_body": p_hull_near,
    "hull_iff_intersection": p_hull_iff_intersection,
    "center_set_bound": p_center_bound,
    "blow_up_growth": p_blow_up,
    "completion_pairs": p_completion_pairs,
    "equal_sets_equal_diameter": p_equal_diameters,
    "hull_shares_centers": p_hull_shares,
    "unique_heredity": p_unique_heredity,
    "monotonicity": p_monotone,
    "hull_idempotent": p_hull_idempotent,
    "hull_diameter": p_hull_diameter,
    "radius_hull": p_radius,
    "hull_in_completions": p_hull_in_completions,
    "constructive": p_constructive,
    "translation": p_translation,
}


def _jsonable(info):
    from ..io import body_to_json, vec_to_json
    from ..scalar import fmt

    out = {}
    for k, v in info.items():
        if isinstance(v, ConvexBody):
            out[k] = body_to_json(v)
        elif isinstance(v, tuple):
            out[k] = vec_to_json(v)
        elif isinstance(v, list):
            out[k] = [fmt(x) for x in v]
        elif isinstance(v, (bool, str)) or v is None:
            out[k] = v
        else:
            out[k] = fmt(v)
    return out


def make_trial(config: PropertyConfig, i: int) -> Trial:
    rng = random.Random(f"{config.seed}:{i}")
    dim = rng.choice(tuple(config.dims))
    norm = make_norm(rng.choice(tuple(config.norms)), rng, dim)
    body = random_body(rng, dim)
    return Trial(i, rng, dim, norm, body, config)


def run_properties(config: PropertyConfig | None = None) -> PropertyReport:
    config = config or PropertyConfig()
    if config.trials < 1:
        raise ValueError("trials must be at least 1")
    names = list(PROPERTIES) if not config.only else [p for p in PROPERTIES if p in config.only]
    if config.only and len(names) != len(set(config.only)):
        raise KeyError(f"unknown properties: {sorted(set(config.only) - set(PROPERTIES))}")
    report = PropertyReport(config, {name: PropertyStats() for name in names})
    for i in range(config.trials):
        t = make_trial(config, i)
        for name in names:
            stats = report.stats[name]
            try:
                ok, info = PROPERTIES[name](t)
            except Exception as exc:  # a crash counts as a counterexample
                ok, info = False, {"error": repr(exc)}
            if ok is None:
                stats.vacuous += 1
            elif ok:
                stats.passed += 1
            else:
                stats.failed += 1
                if stats.counterexample is None:
                    stats.counterexample = {**t.describe(), "detail": _jsonable(info)}
    return report


def report_to_json(rep: PropertyReport) -> dict:
    c = rep.config
    return {
        "config": {"seed": c.seed, "trials": c.trials, "dims": list(c.dims), "norms": list(c.norms)},
        "passed": rep.passed,
        "properties": {k: {"passed": s.passed, "failed": s.failed, "vacuous": s.vacuous,
                           "counterexample": s.counterexample} for k, s in rep.stats.items()},
    }
