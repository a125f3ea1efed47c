"""Registry of the finite-dimensional worked examples.

Every fact records where its expected value comes from:
``PAPER`` (stated in the source text), ``DERIVED`` (computed independently by
hand or closed form) or ``TRIVIAL``. Polyhedral facts are compared exactly;
Euclidean facts carry their own relative tolerance because balls are
inscribed 2k-gons.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from ..completion import (ball_hull, ball_intersection, ball_intersection_at,
                          completion_spread, has_unique_completion, is_complete,
                          is_mC, sample_completions, subset_completion_scan)
from ..geometry import (contains, convex_hull, edges,
                        intersect_bodies, is_subset)
from ..metrics import chebyshev, diam, hausdorff, inner_radius
from ..norms import EuclideanNorm, MaxNorm, SumNorm, ball
from ..scalar import fmt

PAPER, DERIVED, TRIVIAL = "PAPER", "DERIVED", "TRIVIAL"
EUCLID_K = 64
EUCLID_REL = 1e-3


@dataclass
class Fact:
    name: str
    expected: object
    compute: Callable[[], object]
    provenance: str
    rel_tol: float | None = None
    abs_tol: float | None = None


@dataclass
class ExampleCase:
    id: str
    title: str
    norm: object
    facts: list = field(default_factory=list)
    skipped: str | None = None


@dataclass
class FactResult:
    name: str
    provenance: str
    expected: object
    computed: object
    passed: bool
    error: str | None = None


@dataclass
class ExampleReport:
    id: str
    title: str
    results: list
    skipped: str | None = None

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)


def _q(*xs):
    return tuple(Fraction(x) for x in xs)


def _box(lo, hi):
    return convex_hull([(x, y) for x in (lo[0], hi[0]) for y in (lo[1], hi[1])])


def _distinct(traces):
    return len({t.final for t in traces})


# ------------------------------------------------------------------ cases

def _ex1a():
    M = MaxNorm()
    D = convex_hull([_q(0, 0), _q(1, 0)])
    rect = _box(_q(0, -1), _q(1, 1))
    return ExampleCase("EX1A", "max-norm segment: sharp chain", M, [
        Fact("D^c == D", True, lambda: ball_hull(D, M) == D, PAPER),
        Fact("D' == [0,1]x[-1,1]", True, lambda: ball_intersection(D, M) == rect, PAPER),
        Fact("delta(D')", Fraction(2), lambda: diam(ball_intersection(D, M), M), PAPER),
        Fact("r(D)", Fraction(1, 2), lambda: chebyshev(D, M).radius, PAPER),
        Fact("delta(D') == 4 r(D) (chain is sharp)", True,
             lambda: diam(ball_intersection(D, M), M) == 4 * chebyshev(D, M).radius, PAPER),
        Fact("(3') sharp: delta(D') == 2 delta(D) - 2 r'(D)", True,
             lambda: diam(ball_intersection(D, M), M) == 2 * diam(D, M) - 2 * inner_radius(D, M), PAPER),
        Fact("C_D == segment (1/2,-1/2)-(1/2,1/2)", True,
             lambda: chebyshev(D, M).centers == convex_hull([_q(0.5, -0.5), _q(0.5, 0.5)]), DERIVED),
        Fact("delta(C_D) == 2r - 2delta + delta(D') (center bound sharp)", True,
             lambda: diam(chebyshev(D, M).centers, M)
             == 2 * chebyshev(D, M).radius - 2 * diam(D, M) + diam(ball_intersection(D, M), M), PAPER),
    ])


def _ex1b():
    S = SumNorm()
    D = convex_hull([_q(1, 1, 0), _q(1, 0, 1), _q(0, 1, 1)])
    far = _q(Fraction(4, 3), Fraction(4, 3), Fraction(4, 3))
    origin = _q(0, 0, 0)
    center = _q(1, 1, 1)
    return ExampleCase("EX1B", "sum-norm triangle in R^3", S, [
        Fact("delta(D)", Fraction(2), lambda: diam(D, S), PAPER),
        Fact("r(D)", Fraction(1), lambda: chebyshev(D, S).radius, PAPER),
        Fact("C_D == {(1,1,1)}", True, lambda: chebyshev(D, S).centers == convex_hull([center]), PAPER),
        Fact("O in D'", True, lambda: contains(ball_intersection(D, S), origin), PAPER),
        Fact("(4/3,4/3,4/3) in D'", True, lambda: contains(ball_intersection(D, S), far), PAPER),
        Fact("||(4/3,4/3,4/3) - O||", Fraction(4), lambda: S(far), PAPER),
        Fact("unique completion", False, lambda: has_unique_completion(D, S), PAPER),
        Fact("D^c inside B(O, 2)", True, lambda: is_subset(ball_hull(D, S), ball(S, origin, 2)), PAPER),
        Fact("center (1,1,1) not in D^c", False, lambda: contains(ball_hull(D, S), center), PAPER),
        Fact("sampled completions differ", True,
             lambda: _distinct(sample_completions(D, S, 8, 0)) >= 2, PAPER),
    ])


def _lens(E, c1, c2, r):
    return intersect_bodies([ball(E, c1, r), ball(E, c2, r)])


def _ex1c():
    E = EuclideanNorm(EUCLID_K)
    D = convex_hull([(0.0, 0.0), (1.0, 0.0)])
    h = math.sqrt(3) / 2
    tol = 8 * E.polygon_gap(1.0)
    return ExampleCase("EX1C", "Euclidean segment: lens hull and intersection", E, [
        Fact("H(D^c, B((1/2,-s),1) & B((1/2,s),1)) small", True,
             lambda: hausdorff(ball_hull(D, E), _lens(E, (0.5, -h), (0.5, h), 1.0), E) <= tol, PAPER),
        Fact("H(D', B(O,1) & B((1,0),1)) small", True,
             lambda: hausdorff(ball_intersection(D, E), _lens(E, (0.0, 0.0), (1.0, 0.0), 1.0), E) <= tol, PAPER),
        Fact("delta(D')", math.sqrt(3), lambda: diam(ball_intersection(D, E), E), PAPER, EUCLID_REL),
        Fact("r(D') > r(D)", True,
             lambda: chebyshev(ball_intersection(D, E), E).radius > chebyshev(D, E).radius + tol, PAPER),
        Fact("unique completion", False, lambda: has_unique_completion(D, E), PAPER),
    ])


def _ex2():
    M = MaxNorm()
    D = convex_hull([_q(0, 0), _q(1, 0), _q(1, 1)])
    sq = _box(_q(0, 0), _q(1, 1))
    return ExampleCase("EX2", "max-norm triangle with nonempty interior", M, [
        Fact("delta(D)", Fraction(1), lambda: diam(D, M), PAPER),
        Fact("r(D)", Fraction(1, 2), lambda: chebyshev(D, M).radius, PAPER),
        Fact("r'(D)", Fraction(1, 4), lambda: inner_radius(D, M), PAPER),
        Fact("D' == [0,1]^2", True, lambda: ball_intersection(D, M) == sq, PAPER),
        Fact("D^c == [0,1]^2", True, lambda: ball_hull(D, M) == sq, PAPER),
        Fact("H(D, D')", Fraction(1, 2), lambda: hausdorff(D, ball_intersection(D, M), M), PAPER),
        Fact("H(D, D^c)", Fraction(1, 2), lambda: hausdorff(D, ball_hull(D, M), M), PAPER),
        Fact("unique completion", True, lambda: has_unique_completion(D, M), PAPER),
    ])


def _ex4a_case(a):
    E = EuclideanNorm(EUCLID_K)
    s3 = math.sqrt(3)
    A = convex_hull([(-1.0, 0.0), (1.0, 0.0), (0.0, s3)])
    c, R = (0.0, a), math.sqrt(a * a + 1)
    B = ball(E, c, R)
    tol = 8 * E.polygon_gap(2 * R)

    def true_inside(p):
        return E((p[0] - c[0], p[1] - c[1])) <= R + 1e-12

    return E, A, B, c, R, tol, true_inside


def _ex4a():
    E, A, B, c, R, tol, inside = _ex4a_case(1 / math.sqrt(3))
    _, _, B2, c2, R2, tol2, inside2 = _ex4a_case(2.0)
    s3 = math.sqrt(3)
    bottom = (0.0, s3 - 2)
    return ExampleCase("EX4A", "Euclidean triangle inside a ball (a = 1/sqrt3 and a = 2)", E, [
        Fact("a=1/sqrt3: A inside B", True, lambda: all(inside(v) for v in A.vertices), PAPER),
        Fact("a=1/sqrt3: delta(A) < delta(B)", True, lambda: diam(A, E) < 2 * R - tol, PAPER),
        Fact("a=1/sqrt3: B^c == B", True, lambda: hausdorff(ball_hull(B, E), B, E) <= tol, PAPER),
        Fact("a=1/sqrt3: B not inside A^c", False, lambda: is_subset(B, ball_hull(A, E), tol), PAPER),
        Fact("Reuleaux triangle A^c is complete", True, lambda: is_complete(ball_hull(A, E), E), PAPER),
        Fact("A has a unique completion", True, lambda: has_unique_completion(A, E), PAPER),
        Fact("a=2: A inside B", True, lambda: all(inside2(v) for v in A.vertices), PAPER),
        Fact("a=2: B not inside A^c", False, lambda: is_subset(B2, ball_hull(A, E), tol2), PAPER),
        Fact("a=2: Reuleaux bottom (0, sqrt3-2) outside B", True,
             lambda: E((bottom[0] - c2[0], bottom[1] - c2[1])) - R2 > 1e-6, PAPER),
        Fact("lowest point of computed A^c", s3 - 2,
             lambda: ball_hull(A, E).bounding_box()[0][1], DERIVED, abs_tol=8 * E.polygon_gap(2.0)),
        Fact("a=2: A^c not inside B", False, lambda: is_subset(ball_hull(A, E), B2, tol2), PAPER),
    ])


def _ex4b():
    E = EuclideanNorm(EUCLID_K)
    eps = 0.1
    A = convex_hull([(-0.5, 0.0), (0.5, 0.0)])
    B = ball(E, (0.0, 0.0), 0.5 + eps)
    tol = 8 * E.polygon_gap(1.2)
    return ExampleCase("EX4B", "Euclidean segment and a slightly larger disk (eps = 1/10)", E, [
        Fact("B' == B", True, lambda: hausdorff(ball_intersection(B, E), B, E) <= tol, PAPER),
        Fact("B' inside A'", False, lambda: is_subset(ball_intersection(B, E), ball_intersection(A, E), tol), PAPER),
        Fact("A' inside B'", False, lambda: is_subset(ball_intersection(A, E), ball_intersection(B, E), tol), PAPER),
        Fact("r(A') > r(B')", True,
             lambda: chebyshev(ball_intersection(A, E), E).radius
             > chebyshev(ball_intersection(B, E), E).radius + tol, PAPER),
        Fact("r(A')", math.sqrt(3) / 2, lambda: chebyshev(ball_intersection(A, E), E).radius, DERIVED, EUCLID_REL),
    ])


def _ex7():
    M = MaxNorm()
    C = _box(_q(0, 0), _q(1, 1))
    D1 = convex_hull([_q(0, 0), _q(1, 0)])
    D2 = convex_hull([_q(0, 0), _q(1, 1)])
    D3 = convex_hull([_q(0, 1), _q(1, 0)])
    return ExampleCase("EX7", "max-norm segments in the unit square", M, [
        Fact("D1 unique completion", False, lambda: has_unique_completion(D1, M), PAPER),
        Fact("D1 sampled completions differ", True, lambda: _distinct(sample_completions(D1, M, 8, 0)) >= 2, PAPER),
        Fact("D2 unique completion", True, lambda: has_unique_completion(D2, M), PAPER),
        Fact("D3 unique completion", True, lambda: has_unique_completion(D3, M), PAPER),
        Fact("D2' == C", True, lambda: ball_intersection(D2, M) == C, PAPER),
        Fact("D3' == C", True, lambda: ball_intersection(D3, M) == C, PAPER),
        Fact("D1 is (mC) in C", True, lambda: is_mC(D1, C, M), PAPER),
        Fact("D2 is (mC) in C", True, lambda: is_mC(D2, C, M), PAPER),
        Fact("D3 is (mC) in C", True, lambda: is_mC(D3, C, M), PAPER),
        Fact("delta(D2 & D3) < delta(C)", True,
             lambda: diam(intersect_bodies([D2, D3]), M) < diam(C, M), PAPER),
        Fact("D1 completion spread", Fraction(1), lambda: completion_spread(D1, M, 8, 0), DERIVED),
        Fact("delta(D1') - delta(D1) <= spread", True,
             lambda: diam(ball_intersection(D1, M), M) - diam(D1, M) <= completion_spread(D1, M, 8, 0), PAPER),
    ])


def _ex8():
    M = MaxNorm()
    C = _box(_q(0, 0), _q(1, 1))
    D4 = convex_hull([_q(0, 0), _q(0, 1), _q(1, Fraction(1, 2))])
    return ExampleCase("EX8", "max-norm triangle that is (muC) but not a segment", M, [
        Fact("D4 == {0<=x<=1, x/2<=y<=1-x/2}", True,
             lambda: D4.vertices == (_q(0, 0), _q(0, 1), _q(1, Fraction(1, 2))), PAPER),
        Fact("D4 unique completion", True, lambda: has_unique_completion(D4, M), PAPER),
        Fact("D4' == C", True, lambda: ball_intersection(D4, M) == C, PAPER),
        Fact("D4 complete", False, lambda: is_complete(D4, M), PAPER),
        Fact("D4 is (mC) in C", False, lambda: is_mC(D4, C, M), PAPER),
        Fact("every probed subset has several completions", True,
             lambda: subset_completion_scan(D4, C, M).muc_evidence, PAPER),
        Fact("every boundary segment of D4 is (mC)", True,
             lambda: all(is_mC(convex_hull(e), C, M) for e in edges(D4)), PAPER),
    ])


def _rem2():
    E = EuclideanNorm(EUCLID_K)
    S = convex_hull([(0.0, 0.0), (1.0, 0.0)])
    return ExampleCase("REM2", "Euclidean lens: diameter grows by more than twice the added radius", E, [
        Fact("delta(A), alpha = 1", math.sqrt(3), lambda: diam(ball_intersection_at(S, 1, E), E), PAPER, EUCLID_REL),
        Fact("delta(A_eps), alpha = eps = 1", 3 * math.sqrt(3),
             lambda: diam(ball_intersection_at(S, 2, E), E), PAPER, EUCLID_REL),
        Fact("delta(A_eps) closed form sqrt(15)", math.sqrt(15),
             lambda: diam(ball_intersection_at(S, 2, E), E), DERIVED, EUCLID_REL),
        Fact("delta(A_eps) > delta(A) + 2 eps", True,
             lambda: diam(ball_intersection_at(S, 2, E), E) > diam(ball_intersection_at(S, 1, E), E) + 2, PAPER),
    ])


def _skipped(id_, title):
    return ExampleCase(id_, title, None, [], skipped="infinite-dimensional")


BUILDERS = {
    "EX1A": _ex1a, "EX1B": _ex1b, "EX1C": _ex1c, "EX2": _ex2,
    "EX4A": _ex4a, "EX4B": _ex4b, "EX7": _ex7, "EX8": _ex8, "REM2": _rem2,
}
SKIPPED = {
    "EX3": "C[-1,1] family D_t",
    "EX5": "C[0,1] set with a ball as unique completion",
    "EX6": "c_0 set with r(D) = r(D')",
}


def example_ids(include_skipped=False):
    ids = list(BUILDERS)
    return ids + list(SKIPPED) if include_skipped else ids


def get_case(id_: str) -> ExampleCase:
    key = id_.upper()
    if key in BUILDERS:
        return BUILDERS[key]()
    if key in SKIPPED:
        return _skipped(key, SKIPPED[key])
    raise KeyError(f"unknown example id {id_!r}")


def _matches(expected, computed, rel_tol, abs_tol):
    if isinstance(expected, bool) or (rel_tol is None and abs_tol is None):
        return computed == expected
    err = abs(float(computed) - float(expected))
    if abs_tol is not None:
        return err <= abs_tol
    return err <= rel_tol * abs(float(expected))


def run_example(id_: str) -> ExampleReport:
    case = get_case(id_)
    if case.skipped:
        return ExampleReport(case.id, case.title, [], case.skipped)
    results = []
    for f in case.facts:
        try:
            got = f.compute()
            ok = _matches(f.expected, got, f.rel_tol, f.abs_tol)
            results.append(FactResult(f.name, f.provenance, f.expected, got, ok))
        except Exception as exc:  # a crash is a failed fact, not a crashed report
            results.append(FactResult(f.name, f.provenance, f.expected, None, False, repr(exc)))
    return ExampleReport(case.id, case.title, results)


def report_to_json(rep: ExampleReport) -> dict:
    def val(x):
        return x if isinstance(x, bool) or x is None else fmt(x)

    return {
        "id": rep.id, "title": rep.title, "skipped": rep.skipped, "passed": rep.passed,
        "facts": [{"name": r.name, "provenance": r.provenance, "expected": val(r.expected),
                   "computed": val(r.computed), "passed": r.passed, "error": r.error}
                  for r in rep.results],
    }
