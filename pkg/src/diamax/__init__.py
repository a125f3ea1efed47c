"""Complete (diametrically maximal) sets in finite-dimensional normed spaces.

Polyhedral norms (max, sum, symmetric polytope gauges) run in exact rational
arithmetic; the Euclidean plane runs in floating point on inscribed 2k-gons.
"""
from .completion import (CAPPED, EXACT, TOLERANCE, CompletionTrace, MinimalityReport,
                         ball_hull, ball_intersection, ball_intersection_at,
                         check_constant_diameter, complete_one, completion_spread,
                         has_unique_completion, is_complete, is_mC, sample_completions,
                         subset_completion_scan)
from .geometry import (ConvexBody, DimensionMismatch, EmptyIntersection, GeometryError,
                       Halfspace, PreconditionError, UnboundedError, bodies_equal,
                       contains, convex_hull, facet_enum, intersect_bodies, is_subset,
                       vertex_enum)
from .metrics import (CenterSet, DiameterResult, chebyshev, diam, diameter,
                      farthest_radius, hausdorff, inner_radius, point_dist, self_radius)
from .norms import EuclideanNorm, GaugeNorm, MaxNorm, Norm, SumNorm, ball, norm_eval
from .scalar import TAU

__version__ = "0.1.0"

__all__ = [
    "CAPPED", "EXACT", "TOLERANCE", "TAU",
    "CenterSet", "CompletionTrace", "ConvexBody", "DiameterResult", "DimensionMismatch",
    "EmptyIntersection", "EuclideanNorm", "GaugeNorm", "GeometryError", "Halfspace",
    "MaxNorm", "MinimalityReport", "Norm", "PreconditionError", "SumNorm", "UnboundedError",
    "ball", "ball_hull", "ball_intersection", "ball_intersection_at", "bodies_equal",
    "chebyshev", "check_constant_diameter", "complete_one", "completion_spread", "contains",
    "convex_hull", "diam", "diameter", "facet_enum", "farthest_radius", "has_unique_completion",
    "hausdorff", "inner_radius", "intersect_bodies", "is_complete", "is_mC", "is_subset",
    "norm_eval", "point_dist", "sample_completions", "self_radius", "subset_completion_scan",
    "vertex_enum",
]
