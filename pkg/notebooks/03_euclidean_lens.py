# %% [markdown]
# # Euclidean lenses and the Reuleaux triangle
#
# Euclidean balls are replaced by inscribed regular 2k-gons, so answers carry
# an error of order 1/k^2. With k = 64 they match closed forms to about 1e-3.

# %%
import math

from diamax import EuclideanNorm, ball_hull, ball_intersection_at, convex_hull, diam
from diamax.completion import check_constant_diameter, is_complete

E = EuclideanNorm(64)
seg = convex_hull([(0.0, 0.0), (1.0, 0.0)])
lens = ball_intersection_at(seg, 1.0, E)
print("lens of radius 1:", diam(lens, E), "vs sqrt(3) =", math.sqrt(3))

# %% [markdown]
# Doubling the radius grows the diameter by more than twice the added radius.
# The tips of the wider lens sit at (1/2, +-sqrt(15)/2).

# %%
wide = ball_intersection_at(seg, 2.0, E)
print("lens of radius 2:", diam(wide, E), "vs sqrt(15) =", math.sqrt(15))
print("growth beyond 2:", diam(wide, E) - diam(lens, E) - 2)

# %% [markdown]
# The ball hull of an equilateral triangle is its Reuleaux triangle. It is
# complete and has constant width, which we probe at random outside points.

# %%
tri = convex_hull([(-1.0, 0.0), (1.0, 0.0), (0.0, math.sqrt(3))])
T = ball_hull(tri, E)
print("complete:", is_complete(T, E))
print("lowest point", T.bounding_box()[0][1], "vs", math.sqrt(3) - 2)
print("constant diameter at probes:", check_constant_diameter(T, E, probes=16, seed=0))

# %% [markdown]
# For the unit segment, compare the spread between sampled completions (a
# lower bound for the largest distance between two completions) with the
# largest distance from a sampled completion back to the segment. These are
# numbers to look at, not a proof of either inequality.

# %%
from itertools import combinations

from diamax import hausdorff
from diamax.completion import sample_completions

finals = [t.final for t in sample_completions(seg, E, 6, seed=0)]
pairwise = max(hausdorff(a, b, E) for a, b in combinations(finals, 2))
to_segment = max(hausdorff(f, seg, E) for f in finals)
print(f"max H(D1, D2) over samples: {pairwise:.4f}")
print(f"max H(D1, D) over samples:  {to_segment:.4f}")
