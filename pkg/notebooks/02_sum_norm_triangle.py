# %% [markdown]
# # A triangle in three-dimensional sum-norm space
#
# The triangle with vertices (1,1,0), (1,0,1), (0,1,1) has diameter 2 and a
# single Chebyshev center (1,1,1). The center lies outside the ball hull,
# which shows that centers need not sit inside every completion.

# %%
from fractions import Fraction as F

from diamax import SumNorm, ball, ball_hull, ball_intersection, chebyshev, contains, convex_hull, diam, is_subset
from diamax.completion import has_unique_completion, sample_completions

S = SumNorm()
q = lambda *xs: tuple(F(x) for x in xs)
D = convex_hull([q(1, 1, 0), q(1, 0, 1), q(0, 1, 1)])
cs = chebyshev(D, S)
print("diameter", diam(D, S), "radius", cs.radius, "centers", cs.centers.vertices)

# %% [markdown]
# The ball intersection contains the origin and (4/3, 4/3, 4/3), which are 4
# apart, so it is twice as wide as D and the completion is not unique.

# %%
Dp = ball_intersection(D, S)
print(contains(Dp, q(0, 0, 0)), contains(Dp, q("4/3", "4/3", "4/3")), diam(Dp, S))
print("unique completion:", has_unique_completion(D, S))

# %% [markdown]
# The ball hull stays inside the sum-norm ball of radius 2 around the origin,
# and (1,1,1) is at distance 3 from the origin.

# %%
Dc = ball_hull(D, S)
print("hull inside B(O,2):", is_subset(Dc, ball(S, q(0, 0, 0), 2)))
print("center in hull:", contains(Dc, q(1, 1, 1)))
finals = {t.final for t in sample_completions(D, S, 8, seed=0)}
print(len(finals), "distinct completions among 8 samples")
