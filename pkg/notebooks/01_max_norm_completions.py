# %% [markdown]
# # Completions in the max norm
#
# In the max norm every complete set is a cube, so the picture is easy to
# check by eye. We start with a right triangle whose diameter is 1 and look at
# the two sets that bracket all of its completions: the ball hull (what every
# completion contains) and the ball intersection (what any completion may use).

# %%
from fractions import Fraction as F
from pathlib import Path

from diamax import MaxNorm, ball_hull, ball_intersection, chebyshev, convex_hull, diam
from diamax.completion import complete_one, completion_spread, has_unique_completion, sample_completions
from diamax.render import Scene, to_svg

M = MaxNorm()


def show(body):
    return [tuple(str(c) for c in v) for v in body.vertices]


tri = convex_hull([(F(0), F(0)), (F(1), F(0)), (F(1), F(1))])
print("diameter", diam(tri, M), "radius", chebyshev(tri, M).radius)
print("ball intersection", show(ball_intersection(tri, M)))
print("ball hull        ", show(ball_hull(tri, M)))

# %% [markdown]
# Both sets are the unit square, so the completion is forced. The greedy
# completion reaches it in one step.

# %%
tr = complete_one(tri, M)
print(tr.status, "added", [tuple(map(str, v)) for v in tr.added])
print("unique completion:", has_unique_completion(tri, M))

# %% [markdown]
# A horizontal unit segment behaves differently. Its ball intersection is the
# rectangle [0,1] x [-1,1], twice as tall as any completion can be, and every
# unit square sliding vertically over the segment is a completion.

# %%
seg = convex_hull([(F(0), F(0)), (F(1), F(0))])
print("segment D'", show(ball_intersection(seg, M)))
for t in sample_completions(seg, M, 6, seed=0):
    lo, hi = t.final.bounding_box()
    print("completion spanning y in", (str(lo[1]), str(hi[1])))
print("spread of sampled completions (lower bound):", completion_spread(seg, M, 8, seed=0))

# %%
scene = Scene(norm=M)
scene.add("segment", seg)
scene.add("ball intersection", ball_intersection(seg, M), dashed=True, fill=False)
scene.add("one completion", complete_one(seg, M).final)
Path("max_norm_segment.svg").write_text(to_svg(scene))
print("wrote max_norm_segment.svg")
