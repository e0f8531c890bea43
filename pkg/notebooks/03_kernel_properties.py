# %% [markdown]
# # What the kernel reduces to
#
# Positions where both vectors miss contribute nothing to either sum, so the
# score depends only on the count of shared hits and of mismatches. That is
# the Jaccard coefficient of the two vectors read as sets.

# %%
import itertools

import numpy as np

from faultblocks import baseline_scores, sflm

diffs = []
for n in range(1, 7):
    for u in itertools.product((0, 1), repeat=n):
        for v in itertools.product((0, 1), repeat=n):
            if any(u) or any(v):
                diffs.append(sflm(u, v).value - baseline_scores(u, v)["jaccard"])
print("pairs:", len(diffs), "max |kernel - jaccard|:", np.max(np.abs(diffs)))

# %% [markdown]
# Score surface over (shared hits, mismatches).

# %%
grid = np.array([[sflm([1] * a + [1] * b, [1] * a + [0] * b).value if a + b else np.nan
                  for b in range(6)] for a in range(6)])
np.set_printoptions(precision=3, suppress=True)
print("rows: shared hits 0..5, columns: mismatches 0..5")
print(grid)

# %% [markdown]
# Two all-zero vectors carry no evidence: the score is the neutral 0.5 and
# the result is flagged.

# %%
s = sflm([0, 0, 0], [0, 0, 0])
print(s, s.no_evidence)
