# %% [markdown]
# # Sorting rationals: the two-run case study
#
# Two runs over a six-block bubble sort. The first input is already sorted
# and passes; the second fails. We score each block's hit column against the
# decision vector.

# %%
from faultblocks import SpectrumMatrix, feature_vector, localize, sflm

hits = [
    [1, 1, 1, 1, 0, 1],  # sorted input, swap block never entered
    [1, 1, 1, 1, 1, 1],  # unsorted input
]
decisions = [0, 1]
m = SpectrumMatrix(hits, decisions)

# %% [markdown]
# A block column and the decision vector are compared position by position
# with the ternary hit function, then folded into a single score.

# %%
for k in range(m.n_blocks):
    col = m.column(k)
    print(k, list(col), [int(h) for h in feature_vector(col, m.decisions)], sflm(col, m.decisions).value)

# %%
report = localize(m, with_baselines=True)
print(report.to_text())
