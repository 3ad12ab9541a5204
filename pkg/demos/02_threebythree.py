# %% [markdown]
# # Three against three
#
# Two barcodes of three long rectangles each.  A witness interleaves them at
# distance 1, but every matching needs radius 3.  The triangular-matrix
# replay shows where the counting argument behind the upper bound comes from.

# %%
from multistab import bottleneck, lemma_matrix_replay, pair_distance, verify_witness
from multistab.instances import threebythree

ins = threebythree()
M, N, W = ins.M, ins.N, ins.witness
print(M)
print(N)

# %%
print("witness valid at delta = 1:", verify_witness(M, N, W).valid)
for i, I in M:
    print(i, [str(pair_distance(I, J)[0]) for _, J in N])

# %%
res = bottleneck(M, N)
print(f"bottleneck = {res.value} (attained: {res.attained}), matching {res.matching.pairs}")

# %% [markdown]
# The replay orders the bars, sums path scalars through the bars of N that
# are close to them, and checks the result is unit upper triangular.

# %%
print(lemma_matrix_replay(M, N, W, ["I1", "I2", "I3"], 3).format())
