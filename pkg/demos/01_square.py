# %% [markdown]
# # Three squares against one
#
# Three open squares sit around the origin on one side and a single larger
# square on the other.  A weighted witness shows the two modules are
# 1-interleaved, while no matching does better than 2.

# %%
from fractions import Fraction

from multistab import Barcode, Rectangle, WeightMatrix, bottleneck, verify_witness
from multistab.interleave import RankCertificate, check_not_interleaved

M = Barcode.of([Rectangle.parse("(-3,1)x(-1,3)"), Rectangle.parse("(-1,3)x(-3,1)"),
                Rectangle.parse("(-1,1)x(-1,1)")])
N = Barcode.of([Rectangle.parse("(-2,2)x(-2,2)")], prefix="J")
print(M)
print(N)

# %% [markdown]
# The witness sends each square to the big one with weight 1.  On the way
# back the small square gets weight -1 so the sums through J cancel.

# %%
W = WeightMatrix(1, {("I1", "J1"): 1, ("I2", "J1"): 1, ("I3", "J1"): 1},
                 {("J1", "I1"): 1, ("J1", "I2"): 1, ("J1", "I3"): -1})
print("witness valid:", verify_witness(M, N, W).valid)

# %% [markdown]
# Flip that sign and the equation at (J, J) breaks.

# %%
flipped = WeightMatrix(1, W.f, {**W.g, ("J1", "I3"): 1})
print("violations:", verify_witness(M, N, flipped).pairs())

# %% [markdown]
# Matchings are cruder: the best one leaves every bar unmatched.

# %%
value, attained, matching = bottleneck(M, N)
print(f"bottleneck = {value}, attained = {attained}, pairs = {matching.pairs}")

# %% [markdown]
# A rank comparison between two points rules out interleavings below 9/10.

# %%
cert = RankCertificate(Fraction(9, 10), (Fraction(-19, 10),) * 2, (Fraction(19, 10),) * 2)
print("not 9/10-interleaved:", check_not_interleaved(M, N, cert))
