# %% [markdown]
# # When the infimum is not reached
#
# A closed square and the open square with the same corners are
# eps-interleaved for every eps > 0 but not at 0.  Everything here is exact,
# so the gap is reported rather than rounded away.

# %%
from fractions import Fraction

from multistab import Barcode, Rectangle, bottleneck, pair_distance, pair_interleaved

closed, open_ = Rectangle.parse("[0,1]x[0,1]"), Rectangle.parse("(0,1)x(0,1)")
print(pair_distance(closed, open_))
for eps in (Fraction(0), Fraction(1, 1000)):
    print(eps, pair_interleaved(closed, open_, eps))

# %%
print(tuple(bottleneck(Barcode.of([closed]), Barcode.of([open_], prefix="J")))[:2])
