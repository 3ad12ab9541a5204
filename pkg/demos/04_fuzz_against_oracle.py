# %% [markdown]
# # Closed forms against brute force
#
# Every closed-form test has a grid oracle behind it.  This script draws a
# few hundred random instances and counts disagreements, which should be 0.

# %%
from multistab.properties import run_suite

for kind, dim in [("rectangle", 2), ("free", 3), ("triangle", 2)]:
    failures = run_suite(kind, dim, count=40, seed=2024)
    print(kind, dim, {name: len(errs) for name, errs in failures.items()})

# %% [markdown]
# A picture helps when a case does fail.  `render_svg` draws any 2-D barcode.

# %%
from multistab.instances import threebythree
from multistab.render import render_svg

svg = render_svg(threebythree().M)
print(svg[:200], "...")
