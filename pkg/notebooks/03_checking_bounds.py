# # Checking the density bounds on concrete instances

# %%
import numpy as np

from zpramsey import ZpSubset, make_context, special_set, subgroup
from zpramsey import bounds
from zpramsey.report import to_json

rng = np.random.default_rng(7)

# %%
ctx = make_context(499)
A1 = ZpSubset.from_elements(499, rng.choice(499, 120, replace=False))
A2 = ZpSubset.from_elements(499, rng.choice(499, 150, replace=False))
print(to_json(bounds.verify_two_set(ctx, A1, A2, omega=-1)))

# %%
p = 2003
big = make_context(p)
dense = [ZpSubset.from_elements(p, rng.choice(p, 1950, replace=False)) for _ in range(3)]
r = bounds.verify_main(big, *dense)
print(r.condition_met, r.passed, r.measured, round(r.bound), r.witness)

# %% [markdown]
# The expansion of x o y = x^2 + xy.

# %%
A = ZpSubset.unit_group(p)
r = bounds.verify_circ_corollary(big, A, A)
print("|A o A| =", r.measured, "lower bound", round(r.bound, 1))

# %% [markdown]
# Character sums with shifted arguments stay well inside the Weil-type bound.

# %%
value, rep = bounds.johnsen_sum(ctx, [3, 0, 498 - 3], [0, 1, 5])
print(abs(value), "<=", rep.bound)

# %% [markdown]
# Subgroups as bases of order two: the size hypothesis needs large p, but the
# sumset itself is cheap to test coset by coset.

# %%
ctx = make_context(10007)
for d in (5003, 10006):
    r = bounds.basis_order_two(ctx, subgroup(ctx, d))
    print(d, "hypothesis:", r.condition_met, "R+R covers Z_p*:", r.passed)
