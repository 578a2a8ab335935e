# # Multiplicative characters and the transform on Z_p*
#
# Run as a script or open with jupytext (percent format).

# %%
import numpy as np

from zpramsey import fast_forward, forward, inverse, make_context, special_set
from zpramsey.field import char_value

# %% [markdown]
# A context fixes the smallest primitive root and materializes the index table.

# %%
ctx = make_context(23)
print(ctx, "pow table:", ctx.pow[:8], "...")
print("ind(2) =", ctx.ind[2])

# %%
z = 5
print([round(abs(char_value(ctx, z, x)), 12) for x in range(4)])
print("chi_5(2*3) vs chi_5(2)*chi_5(3):",
      char_value(ctx, z, 6), char_value(ctx, z, 2) * char_value(ctx, z, 3))

# %% [markdown]
# The transform of the quadratic residues is concentrated on z = 0 and
# z = (p-1)/2, the quadratic character.

# %%
qr = special_set(ctx, "qr")
f = qr.mask[1:].astype(float)
amp = forward(ctx, f).amp
print(np.round(np.abs(amp), 6))

# %%
back = inverse(ctx, amp)
print("roundtrip error:", np.abs(back - f).max())
print("Parseval:", (f**2).sum(), (np.abs(amp) ** 2).sum() / ctx.n)

# %% [markdown]
# The fast path relabels by discrete log and runs a chirp-z DFT, so p - 1 can
# have any factorization.

# %%
big = make_context(10007)
g = np.random.default_rng(0).normal(size=big.n)
print("max |fast - naive| at p=10007:",
      np.abs(fast_forward(big, g).amp - forward(big, g).amp).max())
