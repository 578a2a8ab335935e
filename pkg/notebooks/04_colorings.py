# # Monochromatic patterns in colorings of Z_p

# %%
from zpramsey import make_context, next_prime, special_set
from zpramsey.coloring import (
    adversarial_search,
    coloring_from_sets,
    count_mono_quadruples,
    density_increment,
    find_mono_quadruple,
    find_mono_schur,
    find_mono_triple,
    random_coloring,
)

# %% [markdown]
# At p >= 1600 k^6 every k-coloring has x, x + y, xy of one color.

# %%
p = next_prime(1600 * 2**6)
ctx = make_context(p)
c = random_coloring(p, 2, seed=1)
print(p, find_mono_triple(ctx, c))

# %% [markdown]
# The quadruple x, y, x + y, xy has no density version: the non-residues
# never contain one.

# %%
small = make_context(31)
qnr = special_set(small, "qnr")
c = coloring_from_sets(31, [qnr, qnr.complement()])
print("inside QNR:", find_mono_quadruple(small, c, color=1))
print("anywhere:", find_mono_quadruple(small, c))

# %%
best, count = adversarial_search(small, k=2, budget=20_000, seed=0)
print("fewest monochromatic quadruples found:", count, "recount:", count_mono_quadruples(best))

# %%
print(find_mono_schur(44, random_coloring(44, 4, seed=3, domain="segment")))

# %%
A = special_set(make_context(101), "qr")
n, lam, shifted, dilated = density_increment(make_context(101), A)
print(n, lam, shifted.card, dilated.card)
