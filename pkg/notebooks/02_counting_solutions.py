# # Counting x + y in A1, xy in A2, x in A3

# %%
from zpramsey import (
    ZpSubset,
    count_equation_triples,
    f_values,
    make_context,
    phi_matrix,
    quadruple_count,
    second_moment,
    sigma,
    sigma_tilde,
    special_set,
)
from zpramsey.counting import phi_deviation

# %%
p = 61
ctx = make_context(p)
A1 = ZpSubset.from_elements(p, range(1, 31))
A2 = special_set(ctx, "qr")
A3 = special_set(ctx, "qnr")

f = f_values(ctx, A1, A2, omega=1)
print("f on the first units:", f[:12])
print("sigma =", sigma(ctx, A1, A2), " |A1||A2| =", A1.card * A2.card)

# %%
cert = sigma_tilde(ctx, A1, A2, A3)
print("sigma~ =", cert.count, "first witness (x, y) =", cert.witness)
x, y = cert.witness
print("check:", x in A3, (x + y) % p in A1, x * y % p in A2)

# %% [markdown]
# The same witness solves a1^2 + a1*a2 + a3 = 0 with a1 = -x, a2 = x + y, a3 = xy.

# %%
print(count_equation_triples(ctx, A3.negate(), A1, A2))

# %% [markdown]
# Second moment machinery: phi sums to (p-1)|A1|^2 and its square sum counts
# quadruples.

# %%
phi = phi_matrix(ctx, A1, omega=1)
a = A1.card
print("sum phi =", phi.total(), "=", (p - 1) * a * a)
q = quadruple_count(ctx, A1)
print("quadruples =", q, "<=", a**4 + 8 * p * a * a)
print("centered second moment =", float(phi_deviation(ctx, A1, 1, phi)), "<=", 10 * p * a * a)
print(second_moment(ctx, A1, A2 | ZpSubset.from_elements(p, [0]), omega=1))
