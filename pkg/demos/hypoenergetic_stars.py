"""Stars times complete graphs, and where the hypoenergetic region ends."""

# %%
import math

from graphenergy import complete, ops, star
from graphenergy.classify import classify_energy
from graphenergy.harness import star_bound

# %% [markdown]
# The energy of K_{1,m} x K_p is 4 sqrt(m) (p - 1) against an order of
# p (m + 1). Each row marks hypoenergetic (h), orderenergetic (=) and the rest (.).

# %%
print("m   bound  p=2..10")
for m in range(2, 16):
    marks = ""
    for p in range(2, 11):
        r = classify_energy(ops.kronecker(star(m), complete(p)))
        marks += "h" if r.hypoenergetic else ("=" if r.orderenergetic else ".")
    print(f"{m:2}  {str(star_bound(m)):>5}  {marks}")

# %% [markdown]
# At m = 9, p = 6 the bound admits p but the energy lands exactly on the
# order, so the graph is orderenergetic rather than hypoenergetic.

# %%
r = classify_energy(ops.kronecker(star(9), complete(6)))
print("energy", r.value, "order", r.order, "exact:", r.comparison == "exact")
print("4 sqrt(9) * 5 =", 4 * math.sqrt(9) * 5)
