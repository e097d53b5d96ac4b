"""Canonical superpaths have integer spectra and energy equal to their order."""

# %%
from graphenergy.graph import canonical_superpath, canonical_superpath_parts
from graphenergy.spectral import integer_spectrum

# %%
for m in range(1, 7):
    g = canonical_superpath(m)
    roots = integer_spectrum(g)
    energy = sum(abs(k) * v for k, v in roots.items())
    print(f"m={m} parts={canonical_superpath_parts(m)}")
    print(f"    order={g.order} energy={energy} max degree={g.max_degree} zero multiplicity={roots.get(0, 0)}")

# %% [markdown]
# The parts are palindromic and always sum to m(m+1).

# %%
print(all(sum(canonical_superpath_parts(m)) == m * (m + 1) for m in range(1, 50)))
