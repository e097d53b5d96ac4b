"""Non-cospectral pairs with equal energy, built from shadows and duplicates."""

# %%
from graphenergy import complete, cycle, ops, star, superpath
from graphenergy.classify import certify_pair

# %%
for seed in (complete(2), cycle(4)):
    for m in (1, 2, 3):
        a, b = ops.shadow(ops.duplicate(seed), m), ops.shadow(seed, 2 * m)
        c = certify_pair(a, b)
        print(f"{a.label:22} vs {b.label:16} {c.verdict:20} energies={c.energies} cospectral={c.cospectral}")

# %% [markdown]
# Splitting twice versus three shadows: the verdict follows the seed's class.

# %%
for seed in (superpath([2, 1, 1, 2]), star(2)):
    c = certify_pair(ops.splitting(seed, 2), ops.shadow(seed, 3))
    print(f"{seed.label:12} {c.verdict}  {c.energies}")
