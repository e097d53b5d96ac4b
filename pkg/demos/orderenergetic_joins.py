"""Joining a regular graph with an independent set.

Run with ``python demos/orderenergetic_joins.py``.
"""

# %%
from graphenergy import complete, cycle, empty, ops
from graphenergy.classify import classify_energy
from graphenergy.spectral import char_poly, integer_spectrum

# %% [markdown]
# C4 joined with twelve isolated vertices: sixteen vertices, energy sixteen.

# %%
g = ops.join(cycle(4), empty(12))
print(g.label, "->", integer_spectrum(g))
print("char poly:", char_poly(g))
print("energy:", classify_energy(g).value, "order:", g.order)

# %% [markdown]
# Sweep n for two regular seeds. The energy meets the order at a single n,
# namely 4p - 2r for a p-vertex r-regular seed.

# %%
for seed in (cycle(4), complete(2)):
    p, r = seed.order, seed.regular_degree()
    row = []
    for n in range(1, 21):
        rep = classify_energy(ops.join(seed, empty(n)))
        row.append("=" if rep.orderenergetic else ("<" if rep.hypoenergetic else ">"))
    print(f"{seed.label:5} p={p} r={r} target n={4 * p - 2 * r:2}  {''.join(row)}")

# %% [markdown]
# The joined polynomial can also be assembled from the operands alone.

# %%
assert ops.join_charpoly_regular(cycle(4), empty(12)) == char_poly(g)
print("operand formula agrees with the direct computation")
