"""Every labeled graph on six vertices, classified by energy."""

# %%
import collections

import numpy as np

from graphenergy import to_graph6
from graphenergy.harness import enumerate_small, labeled_energies

# %%
counts = collections.Counter()
for masks, energies in labeled_energies(6):
    counts["below order"] += int(np.sum(energies < 6 - 1e-8))
    counts["at order"] += int(np.sum(np.abs(energies - 6) <= 1e-8))
    counts["above order"] += int(np.sum(energies > 6 + 1e-8))
print(dict(counts), "total", sum(counts.values()))

# %% [markdown]
# Up to isomorphism only a handful reach energy exactly six; all are integral.

# %%
for g in enumerate_small(6, "orderenergetic"):
    tag = "connected" if g.is_connected() else "disconnected"
    print(to_graph6(g), "edges", g.size, "max degree", g.max_degree, tag)
