# %% [markdown]
# # Weighted random graphs and scaling
#
# Erdos-Renyi graphs with exponential edge weights, two samples per
# configuration. Distances are small within a configuration and large
# across configurations, even when vertex counts differ.

# %%
import numpy as np

from eldist import EldParams, distance_matrix
from eldist.bench import time_pairwise
from eldist.generators import erdos_renyi

configs = [(20, 0.2), (20, 0.8), (100, 0.2), (100, 0.8)]
graphs, labels = [], []
for c, (n, prob) in enumerate(configs):
    for r in range(2):
        graphs.append(erdos_renyi(n, prob, seed=10 * c + r, weight_dist="exponential", scale=20.0))
        labels.append(f"n{n}/p{prob}/{r}")
dm = distance_matrix(graphs, EldParams(k=5), labels=labels)
print(np.round(dm.entries, 1))

# %% [markdown]
# Time to embed 10 graphs and fill their 10x10 matrix. Setting the sparse
# threshold to 0 forces the Lanczos solver, which only computes k
# eigenpairs.

# %%
for threshold, name in ((10**9, "dense"), (0, "lanczos")):
    rows = time_pairwise("er", [250, 500, 1000], EldParams(k=5, sparse_threshold=threshold))
    print(name, ", ".join(f"n={n}: {t:.2f}s" for n, t in rows))
