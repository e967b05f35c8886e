# %% [markdown]
# # Laplacian embeddings
#
# The embedding of a graph is its k smallest Laplacian eigenpairs. Row i of
# the eigenvector matrix is the position of vertex i in R^k.

# %%
import numpy as np

from eldist import build_graph, embed, embedding_trace, laplacian
from eldist.generators import cycle, ring_of_cliques

path3 = build_graph(3, [(0, 1), (1, 2)])
print(laplacian(path3))

emb = embed(path3, 3)
print("eigenvalues:", emb.eigenvalues)
print("vectors:\n", np.round(emb.vectors, 4))

# %% [markdown]
# A cycle's spectrum is 2 - 2cos(2*pi*j/n). Eigenvalues come in pairs, so the
# basis inside each pair is a convention: columns are sign-fixed, then
# ordered lexicographically within the pair.

# %%
c8 = embed(cycle(8), 5)
print(np.round(c8.eigenvalues, 6))
print(np.round(2 - 2 * np.cos(2 * np.pi * np.arange(8) / 8), 6))

# %% [markdown]
# The eigenvectors minimise Tr(Y^T L Y) over orthonormal Y. No random
# orthonormal frame beats them.

# %%
g = ring_of_cliques(4, 5)
L = laplacian(g)
best = embedding_trace(embed(g, 3), L)
rng = np.random.default_rng(0)
trials = [np.trace(q.T @ L @ q) for q in (np.linalg.qr(rng.standard_normal((g.n, 3)))[0] for _ in range(1000))]
print(f"eigenvector trace {best:.6f}, best random frame {min(trials):.6f}")

# %% [markdown]
# The Fiedler vector (column 1) splits the ring of cliques along its
# community structure.

# %%
fiedler = embed(g, 2).vectors[:, 1]
for q in range(4):
    print(f"clique {q}:", np.round(fiedler[q * 5:(q + 1) * 5], 3))
