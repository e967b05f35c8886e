# %% [markdown]
# # Files, embedding cache and the command line
#
# Graphs travel as edge lists ("i j [w]" per line). Embeddings can be
# persisted so a graph is decomposed once across many comparisons.

# %%
import os
import subprocess
import sys
import tempfile

from eldist import EldParams, EmbeddingStore, distance_matrix
from eldist.fileio import read_distance_matrix, read_edge_list, write_edge_list
from eldist.generators import barabasi_albert, ring_of_cliques

work = tempfile.mkdtemp()
write_edge_list(barabasi_albert(200, 3, seed=1), os.path.join(work, "ba.txt"))
write_edge_list(ring_of_cliques(8, 6), os.path.join(work, "roc.txt"))
print(open(os.path.join(work, "roc.txt")).read()[:80], "...")

# %%
store = EmbeddingStore(os.path.join(work, "cache"))
graphs = [read_edge_list(os.path.join(work, f)) for f in ("ba.txt", "roc.txt")]
distance_matrix(graphs, EldParams(k=5), cache=store)
print("embeddings computed:", store.computed, "files:", sorted(os.listdir(store.directory)))

fresh = EmbeddingStore(store.directory)
distance_matrix(graphs, EldParams(k=5, p=2.0), cache=fresh)
print("second store recomputed:", fresh.computed)

# %% [markdown]
# The same through the CLI.

# %%
out = os.path.join(work, "m.csv")
cmd = [sys.executable, "-m", "eldist", "matrix", os.path.join(work, "ba.txt"), os.path.join(work, "roc.txt"),
       "roc:4,6", "-k", "5", "-o", out, "--heatmap", os.path.join(work, "m.dat")]
subprocess.run(cmd, check=True)
print(open(out).read())
print(read_distance_matrix(out).entries)
