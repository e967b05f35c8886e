"""
The embedded Laplacian distance between graphs of possibly different sizes.

Each graph is embedded with its ``k`` smallest Laplacian eigenpairs. Along
axis ``r`` the vertices give a 1D point cloud ``lambda_r * v_r(i)``; the
distance is the mean over axes of the exact 1D Wasserstein distance between
the two clouds.
"""

import os
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import CacheFormatError, InvalidOrder, KTooLarge
from .graph_core import DEFAULT_SPARSE_THRESHOLD, MODES
from .spectral import embed
from .transport import measure_from_axis, orient, wasserstein_1d

ORIENTATIONS = ("multiset", "lexicographic")


@dataclass(frozen=True)
class EldParams:
    """Hyperparameters of the distance.

    Attributes
    ----------
    k : int
        Embedding dimension.
    p : float
        Wasserstein order.
    mode : {"combinatorial", "normalized"}
        Which Laplacian to embed with.
    skip_first : bool
        Drop the first eigenpair and use the next ``k`` instead; needs
        ``k + 1`` vertices.
    orientation : {"multiset", "lexicographic"}
        How the sign of each axis is chosen. ``"multiset"`` orients the
        axis measure by its sorted atoms and is invariant to vertex
        relabeling; ``"lexicographic"`` keeps the per-vertex sign fix of the
        eigenvectors, which depends on vertex order.
    sparse_threshold : int
        Vertex count above which the Lanczos solver is used.
    """

    k: int = 5
    p: float = 1.0
    mode: str = "combinatorial"
    skip_first: bool = False
    orientation: str = "multiset"
    sparse_threshold: int = DEFAULT_SPARSE_THRESHOLD

    def __post_init__(self):
        if int(self.k) != self.k or self.k < 1:
            raise ValueError(f"k must be a positive integer, got {self.k!r}")
        if not self.p >= 1:
            raise InvalidOrder(f"p must be >= 1, got {self.p!r}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.orientation not in ORIENTATIONS:
            raise ValueError(f"orientation must be one of {ORIENTATIONS}, got {self.orientation!r}")

    @property
    def num_eigenpairs(self):
        return self.k + 1 if self.skip_first else self.k


class EmbeddingStore:
    """Compute-once cache of embeddings keyed by (graph hash, eigenpairs, mode).

    Safe for concurrent use: each key is computed by exactly one thread. With
    ``directory`` set, embeddings are also persisted as ``.elde`` files and
    reused across processes.
    """

    def __init__(self, directory=None):
        self.directory = directory
        self._entries = {}
        self._locks = {}
        self._guard = threading.Lock()
        self.computed = 0

    def _path(self, key):
        digest, k, mode = key
        return os.path.join(self.directory, f"{digest[:40]}_{mode}_k{k}.elde")

    def get(self, g, k, mode="combinatorial", sparse_threshold=DEFAULT_SPARSE_THRESHOLD):
        key = (g.content_hash(), k, mode)
        with self._guard:
            if key in self._entries:
                return self._entries[key]
            lock = self._locks.setdefault(key, threading.Lock())
        with lock:
            if key in self._entries:
                return self._entries[key]
            emb = self._load(key, g.n)
            if emb is None:
                emb = embed(g, k, mode, sparse_threshold=sparse_threshold)
                with self._guard:
                    self.computed += 1
                self._save(key, emb)
            with self._guard:
                self._entries[key] = emb
            return emb

    def _load(self, key, n):
        if self.directory is None:
            return None
        from .fileio import read_embedding

        path = self._path(key)
        if not os.path.exists(path):
            return None
        try:
            emb = read_embedding(path)
        except CacheFormatError:
            return None
        if emb.n != n or emb.k != key[1]:
            return None
        return emb

    def _save(self, key, emb):
        if self.directory is None:
            return
        from .fileio import write_embedding

        os.makedirs(self.directory, exist_ok=True)
        write_embedding(emb, self._path(key))

    def __len__(self):
        return len(self._entries)


def _embedding_for(g, params, store):
    m = params.num_eigenpairs
    if m > g.n:
        raise KTooLarge(m, g.n)
    if store is None:
        emb = embed(g, m, params.mode, sparse_threshold=params.sparse_threshold)
    else:
        emb = store.get(g, m, params.mode, params.sparse_threshold)
    return emb.drop_first() if params.skip_first else emb


def _axis_measures(emb, params):
    out = []
    for r in range(emb.k):
        mu = measure_from_axis(emb, r)
        if params.orientation == "multiset":
            mu = orient(mu)
        out.append(mu)
    return out


def axis_distances(emb1, emb2, params):
    """Per-axis Wasserstein terms between two embeddings of dimension ``params.k``."""
    a = _axis_measures(emb1, params)
    b = _axis_measures(emb2, params)
    return np.array([wasserstein_1d(x, y, params.p) for x, y in zip(a, b)])


def eld_from_embeddings(emb1, emb2, params):
    return float(np.sum(axis_distances(emb1, emb2, params)) / params.k)


def eld_distance(g1, g2, params=None, store=None):
    """Embedded Laplacian distance between two graphs.

    Parameters
    ----------
    g1, g2 : Graph
    params : EldParams, optional
        Defaults to ``EldParams()`` (k=5, p=1, combinatorial).
    store : EmbeddingStore, optional
        Reuse embeddings across calls.

    Raises
    ------
    KTooLarge
        If ``k`` (plus one with ``skip_first``) exceeds either vertex count.
    """
    params = params or EldParams()
    e1 = _embedding_for(g1, params, store)
    e2 = _embedding_for(g2, params, store)
    return eld_from_embeddings(e1, e2, params)


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """Symmetric matrix of pairwise distances with a zero diagonal."""

    labels: list
    entries: np.ndarray = field(repr=False)

    def __post_init__(self):
        m = len(self.labels)
        if self.entries.shape != (m, m):
            raise ValueError(f"entries shape {self.entries.shape} does not match {m} labels")
        self.entries.setflags(write=False)

    def __len__(self):
        return len(self.labels)


def distance_matrix(graphs, params=None, cache=None, labels=None, threads=1):
    """All pairwise distances among ``graphs``.

    Each graph is embedded once. Every pair is evaluated independently, so the
    result does not depend on ``threads`` or on scheduling.

    Parameters
    ----------
    graphs : sequence of Graph
    params : EldParams, optional
    cache : EmbeddingStore, optional
        A fresh in-memory store is used when omitted.
    labels : sequence of str, optional
        Defaults to ``G0, G1, ...``.
    threads : int
        Worker threads for embeddings and pairs.

    Raises
    ------
    KTooLarge
        Naming the first graph that is too small for ``k``.
    """
    params = params or EldParams()
    graphs = list(graphs)
    labels = list(labels) if labels is not None else [f"G{i}" for i in range(len(graphs))]
    if len(labels) != len(graphs):
        raise ValueError("labels and graphs differ in length")
    m = params.num_eigenpairs
    for g, label in zip(graphs, labels):
        if m > g.n:
            raise KTooLarge(m, g.n, label)
    store = cache if cache is not None else EmbeddingStore()
    pairs = [(i, j) for i in range(len(graphs)) for j in range(i + 1, len(graphs))]

    def one_embedding(g):
        return _embedding_for(g, params, store)

    def one_pair(ij):
        i, j = ij
        return eld_from_embeddings(embs[i], embs[j], params)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            embs = list(pool.map(one_embedding, graphs))
            values = list(pool.map(one_pair, pairs))
    else:
        embs = [one_embedding(g) for g in graphs]
        values = [one_pair(ij) for ij in pairs]

    D = np.zeros((len(graphs), len(graphs)))
    for (i, j), d in zip(pairs, values):
        D[i, j] = D[j, i] = d
    return DistanceMatrix(labels, D)
