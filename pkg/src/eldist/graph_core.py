"""
Simple undirected weighted graphs and their Laplacian matrices.

A :class:`Graph` stores each undirected edge once as ``(i, j, w)`` with
``i < j``. Edge arrays are kept sorted so that two graphs with the same
edge set compare and hash identically regardless of input order.
"""

import hashlib
from dataclasses import dataclass

import numpy as np
from scipy import sparse

from .errors import DuplicateEdge, NegativeWeight, SelfLoop, VertexOutOfRange

#: Graphs with more vertices than this get sparse Laplacians by default.
DEFAULT_SPARSE_THRESHOLD = 2048

MODES = ("combinatorial", "normalized")


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected weighted graph on vertices ``0..n-1``.

    Use :func:`build_graph` rather than the constructor; it validates input.

    Attributes
    ----------
    n : int
        Number of vertices.
    rows, cols : (m,) int64 arrays
        Edge endpoints with ``rows < cols``, sorted lexicographically.
    weights : (m,) float64 array
        Non-negative edge weights.
    """

    n: int
    rows: np.ndarray
    cols: np.ndarray
    weights: np.ndarray

    @property
    def num_edges(self):
        return len(self.rows)

    def edges(self):
        """List of ``(i, j, w)`` triples with ``i < j``."""
        return [(int(i), int(j), float(w)) for i, j, w in zip(self.rows, self.cols, self.weights)]

    def degrees(self):
        """Weighted degree of every vertex."""
        d = np.zeros(self.n)
        np.add.at(d, self.rows, self.weights)
        np.add.at(d, self.cols, self.weights)
        return d

    def adjacency(self, sparse_format=False):
        """Weighted adjacency matrix, dense by default."""
        ij = (np.concatenate([self.rows, self.cols]), np.concatenate([self.cols, self.rows]))
        w = np.concatenate([self.weights, self.weights])
        if sparse_format:
            return sparse.csr_matrix((w, ij), shape=(self.n, self.n))
        A = np.zeros((self.n, self.n))
        A[ij] = w
        return A

    def permute(self, sigma):
        """Relabel vertex ``i`` as ``sigma[i]``."""
        sigma = np.asarray(sigma, dtype=np.int64)
        if sorted(sigma.tolist()) != list(range(self.n)):
            raise ValueError("sigma is not a permutation of 0..n-1")
        a, b = sigma[self.rows], sigma[self.cols]
        return _from_arrays(self.n, np.minimum(a, b), np.maximum(a, b), self.weights.copy())

    def is_connected(self):
        if self.n == 1:
            return True
        from scipy.sparse.csgraph import connected_components

        ncomp, _ = connected_components(self.adjacency(sparse_format=True), directed=False)
        return ncomp == 1

    def content_hash(self):
        """SHA-256 hex digest of ``n`` and the canonical edge arrays."""
        h = hashlib.sha256()
        h.update(np.int64(self.n).tobytes())
        h.update(self.rows.astype("<i8").tobytes())
        h.update(self.cols.astype("<i8").tobytes())
        h.update(self.weights.astype("<f8").tobytes())
        return h.hexdigest()

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.rows, other.rows)
            and np.array_equal(self.cols, other.cols)
            and np.array_equal(self.weights, other.weights)
        )

    def __hash__(self):
        return hash(self.content_hash())

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.num_edges})"


def _from_arrays(n, rows, cols, weights):
    order = np.lexsort((cols, rows))
    arrays = [np.ascontiguousarray(a[order]) for a in (rows, cols, weights)]
    for a in arrays:
        a.setflags(write=False)
    return Graph(int(n), *arrays)


def build_graph(n, edge_list, line_numbers=None):
    """Validate an edge list and return a :class:`Graph`.

    Parameters
    ----------
    n : int
        Vertex count; vertex ids must lie in ``0..n-1``.
    edge_list : iterable of (i, j) or (i, j, w)
        Undirected edges. A missing weight means 1.0.
    line_numbers : sequence of int, optional
        Source line of each edge, attached to any error raised.

    Raises
    ------
    SelfLoop, DuplicateEdge, NegativeWeight, VertexOutOfRange
    """
    n = int(n)
    if n < 1:
        raise ValueError("a graph needs at least one vertex")
    rows, cols, weights = [], [], []
    seen = set()
    for idx, e in enumerate(edge_list):
        line = None if line_numbers is None else line_numbers[idx]
        if len(e) == 2:
            i, j = e
            w = 1.0
        else:
            i, j, w = e
        i, j, w = int(i), int(j), float(w)
        for v in (i, j):
            if not 0 <= v < n:
                raise VertexOutOfRange(v, n, line)
        if i == j:
            raise SelfLoop(i, line)
        # NaN fails this comparison too
        if not w >= 0.0:
            raise NegativeWeight(i, j, w, line)
        key = (i, j) if i < j else (j, i)
        if key in seen:
            raise DuplicateEdge(*key, line=line)
        seen.add(key)
        rows.append(key[0])
        cols.append(key[1])
        weights.append(w)
    return _from_arrays(
        n,
        np.array(rows, dtype=np.int64),
        np.array(cols, dtype=np.int64),
        np.array(weights, dtype=np.float64),
    )


def _use_sparse(g, sparse_format, threshold):
    if sparse_format is None:
        return g.n > threshold
    return bool(sparse_format)


def laplacian(g, sparse_format=None, sparse_threshold=DEFAULT_SPARSE_THRESHOLD):
    """Combinatorial Laplacian ``D - A``.

    Returns a dense ``(n, n)`` array, or a CSR matrix when ``sparse_format``
    is true (``None`` picks sparse for ``n > sparse_threshold``).
    """
    d = g.degrees()
    if _use_sparse(g, sparse_format, sparse_threshold):
        return (sparse.diags(d) - g.adjacency(sparse_format=True)).tocsr()
    L = -g.adjacency()
    L[np.diag_indices(g.n)] = d
    return L


def normalized_laplacian(g, sparse_format=None, sparse_threshold=DEFAULT_SPARSE_THRESHOLD):
    """Normalized Laplacian ``I - D^{-1/2} A D^{-1/2}``.

    Isolated vertices (degree 0) get an all-zero row and column, diagonal
    included.
    """
    d = g.degrees()
    inv_sqrt = np.zeros(g.n)
    nz = d > 0
    inv_sqrt[nz] = 1.0 / np.sqrt(d[nz])
    diag = nz.astype(np.float64)
    if _use_sparse(g, sparse_format, sparse_threshold):
        S = sparse.diags(inv_sqrt)
        return (sparse.diags(diag) - S @ g.adjacency(sparse_format=True) @ S).tocsr()
    N = -(inv_sqrt[:, None] * g.adjacency() * inv_sqrt[None, :])
    N[np.diag_indices(g.n)] = diag
    return N


def laplacian_matrix(g, mode="combinatorial", sparse_format=None, sparse_threshold=DEFAULT_SPARSE_THRESHOLD):
    """Dispatch on ``mode``, one of :data:`MODES`."""
    if mode == "combinatorial":
        return laplacian(g, sparse_format, sparse_threshold)
    if mode == "normalized":
        return normalized_laplacian(g, sparse_format, sparse_threshold)
    raise ValueError(f"unknown Laplacian mode {mode!r}; expected one of {MODES}")
