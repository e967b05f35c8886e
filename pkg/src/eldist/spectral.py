"""
Laplacian eigenmaps: the ``k`` smallest eigenpairs of a graph Laplacian.

Small graphs go through a dense symmetric eigendecomposition. Larger ones use
ARPACK's Lanczos iteration in shift-invert mode, with a small negative shift
so that ``L - sigma*I`` is positive definite even though ``L`` is singular.

Eigenvectors are only defined up to sign, and inside a repeated eigenvalue up
to rotation. Output is made deterministic by flipping every column so its
first non-negligible entry is positive, then ordering columns that share an
eigenvalue (to within :data:`DEGENERATE_TOL`) by descending lexicographic
order of their entries. For degenerate spectra the chosen basis is therefore
solver dependent.
"""

from dataclasses import dataclass

import numpy as np
from scipy import sparse
from scipy.sparse import linalg as splinalg

from .errors import AllZeroVector, ConvergenceFailure, DimensionMismatch, KTooLarge
from .graph_core import DEFAULT_SPARSE_THRESHOLD, laplacian_matrix

SIGN_TOL = 1e-12
DEGENERATE_TOL = 1e-9
RESIDUAL_TOL = 1e-8
LANCZOS_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class SpectralEmbedding:
    """Ascending eigenvalues and sign-fixed unit eigenvectors of one graph.

    ``vectors[:, r]`` is the eigenvector of ``eigenvalues[r]``; row ``i``
    is the embedding of vertex ``i``.
    """

    n: int
    k: int
    eigenvalues: np.ndarray
    vectors: np.ndarray

    def __post_init__(self):
        if self.eigenvalues.shape != (self.k,) or self.vectors.shape != (self.n, self.k):
            raise DimensionMismatch(
                f"eigenvalues {self.eigenvalues.shape} / vectors {self.vectors.shape} "
                f"do not match n={self.n}, k={self.k}"
            )

    def truncate(self, k):
        """The first ``k`` eigenpairs."""
        if k > self.k:
            raise KTooLarge(k, self.k)
        return SpectralEmbedding(self.n, k, self.eigenvalues[:k], self.vectors[:, :k])

    def drop_first(self):
        return SpectralEmbedding(self.n, self.k - 1, self.eigenvalues[1:], self.vectors[:, 1:])


def sign_fix(v, tol=SIGN_TOL):
    """Return ``v`` or ``-v``, whichever has a positive first entry above ``tol``.

    This is the lexicographically larger of the two once entries with
    ``|x| <= tol`` are read as zero.

    >>> sign_fix(np.array([-1.0, 2.0]))
    array([ 1., -2.])
    """
    v = np.asarray(v, dtype=np.float64)
    big = np.flatnonzero(np.abs(v) > tol)
    if big.size == 0:
        raise AllZeroVector("cannot orient a vector whose entries are all within tolerance of zero")
    return -v if v[big[0]] < 0 else v.copy()


def _orient_columns(vecs):
    out = np.empty_like(vecs)
    for r in range(vecs.shape[1]):
        out[:, r] = sign_fix(vecs[:, r])
    return out


def _order_degenerate_blocks(vals, vecs):
    """Reorder columns inside runs of equal eigenvalues; eigenvalues stay put."""
    vecs = vecs.copy()
    start = 0
    m = len(vals)
    while start < m:
        stop = start + 1
        while stop < m and vals[stop] - vals[stop - 1] <= DEGENERATE_TOL:
            stop += 1
        if stop - start > 1:
            block = vecs[:, start:stop]
            order = sorted(range(stop - start), key=lambda c: tuple(block[:, c]), reverse=True)
            vecs[:, start:stop] = block[:, order]
        start = stop
    return vecs


def _finish(vals, vecs, k):
    vals = np.maximum(vals, 0.0)
    vecs = vecs / np.linalg.norm(vecs, axis=0)
    vecs = _order_degenerate_blocks(vals, _orient_columns(vecs))
    # a degenerate block straddling k was ordered as a whole before truncating
    vals = np.ascontiguousarray(vals[:k])
    vecs = np.ascontiguousarray(vecs[:, :k])
    vals.setflags(write=False)
    vecs.setflags(write=False)
    return vals, vecs


def _dense_eigs(L, k):
    if sparse.issparse(L):
        L = L.toarray()
    vals, vecs = np.linalg.eigh(L)
    # extend past k to cover a degenerate block cut by the boundary
    stop = k
    while stop < len(vals) and vals[stop] - vals[stop - 1] <= DEGENERATE_TOL:
        stop += 1
    return vals[:stop], vecs[:, :stop]


def _lanczos_eigs(L, k):
    n = L.shape[0]
    L = sparse.csc_matrix(L)
    scale = max(1.0, float(np.abs(L.diagonal()).max()))
    sigma = -1e-3 * scale
    rng = np.random.default_rng(0x5EED)
    last_err = None
    for attempt in range(3):
        v0 = rng.standard_normal(n)
        ncv = min(n, max(2 * k + 1, 20) * (attempt + 1))
        try:
            vals, vecs = splinalg.eigsh(
                L, k=k, sigma=sigma, which="LM", v0=v0, ncv=ncv, tol=LANCZOS_TOL, maxiter=10 * n
            )
        except splinalg.ArpackNoConvergence as exc:
            last_err = exc
            continue
        order = np.argsort(vals, kind="stable")
        vals, vecs = vals[order], vecs[:, order]
        if _max_scaled_residual(L, vals, vecs) <= RESIDUAL_TOL:
            return vals, vecs
        last_err = ConvergenceFailure("Lanczos residual above tolerance")
    raise ConvergenceFailure(f"sparse eigensolver failed after restarts: {last_err}")


def _max_scaled_residual(L, vals, vecs):
    R = L @ vecs - vecs * vals
    return float(np.max(np.linalg.norm(R, axis=0) / np.maximum(1.0, np.abs(vals))))


def embed(g, k, mode="combinatorial", sparse_threshold=DEFAULT_SPARSE_THRESHOLD, solver=None):
    """Laplacian embedding of ``g`` into ``k`` dimensions.

    Parameters
    ----------
    g : Graph
    k : int
        Number of eigenpairs, ``1 <= k <= g.n``.
    mode : {"combinatorial", "normalized"}
    sparse_threshold : int
        Graphs with ``n`` above this use the Lanczos path.
    solver : {None, "dense", "lanczos"}
        Force a solver instead of deciding by size.

    Returns
    -------
    SpectralEmbedding

    Raises
    ------
    KTooLarge
        If ``k`` is not in ``1..n``.
    ConvergenceFailure
        If the iterative solver cannot reach the residual tolerance.
    """
    n = g.n
    if not 1 <= k <= n:
        raise KTooLarge(k, n)
    if solver is None:
        solver = "lanczos" if n > sparse_threshold else "dense"
    if solver not in ("dense", "lanczos"):
        raise ValueError(f"unknown solver {solver!r}")
    # ARPACK needs k < n - 1; tiny problems are cheap to do densely anyway
    if solver == "lanczos" and k < n - 1 and n > 8:
        L = laplacian_matrix(g, mode, sparse_format=True)
        vals, vecs = _lanczos_eigs(L, k)
    else:
        L = laplacian_matrix(g, mode, sparse_format=False)
        vals, vecs = _dense_eigs(L, k)
    vals, vecs = _finish(vals, vecs, k)
    return SpectralEmbedding(n, k, vals, vecs)


def embedding_trace(emb, L):
    """``Tr(Y^T L Y)`` with ``Y = emb.vectors``; equals the eigenvalue sum."""
    if L.shape != (emb.n, emb.n):
        raise DimensionMismatch(f"Laplacian shape {L.shape} vs embedding with n={emb.n}")
    Y = emb.vectors
    return float(np.sum(Y * (L @ Y)))


def residuals(emb, L):
    """Column-wise ``||L v_r - lambda_r v_r||``."""
    Y = emb.vectors
    return np.linalg.norm(L @ Y - Y * emb.eigenvalues, axis=0)
