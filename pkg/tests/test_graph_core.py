import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eldist import build_graph, laplacian, normalized_laplacian
from eldist.errors import DuplicateEdge, NegativeWeight, SelfLoop, VertexOutOfRange
from eldist.generators import erdos_renyi
from oracles import dense_laplacian


def test_minimal_graph():
    g = build_graph(2, [(0, 1, 1.0)])
    assert g.n == 2 and g.num_edges == 1


def test_triangle(k3):
    assert k3.n == 3
    assert k3.edges() == [(0, 1, 1.0), (0, 2, 1.0), (1, 2, 1.0)]


@pytest.mark.parametrize(
    "n, edges, exc",
    [
        (2, [(0, 0, 1.0)], SelfLoop),
        (3, [(0, 1, 1.0), (1, 0, 2.0)], DuplicateEdge),
        (2, [(0, 1, -0.5)], NegativeWeight),
        (2, [(0, 1, float("nan"))], NegativeWeight),
        (2, [(0, 2, 1.0)], VertexOutOfRange),
        (2, [(-1, 1, 1.0)], VertexOutOfRange),
    ],
)
def test_build_graph_rejects(n, edges, exc):
    with pytest.raises(exc):
        build_graph(n, edges)


def test_zero_weight_edges_are_kept():
    g = build_graph(3, [(0, 1, 0.0), (1, 2, 1.0)])
    assert g.num_edges == 2
    np.testing.assert_array_equal(laplacian(g)[0], [0.0, 0.0, 0.0])


def test_edge_order_does_not_matter():
    a = build_graph(4, [(0, 1, 1.0), (2, 3, 2.0), (1, 2, 0.5)])
    b = build_graph(4, [(3, 2, 2.0), (2, 1, 0.5), (1, 0, 1.0)])
    assert a == b
    assert a.content_hash() == b.content_hash()


def test_laplacian_single_edge():
    np.testing.assert_array_equal(laplacian(build_graph(2, [(0, 1, 1.0)])), [[1, -1], [-1, 1]])
    np.testing.assert_array_equal(laplacian(build_graph(2, [(0, 1, 3.0)])), [[3, -3], [-3, 3]])


def test_laplacian_k3(k3):
    L = laplacian(k3)
    np.testing.assert_array_equal(np.diag(L), [2, 2, 2])
    np.testing.assert_array_equal(L[~np.eye(3, dtype=bool)], -np.ones(6))


def test_laplacian_matches_loop_construction(rng):
    g = erdos_renyi(25, 0.3, seed=3, weight_dist="exponential", scale=2.0)
    np.testing.assert_allclose(laplacian(g), dense_laplacian(g.n, g.edges()), rtol=0, atol=1e-12)


def test_sparse_and_dense_laplacians_agree():
    g = erdos_renyi(40, 0.2, seed=1, weight_dist="exponential", scale=3.0)
    np.testing.assert_allclose(laplacian(g, sparse_format=True).toarray(), laplacian(g), atol=1e-14)
    np.testing.assert_allclose(
        normalized_laplacian(g, sparse_format=True).toarray(), normalized_laplacian(g), atol=1e-14
    )


def test_default_storage_follows_threshold():
    from scipy import sparse

    g = build_graph(5, [(0, 1)])
    assert not sparse.issparse(laplacian(g))
    assert sparse.issparse(laplacian(g, sparse_threshold=4))


@pytest.mark.parametrize("w", [1.0, 4.0])
def test_normalized_single_edge(w):
    np.testing.assert_allclose(normalized_laplacian(build_graph(2, [(0, 1, w)])), [[1, -1], [-1, 1]])


def test_normalized_isolated_vertex_row_is_zero():
    N = normalized_laplacian(build_graph(3, [(0, 1, 1.0)]))
    np.testing.assert_array_equal(N[2], 0.0)
    np.testing.assert_array_equal(N[:, 2], 0.0)


def test_permute_relabels_vertices():
    g = build_graph(3, [(0, 1, 2.0)])
    h = g.permute([2, 0, 1])
    assert h.edges() == [(0, 2, 2.0)]
    with pytest.raises(ValueError):
        g.permute([0, 0, 1])


@st.composite
def graphs(draw, weighted=True):
    n = draw(st.integers(1, 12))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    if weighted:
        ws = draw(st.lists(st.floats(0, 100), min_size=len(chosen), max_size=len(chosen)))
    else:
        ws = [1.0] * len(chosen)
    return build_graph(n, [(i, j, w) for (i, j), w in zip(chosen, ws)])


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_laplacian_symmetric_with_zero_row_sums(g):
    L = laplacian(g)
    assert np.array_equal(L, L.T)
    scale = np.maximum(np.abs(L).max(axis=1), 1e-300)
    assert np.all(np.abs(L.sum(axis=1)) <= 1e-12 * scale)


@settings(max_examples=60, deadline=None)
@given(graphs(), st.integers(0, 2**32 - 1))
def test_laplacian_is_psd(g, seed):
    L = laplacian(g)
    x = np.random.default_rng(seed).standard_normal((100, g.n))
    x /= np.linalg.norm(x, axis=1, keepdims=True)
    assert np.all(np.einsum("ij,jk,ik->i", x, L, x) >= -1e-10)


@settings(max_examples=100, deadline=None)
@given(graphs(weighted=False))
def test_normalized_unweighted_diagonal_is_one(g):
    N = normalized_laplacian(g)
    deg = g.degrees()
    assert np.all(np.diag(N)[deg > 0] == 1.0)
    assert np.all(np.diag(N)[deg == 0] == 0.0)
