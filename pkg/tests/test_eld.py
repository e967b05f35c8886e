import itertools
import math

import numpy as np
import pytest

from eldist import EldParams, EmbeddingStore, build_graph, distance_matrix, eld_distance, embed
from eldist.eld import axis_distances
from eldist.errors import InvalidOrder, KTooLarge
from eldist.generators import barabasi_albert, cycle, erdos_renyi, ring_of_cliques, wheel
from eldist.transport import measure_from_axis
from oracles import northwest_corner_wasserstein


def mixed_graphs(rng, count):
    out = []
    for i in range(count):
        n = int(rng.integers(5, 61))
        kind = i % 5
        if kind == 0:
            out.append(cycle(n))
        elif kind == 1:
            out.append(wheel(n))
        elif kind == 2:
            out.append(ring_of_cliques(int(rng.integers(2, 6)), int(rng.integers(2, 8))))
        elif kind == 3:
            out.append(erdos_renyi(n, 0.3, seed=i, weight_dist="exponential", scale=5.0))
        else:
            out.append(barabasi_albert(n, 2, seed=i))
    return out


def test_params_validation():
    with pytest.raises(ValueError):
        EldParams(k=0)
    with pytest.raises(InvalidOrder):
        EldParams(p=0.5)
    with pytest.raises(ValueError):
        EldParams(mode="random-walk")
    assert EldParams().k == 5 and EldParams().p == 1.0


def test_self_distance_is_zero():
    g = erdos_renyi(30, 0.3, seed=1, weight_dist="exponential", scale=4.0)
    for params in (EldParams(k=4), EldParams(k=3, p=2.0, mode="normalized"), EldParams(k=2, skip_first=True)):
        assert eld_distance(g, g, params) == 0.0


def test_p2_p3(p2, p3):
    d = eld_distance(p2, p3, EldParams(k=2, p=1))
    # axis 0 vanishes (lambda_0 = 0); axis 1 from the sorted-coupling oracle
    s2 = math.sqrt(2)
    oracle = (0.0 + northwest_corner_wasserstein([-s2, s2], [-1 / s2, 0.0, 1 / s2])) / 2
    assert oracle == pytest.approx(2 * s2 / 6, abs=1e-15)
    assert d == pytest.approx(oracle, abs=1e-12)
    assert d == pytest.approx(0.4714, abs=1e-3)


def test_k_too_large(p2, p3):
    with pytest.raises(KTooLarge):
        eld_distance(p2, p3, EldParams(k=3))
    with pytest.raises(KTooLarge):
        eld_distance(p2, p3, EldParams(k=2, skip_first=True))


def test_k1_vanishes_on_connected_graphs(rng):
    graphs = [g for g in mixed_graphs(rng, 40) if g.is_connected()][:20]
    assert len(graphs) == 20
    for a, b in zip(graphs[::2], graphs[1::2]):
        assert eld_distance(a, b, EldParams(k=1)) <= 1e-10


def test_first_summand_vanishes_on_connected_graphs(rng):
    params = EldParams(k=4)
    graphs = [g for g in mixed_graphs(rng, 12) if g.is_connected() and g.n >= 4]
    for a, b in zip(graphs, graphs[1:]):
        assert axis_distances(embed(a, 4), embed(b, 4), params)[0] <= 1e-10


def test_pseudometric_small(rng):
    graphs = mixed_graphs(rng, 15)
    D = distance_matrix(graphs, EldParams(k=4)).entries
    assert np.all(D >= 0)
    assert np.array_equal(D, D.T)
    assert np.all(np.diag(D) == 0)
    for i, j, k in itertools.permutations(range(len(graphs)), 3):
        assert D[i, j] + D[j, k] >= D[i, k] - 1e-9


def test_isomorphism_invariance(rng):
    params = EldParams(k=4)
    g = erdos_renyi(25, 0.4, seed=11, weight_dist="exponential", scale=20.0)
    h = erdos_renyi(40, 0.3, seed=12, weight_dist="exponential", scale=20.0)
    base = eld_distance(g, h, params)
    for _ in range(20):
        gs, hs = g.permute(rng.permutation(g.n)), h.permute(rng.permutation(h.n))
        assert eld_distance(gs, hs, params) == pytest.approx(base, abs=1e-8)


def test_lexicographic_orientation_depends_on_labels(rng):
    """The per-vertex sign convention is not relabeling invariant."""
    params = EldParams(k=4, orientation="lexicographic")
    g = erdos_renyi(25, 0.4, seed=11, weight_dist="exponential", scale=20.0)
    h = erdos_renyi(40, 0.3, seed=12, weight_dist="exponential", scale=20.0)
    base = eld_distance(g, h, params)
    spread = max(
        abs(eld_distance(g.permute(rng.permutation(g.n)), h.permute(rng.permutation(h.n)), params) - base)
        for _ in range(20)
    )
    assert spread > 1e-3


def test_lexicographic_orientation_uses_raw_axes(p2, p3):
    # both Fiedler axes are symmetric here, so the two conventions agree
    a = eld_distance(p2, p3, EldParams(k=2, orientation="lexicographic"))
    assert a == pytest.approx(math.sqrt(2) / 3, abs=1e-12)
    emb = embed(p3, 2)
    np.testing.assert_allclose(measure_from_axis(emb, 1).values, [-1 / math.sqrt(2), 0, 1 / math.sqrt(2)], atol=1e-14)


def test_skip_first_uses_next_k_eigenpairs(p3):
    c5 = cycle(5)
    params = EldParams(k=2, skip_first=True)
    full = axis_distances(embed(p3, 3).drop_first(), embed(c5, 3).drop_first(), params)
    assert eld_distance(p3, c5, params) == pytest.approx(full.mean(), abs=0)


def test_normalized_mode_ignores_uniform_weight_scaling():
    g = erdos_renyi(30, 0.3, seed=2)
    heavy = build_graph(g.n, [(i, j, 7.5 * w) for i, j, w in g.edges()])
    h = wheel(20)
    norm = EldParams(k=4, mode="normalized")
    assert eld_distance(g, h, norm) == pytest.approx(eld_distance(heavy, h, norm), abs=1e-9)
    comb = EldParams(k=4)
    assert abs(eld_distance(g, h, comb) - eld_distance(heavy, h, comb)) > 1e-3


def test_distance_matrix_trivial_cases(p3):
    dm = distance_matrix([p3], EldParams(k=2))
    assert dm.entries.shape == (1, 1) and dm.entries[0, 0] == 0.0
    dm = distance_matrix([p3, p3], EldParams(k=2))
    np.testing.assert_array_equal(dm.entries, np.zeros((2, 2)))


def test_distance_matrix_names_offending_graph(p2, p3):
    with pytest.raises(KTooLarge) as info:
        distance_matrix([p3, p2], EldParams(k=3), labels=["path3", "path2"])
    assert info.value.label == "path2"
    assert "path2" in str(info.value)


def test_distance_matrix_embeds_each_graph_once(rng):
    graphs = mixed_graphs(rng, 6)
    store = EmbeddingStore()
    distance_matrix(graphs, EldParams(k=4), cache=store)
    assert store.computed == len(graphs)
    distance_matrix(graphs, EldParams(k=4, p=2.0), cache=store)
    assert store.computed == len(graphs)


def test_distance_matrix_matches_pairwise(rng):
    graphs = mixed_graphs(rng, 5)
    params = EldParams(k=3, p=2.0)
    D = distance_matrix(graphs, params).entries
    for i, j in itertools.combinations(range(5), 2):
        assert D[i, j] == eld_distance(graphs[i], graphs[j], params)


def test_parallel_matches_sequential_bitwise(rng):
    graphs = mixed_graphs(rng, 10)
    params = EldParams(k=4)
    seq = distance_matrix(graphs, params, threads=1).entries
    par = distance_matrix(graphs, params, threads=8).entries
    assert seq.tobytes() == par.tobytes()


def test_cycles_vs_wheels_block_structure():
    graphs = [cycle(30), cycle(60), wheel(30), wheel(60)]
    D = distance_matrix(graphs, EldParams(k=5, p=1)).entries
    within = np.mean([D[0, 1], D[2, 3]])
    cross = D[:2, 2:].mean()
    assert within < cross


def test_disk_cache_is_reused(tmp_path):
    g = wheel(25)
    first = EmbeddingStore(str(tmp_path))
    first.get(g, 4)
    assert first.computed == 1 and len(list(tmp_path.glob("*.elde"))) == 1
    second = EmbeddingStore(str(tmp_path))
    emb = second.get(g, 4)
    assert second.computed == 0
    assert emb.vectors.tobytes() == embed(g, 4).vectors.tobytes()
    # different k is a miss
    second.get(g, 3)
    assert second.computed == 1
