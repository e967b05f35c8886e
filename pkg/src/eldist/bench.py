"""Wall-clock timing of pairwise distances over random graph samples."""

import time

from .eld import EldParams, distance_matrix
from .generators import barabasi_albert, erdos_renyi


def sample_graphs(model, n, samples=10, seed=0, prob=0.03, m=3):
    if model == "er":
        return [erdos_renyi(n, prob, seed + i) for i in range(samples)]
    if model == "ba":
        return [barabasi_albert(n, m, seed + i) for i in range(samples)]
    raise ValueError(f"unknown model {model!r}; expected 'er' or 'ba'")


def time_pairwise(model, sizes, params=None, samples=10, seed=0, prob=0.03, m=3, threads=1):
    """Seconds to compute the full distance matrix of ``samples`` graphs per size.

    Graph generation is excluded from the timing; embedding is included.
    Returns a list of ``(size, seconds)``.
    """
    sizes = list(sizes)
    if not sizes:
        raise ValueError("no sizes given")
    params = params or EldParams()
    rows = []
    for n in sizes:
        graphs = sample_graphs(model, n, samples, seed, prob, m)
        t0 = time.perf_counter()
        distance_matrix(graphs, params, threads=threads)
        rows.append((n, time.perf_counter() - t0))
    return rows
