"""Embedded Laplacian distance: compare graphs of different sizes through
their Laplacian eigenmaps and 1D optimal transport."""

from .eld import DistanceMatrix, EldParams, EmbeddingStore, distance_matrix, eld_distance
from .generators import (
    GeneratorSpec,
    barabasi_albert,
    cycle,
    erdos_renyi,
    parse_spec,
    ring_of_cliques,
    wheel,
)
from .graph_core import Graph, build_graph, laplacian, normalized_laplacian
from .spectral import SpectralEmbedding, embed, embedding_trace, sign_fix
from .transport import Measure1D, measure_from_axis, wasserstein_1d

__version__ = "0.1.0"

__all__ = [
    "DistanceMatrix",
    "EldParams",
    "EmbeddingStore",
    "GeneratorSpec",
    "Graph",
    "Measure1D",
    "SpectralEmbedding",
    "barabasi_albert",
    "build_graph",
    "cycle",
    "distance_matrix",
    "eld_distance",
    "embed",
    "embedding_trace",
    "erdos_renyi",
    "laplacian",
    "measure_from_axis",
    "normalized_laplacian",
    "parse_spec",
    "ring_of_cliques",
    "sign_fix",
    "wasserstein_1d",
    "wheel",
]
