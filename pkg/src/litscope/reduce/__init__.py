from .fuzzy import fuzzy_union, membership_strengths
from .neighbors import NeighborGraph, knn_graph, pairwise_distances, smooth_bandwidth
from .svd import TruncatedSVD, truncated_svd
from .types import (
    METHOD_SVD,
    METHOD_UMAP,
    METRIC_COSINE,
    METRIC_EUCLIDEAN,
    SWEEP_COMPONENTS,
    ReducedMatrix,
    ReductionConfig,
    UmapParams,
)
from .umap import UMAP, find_curve_params, spectral_init, umap_embed

__all__ = [
    "METHOD_SVD",
    "METHOD_UMAP",
    "METRIC_COSINE",
    "METRIC_EUCLIDEAN",
    "NeighborGraph",
    "ReducedMatrix",
    "ReductionConfig",
    "SWEEP_COMPONENTS",
    "TruncatedSVD",
    "UMAP",
    "UmapParams",
    "find_curve_params",
    "fuzzy_union",
    "knn_graph",
    "membership_strengths",
    "pairwise_distances",
    "smooth_bandwidth",
    "spectral_init",
    "truncated_svd",
    "umap_embed",
]


def reduce_matrix(doc_matrix, cfg: ReductionConfig) -> ReducedMatrix:
    """Dispatch a DocumentMatrix (or raw array) through the configured reducer."""
    values = getattr(doc_matrix, "values", doc_matrix)
    if cfg.method == METHOD_SVD:
        reduced = truncated_svd(values, cfg.n_components)
        reduced.config = cfg.to_dict()
        return reduced
    return umap_embed(values, cfg)
