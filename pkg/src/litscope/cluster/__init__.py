from .assignment import (
    ALGO_FCM,
    ALGO_HDBSCAN,
    ALGO_KMEANS,
    ALGO_WARD,
    MODE_AUTOMATIC,
    MODE_USER,
    SWEEP_K_VALUES,
    USER_ALGORITHMS,
    ClusterAssignment,
    ClusteringConfig,
    canonicalize_labels,
)
from .fuzzy_cmeans import FuzzyCMeans, fcm_objective, fuzzy_cmeans, update_memberships
from .hdbscan import (
    HDBSCAN,
    core_distances,
    default_min_cluster_size,
    hdbscan,
    mutual_reachability,
    prim_mst,
)
from .kmeans import KMeans, kmeans
from .ward import AgglomerativeWard, agglomerative_ward

__all__ = [
    "ALGO_FCM",
    "ALGO_HDBSCAN",
    "ALGO_KMEANS",
    "ALGO_WARD",
    "AgglomerativeWard",
    "ClusterAssignment",
    "ClusteringConfig",
    "FuzzyCMeans",
    "HDBSCAN",
    "KMeans",
    "MODE_AUTOMATIC",
    "MODE_USER",
    "SWEEP_K_VALUES",
    "USER_ALGORITHMS",
    "agglomerative_ward",
    "canonicalize_labels",
    "core_distances",
    "default_min_cluster_size",
    "fcm_objective",
    "fuzzy_cmeans",
    "hdbscan",
    "kmeans",
    "mutual_reachability",
    "prim_mst",
    "update_memberships",
]


def cluster_matrix(reduced, cfg: ClusteringConfig) -> ClusterAssignment:
    """Dispatch a ReducedMatrix (or raw array) through the configured clusterer."""
    import numpy as np

    X = getattr(reduced, "values", reduced)
    X = np.asarray(X, dtype=float)
    if cfg.algorithm == ALGO_KMEANS:
        return kmeans(X, cfg.k, seed=cfg.seed, max_iter=cfg.max_iter, tol=cfg.tol)
    if cfg.algorithm == ALGO_WARD:
        return agglomerative_ward(X, cfg.k)
    if cfg.algorithm == ALGO_FCM:
        return fuzzy_cmeans(
            X, cfg.k, m=cfg.fuzzifier, seed=cfg.seed, max_iter=cfg.max_iter, tol=cfg.tol
        )
    return hdbscan(
        X, min_cluster_size=cfg.min_cluster_size, min_samples=cfg.min_samples
    )
