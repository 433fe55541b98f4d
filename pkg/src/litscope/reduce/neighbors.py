"""Exact k-NN graphs with smoothed local bandwidths.

Corpora are capped at a few hundred documents, so brute-force O(n^2)
distances are fine and keep the graph fully deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import ParameterError
from ..validation import check_matrix
from .types import METRIC_COSINE, METRIC_EUCLIDEAN

SMOOTH_TOLERANCE = 1e-5
SIGMA_FLOOR = 1e-12
_MAX_BISECTIONS = 100


@dataclass
class NeighborGraph:
    k: int
    indices: np.ndarray  # (n, k) neighbor ids, no self-loops
    distances: np.ndarray  # (n, k) sorted ascending per row
    rho: np.ndarray  # distance to nearest neighbor
    sigma: np.ndarray  # per-node bandwidth, > 0

    @property
    def n_nodes(self) -> int:
        return self.indices.shape[0]


def pairwise_distances(X: np.ndarray, metric: str) -> np.ndarray:
    X = np.asarray(X, dtype=np.float64)
    if metric == METRIC_EUCLIDEAN:
        sq = np.sum(X**2, axis=1)
        d2 = sq[:, None] + sq[None, :] - 2.0 * (X @ X.T)
        return np.sqrt(np.maximum(d2, 0.0))
    if metric == METRIC_COSINE:
        norms = np.linalg.norm(X, axis=1)
        safe = np.where(norms == 0.0, 1.0, norms)
        unit = X / safe[:, None]
        sim = np.clip(unit @ unit.T, -1.0, 1.0)
        # Zero vectors are maximally dissimilar to everything.
        zero = norms == 0.0
        sim[zero, :] = 0.0
        sim[:, zero] = 0.0
        return 1.0 - sim
    raise ParameterError(f"unknown metric {metric!r}")


def smooth_bandwidth(distances_row: np.ndarray, rho: float, target: float) -> float:
    """Bisection for sigma with sum_j exp(-max(0, d_j - rho)/sigma) = target."""
    gaps = np.maximum(distances_row - rho, 0.0)

    def cardinality(sigma: float) -> float:
        return float(np.exp(-gaps / sigma).sum())

    lo, hi, mid = 0.0, np.inf, 1.0
    for _ in range(_MAX_BISECTIONS):
        value = cardinality(mid)
        if abs(value - target) < SMOOTH_TOLERANCE:
            break
        if value > target:
            hi = mid
            mid = (lo + hi) / 2.0
        else:
            lo = mid
            mid = mid * 2.0 if hi == np.inf else (lo + hi) / 2.0
    return max(mid, SIGMA_FLOOR)


def knn_graph(X: np.ndarray, k: int, metric: str = METRIC_EUCLIDEAN) -> NeighborGraph:
    """Brute-force exact k nearest neighbors plus local connectivity scales.

    rho is the distance to the nearest neighbor (zero for duplicated
    points); sigma solves the smoothed-cardinality equation with target
    log2(k). Ties in distance resolve to the smaller index.
    """
    X = check_matrix(X, min_rows=2)
    n = X.shape[0]
    if k >= n:
        raise ParameterError(f"k must be < n ({n}), got {k}")
    if k < 1:
        raise ParameterError("k must be >= 1")

    D = pairwise_distances(X, metric)
    np.fill_diagonal(D, np.inf)
    order = np.argsort(D, axis=1, kind="stable")[:, :k]
    dist = np.take_along_axis(D, order, axis=1)

    rho = dist[:, 0].copy()
    target = float(np.log2(k))
    sigma = np.array(
        [smooth_bandwidth(dist[i], rho[i], target) for i in range(n)]
    )
    return NeighborGraph(k=k, indices=order, distances=dist, rho=rho, sigma=sigma)
