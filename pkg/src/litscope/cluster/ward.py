"""Bottom-up Ward clustering via the Lance-Williams recurrence.

Merge cost between clusters is the increase in total within-cluster
variance; ties resolve to the lexicographically smallest pair of cluster
ids (each cluster is identified by its smallest original member), so the
procedure is fully deterministic.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin

from ..errors import ParameterError
from ..validation import check_matrix
from .assignment import ALGO_WARD, MODE_USER, ClusterAssignment, canonicalize_labels


class AgglomerativeWard(BaseEstimator, ClusterMixin):
    def __init__(self, n_clusters: int = 8):
        self.n_clusters = n_clusters

    def fit_predict(self, X, y=None) -> np.ndarray:
        X = check_matrix(X)
        n = X.shape[0]
        k = self.n_clusters
        if not 1 <= k <= n:
            raise ParameterError(f"n_clusters must be in [1, {n}], got {k}")

        # D[i, j] = variance increase of merging clusters i and j;
        # singletons start at ||x_i - x_j||^2 / 2.
        sq = np.sum(X**2, axis=1)
        D = sq[:, None] + sq[None, :] - 2.0 * (X @ X.T)
        D = np.maximum(D, 0.0) / 2.0
        np.fill_diagonal(D, np.inf)

        active = np.ones(n, dtype=bool)
        sizes = np.ones(n, dtype=np.int64)
        membership = np.arange(n, dtype=np.int64)
        self.merge_history_ = []

        for _ in range(n - k):
            masked = np.where(
                active[:, None] & active[None, :], D, np.inf
            )
            # Row-major argmin picks the smallest (i, j) pair among ties.
            flat = int(np.argmin(masked))
            i, j = divmod(flat, n)
            if i > j:
                i, j = j, i
            cost = D[i, j]
            self.merge_history_.append((i, j, float(cost)))

            ni, nj = sizes[i], sizes[j]
            others = np.nonzero(active)[0]
            others = others[(others != i) & (others != j)]
            if others.size:
                no = sizes[others].astype(np.float64)
                updated = (
                    (ni + no) * D[i, others]
                    + (nj + no) * D[j, others]
                    - no * cost
                ) / (ni + nj + no)
                D[i, others] = updated
                D[others, i] = updated
            sizes[i] = ni + nj
            active[j] = False
            membership[membership == j] = i

        labels, _ = canonicalize_labels(membership)
        self.labels_ = labels
        return labels


def agglomerative_ward(X: np.ndarray, k: int) -> ClusterAssignment:
    model = AgglomerativeWard(n_clusters=k)
    labels = model.fit_predict(X)
    return ClusterAssignment(labels=labels, mode=MODE_USER, algorithm=ALGO_WARD)
