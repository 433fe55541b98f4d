"""Lloyd's k-means with k-means++ seeding and empty-cluster repair."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin

from ..errors import ParameterError
from ..validation import check_matrix, check_random_state
from .assignment import ALGO_KMEANS, MODE_USER, ClusterAssignment, canonicalize_labels


def _plus_plus_init(X: np.ndarray, k: int, rng: np.random.Generator) -> np.ndarray:
    n = X.shape[0]
    centers = np.empty((k, X.shape[1]))
    centers[0] = X[int(rng.integers(n))]
    closest = np.sum((X - centers[0]) ** 2, axis=1)
    for i in range(1, k):
        total = closest.sum()
        if total == 0.0:
            # Remaining points coincide with centers; any choice is equal.
            centers[i] = X[int(rng.integers(n))]
        else:
            r = rng.random() * total
            index = min(int(np.searchsorted(np.cumsum(closest), r)), n - 1)
            centers[i] = X[index]
        closest = np.minimum(closest, np.sum((X - centers[i]) ** 2, axis=1))
    return centers


class KMeans(BaseEstimator, ClusterMixin):
    """Seeded k-means++ initialization followed by Lloyd iterations.

    Empty clusters are repaired by reseeding them to the point farthest
    from its current center, which never increases the objective, so the
    recorded inertia history is non-increasing.
    """

    def __init__(self, n_clusters: int = 8, seed: int = 0, max_iter: int = 300, tol: float = 1e-5):
        self.n_clusters = n_clusters
        self.seed = seed
        self.max_iter = max_iter
        self.tol = tol

    def _assign(self, X: np.ndarray, centers: np.ndarray):
        d2 = ((X[:, None, :] - centers[None, :, :]) ** 2).sum(axis=2)
        labels = np.argmin(d2, axis=1)
        for cluster in range(centers.shape[0]):
            if not np.any(labels == cluster):
                point_d2 = d2[np.arange(X.shape[0]), labels]
                farthest = int(np.argmax(point_d2))
                labels[farthest] = cluster
                centers[cluster] = X[farthest]
                d2[:, cluster] = ((X - centers[cluster]) ** 2).sum(axis=1)
                d2[farthest, cluster] = 0.0
        inertia = float(d2[np.arange(X.shape[0]), labels].sum())
        return labels, inertia

    def fit_predict(self, X, y=None) -> np.ndarray:
        X = check_matrix(X)
        n = X.shape[0]
        k = self.n_clusters
        if not 1 <= k <= n:
            raise ParameterError(f"n_clusters must be in [1, {n}], got {k}")
        rng = check_random_state(self.seed)
        centers = _plus_plus_init(X, k, rng)

        self.inertia_history_: list[float] = []
        labels = np.zeros(n, dtype=np.int64)
        for _ in range(self.max_iter):
            labels, inertia = self._assign(X, centers)
            self.inertia_history_.append(inertia)
            new_centers = np.vstack(
                [X[labels == cluster].mean(axis=0) for cluster in range(k)]
            )
            shift = float(np.max(np.linalg.norm(new_centers - centers, axis=1)))
            centers = new_centers
            if shift < self.tol:
                break
        labels, inertia = self._assign(X, centers)
        self.inertia_history_.append(inertia)

        self.inertia_ = inertia
        self.cluster_centers_ = centers
        self.labels_, _ = canonicalize_labels(labels)
        return self.labels_


def kmeans(X: np.ndarray, k: int, seed: int = 0, **kwargs) -> ClusterAssignment:
    model = KMeans(n_clusters=k, seed=seed, **kwargs)
    labels = model.fit_predict(X)
    return ClusterAssignment(labels=labels, mode=MODE_USER, algorithm=ALGO_KMEANS)
