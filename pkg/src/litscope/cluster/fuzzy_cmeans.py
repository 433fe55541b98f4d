"""Fuzzy C-Means with crisp labels by membership argmax."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin

from ..errors import ParameterError
from ..validation import check_matrix, check_random_state
from .assignment import ALGO_FCM, MODE_USER, ClusterAssignment, canonicalize_labels

_TINY = 1e-300


def update_memberships(X: np.ndarray, centers: np.ndarray, m: float) -> np.ndarray:
    """u_ik = 1 / sum_j (d_ik / d_jk)^(2/(m-1)).

    A point coinciding with a centroid gets crisp membership 1 there
    (lowest cluster id wins if it sits on several).
    """
    d2 = ((X[:, None, :] - centers[None, :, :]) ** 2).sum(axis=2)
    U = np.zeros_like(d2)
    singular = (d2 <= 0.0).any(axis=1)
    for row in np.nonzero(singular)[0]:
        U[row, int(np.argmin(d2[row]))] = 1.0
    regular = ~singular
    if regular.any():
        inv = (1.0 / np.maximum(d2[regular], _TINY)) ** (1.0 / (m - 1.0))
        U[regular] = inv / inv.sum(axis=1, keepdims=True)
    return U


def fcm_objective(X: np.ndarray, centers: np.ndarray, U: np.ndarray, m: float) -> float:
    d2 = ((X[:, None, :] - centers[None, :, :]) ** 2).sum(axis=2)
    return float(np.sum((U**m) * d2))


class FuzzyCMeans(BaseEstimator, ClusterMixin):
    """Alternating centroid/membership updates; the J_m objective recorded
    after each round is non-increasing."""

    def __init__(
        self,
        n_clusters: int = 8,
        m: float = 2.0,
        seed: int = 0,
        max_iter: int = 300,
        tol: float = 1e-5,
    ):
        self.n_clusters = n_clusters
        self.m = m
        self.seed = seed
        self.max_iter = max_iter
        self.tol = tol

    def fit_predict(self, X, y=None) -> np.ndarray:
        X = check_matrix(X)
        n = X.shape[0]
        k = self.n_clusters
        if not 1 <= k <= n:
            raise ParameterError(f"n_clusters must be in [1, {n}], got {k}")
        if self.m <= 1.0:
            raise ParameterError("fuzzifier m must be > 1")

        rng = check_random_state(self.seed)
        U = rng.random((n, k))
        U /= U.sum(axis=1, keepdims=True)

        centers = np.zeros((k, X.shape[1]))
        self.objective_history_: list[float] = []
        for _ in range(self.max_iter):
            Um = U**self.m
            centers = (Um.T @ X) / np.maximum(Um.sum(axis=0)[:, None], _TINY)
            new_U = update_memberships(X, centers, self.m)
            self.objective_history_.append(fcm_objective(X, centers, new_U, self.m))
            change = float(np.max(np.abs(new_U - U)))
            U = new_U
            if change < self.tol:
                break

        labels = np.argmax(U, axis=1)  # ties resolve to the lowest id
        labels, mapping = canonicalize_labels(labels)
        # Align membership columns with canonical ids; clusters that won no
        # point by argmax keep their columns at the tail in old-id order.
        column_order = sorted(range(k), key=lambda c: mapping.get(c, k + c))
        self.memberships_ = U[:, column_order]
        self.cluster_centers_ = centers[column_order]
        self.labels_ = labels
        return labels


def fuzzy_cmeans(
    X: np.ndarray, k: int, m: float = 2.0, seed: int = 0, **kwargs
) -> ClusterAssignment:
    model = FuzzyCMeans(n_clusters=k, m=m, seed=seed, **kwargs)
    labels = model.fit_predict(X)
    return ClusterAssignment(
        labels=labels,
        mode=MODE_USER,
        algorithm=ALGO_FCM,
        memberships=model.memberships_,
    )
