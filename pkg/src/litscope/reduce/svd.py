"""Truncated SVD with deterministic component signs."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin

from ..errors import DimensionError
from ..validation import check_matrix
from .types import METHOD_SVD, ReducedMatrix


class TruncatedSVD(BaseEstimator, TransformerMixin):
    """Rank-k factorization X ~ U_k S_k V_k^T, embedding = U_k S_k.

    The sign of each component is fixed by making the largest-magnitude
    loading of the corresponding right singular vector positive, so
    repeated fits are identical.
    """

    def __init__(self, n_components: int = 10):
        self.n_components = n_components

    def fit(self, X, y=None):
        self.fit_transform(X)
        return self

    def fit_transform(self, X, y=None) -> np.ndarray:
        X = check_matrix(X, min_rows=2)
        n, d = X.shape
        k = self.n_components
        if not 1 <= k <= min(n, d):
            raise DimensionError(
                f"n_components must be in [1, {min(n, d)}], got {k}"
            )
        U, S, Vt = np.linalg.svd(X, full_matrices=False)
        U, S, Vt = U[:, :k], S[:k], Vt[:k]
        signs = np.sign(Vt[np.arange(k), np.argmax(np.abs(Vt), axis=1)])
        signs[signs == 0] = 1.0
        self.components_ = Vt * signs[:, None]
        self.singular_values_ = S
        self.embedding_ = U * signs[None, :] * S[None, :]
        return self.embedding_

    def transform(self, X) -> np.ndarray:
        X = check_matrix(X)
        return X @ self.components_.T


def truncated_svd(X: np.ndarray, k: int) -> ReducedMatrix:
    svd = TruncatedSVD(n_components=k)
    values = svd.fit_transform(X)
    return ReducedMatrix(values, method=METHOD_SVD, config={"n_components": k})
