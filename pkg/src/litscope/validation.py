"""Input validation helpers for the estimator-style API.

Small local equivalents of sklearn's ``check_array`` / label checks, kept
in-package so error messages name our own contracts.
"""

from __future__ import annotations

import numpy as np

from .errors import ParameterError


def check_matrix(X, *, name: str = "X", min_rows: int = 1) -> np.ndarray:
    """Coerce to a 2-d float64 array with finite entries."""
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2:
        raise ParameterError(f"{name} must be 2-dimensional, got ndim={X.ndim}")
    if X.shape[0] < min_rows:
        raise ParameterError(
            f"{name} needs at least {min_rows} rows, got {X.shape[0]}"
        )
    if not np.isfinite(X).all():
        raise ParameterError(f"{name} contains NaN or Inf entries")
    return X


def check_labels(labels, n_rows: int | None = None) -> np.ndarray:
    """Coerce labels to a 1-d int array; -1 is the noise marker."""
    labels = np.asarray(labels, dtype=np.int64)
    if labels.ndim != 1:
        raise ParameterError(f"labels must be 1-dimensional, got ndim={labels.ndim}")
    if n_rows is not None and labels.shape[0] != n_rows:
        raise ParameterError(
            f"labels length {labels.shape[0]} does not match n_rows={n_rows}"
        )
    if labels.size and labels.min() < -1:
        raise ParameterError("labels below -1 are not allowed")
    return labels


def check_random_state(seed) -> np.random.Generator:
    """Build a Generator from an int seed or pass an existing one through."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def l2_normalize_rows(X: np.ndarray) -> np.ndarray:
    """Unit-length rows; all-zero rows are left at zero."""
    norms = np.linalg.norm(X, axis=1, keepdims=True)
    safe = np.where(norms == 0.0, 1.0, norms)
    return X / safe
