"""Intrinsic clustering metrics: Silhouette, Calinski-Harabasz, Davies-Bouldin.

Noise points (label -1) are excluded from every metric; the exclusion is
reported through MetricReport.n_noise so it stays auditable.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import MetricUndefinedError
from ..validation import check_labels, check_matrix

SPACE_REDUCED = "reduced"
SPACE_ORIGINAL = "original"


@dataclass
class MetricReport:
    sil: float | None = None
    chi: float | None = None
    dbi: float | None = None
    c_v: float | None = None
    c_npmi: float | None = None
    n_clusters: int = 0
    n_noise: int = 0
    space: str = SPACE_REDUCED
    reasons: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        def wire(value):
            # JSON has no Infinity; degenerate values travel as null + reason.
            if value is None or not np.isfinite(value):
                return None
            return float(value)

        out = {
            "sil": wire(self.sil),
            "chi": wire(self.chi),
            "dbi": wire(self.dbi),
            "c_v": wire(self.c_v),
            "c_npmi": wire(self.c_npmi),
            "n_clusters": self.n_clusters,
            "n_noise": self.n_noise,
            "space": self.space,
            "reasons": dict(self.reasons),
        }
        for name in ("sil", "chi", "dbi"):
            value = getattr(self, name)
            if value is not None and not np.isfinite(value):
                out["reasons"].setdefault(name, "infinite-sentinel")
        return out


def _drop_noise(X: np.ndarray, labels: np.ndarray):
    keep = labels >= 0
    return X[keep], labels[keep]


def silhouette(X, labels) -> float:
    """Mean of (b - a) / max(a, b); singleton clusters contribute 0."""
    X = check_matrix(X)
    labels = check_labels(labels, X.shape[0])
    X, labels = _drop_noise(X, labels)
    clusters = np.unique(labels)
    if clusters.size < 2:
        raise MetricUndefinedError(
            "silhouette needs at least 2 clusters", reason="fewer-than-2-clusters"
        )
    n = X.shape[0]
    # Direct-form distances: the inner-product expansion loses ~1e-9 of
    # precision, which the naive-oracle agreement contract does not allow.
    D = np.sqrt(((X[:, None, :] - X[None, :, :]) ** 2).sum(axis=2))

    scores = np.zeros(n)
    sizes = {int(c): int(np.sum(labels == c)) for c in clusters}
    sums = {int(c): D[:, labels == c].sum(axis=1) for c in clusters}
    for i in range(n):
        own = int(labels[i])
        if sizes[own] == 1:
            scores[i] = 0.0
            continue
        a = sums[own][i] / (sizes[own] - 1)
        b = min(
            sums[int(c)][i] / sizes[int(c)] for c in clusters if int(c) != own
        )
        scores[i] = (b - a) / max(a, b)
    return float(scores.mean())


def calinski_harabasz(X, labels) -> float:
    """(BGSS / (k - 1)) / (WGSS / (n - k)); WGSS = 0 reports +inf."""
    X = check_matrix(X)
    labels = check_labels(labels, X.shape[0])
    X, labels = _drop_noise(X, labels)
    clusters = np.unique(labels)
    n, k = X.shape[0], clusters.size
    if not 2 <= k <= n - 1:
        raise MetricUndefinedError(
            f"calinski-harabasz needs 2 <= k <= n - 1, got k={k}, n={n}",
            reason="k-out-of-range",
        )
    grand = X.mean(axis=0)
    bgss = 0.0
    wgss = 0.0
    for c in clusters:
        members = X[labels == c]
        centroid = members.mean(axis=0)
        bgss += members.shape[0] * float(np.sum((centroid - grand) ** 2))
        wgss += float(np.sum((members - centroid) ** 2))
    if wgss == 0.0:
        return float("inf")
    return (bgss / (k - 1)) / (wgss / (n - k))


def davies_bouldin(X, labels) -> float:
    """Mean over clusters of the worst (S_i + S_j) / M_ij ratio."""
    X = check_matrix(X)
    labels = check_labels(labels, X.shape[0])
    X, labels = _drop_noise(X, labels)
    clusters = np.unique(labels)
    k = clusters.size
    if k < 2:
        raise MetricUndefinedError(
            "davies-bouldin needs at least 2 clusters", reason="fewer-than-2-clusters"
        )
    centroids = np.vstack([X[labels == c].mean(axis=0) for c in clusters])
    scatter = np.array(
        [
            float(np.mean(np.linalg.norm(X[labels == c] - centroids[i], axis=1)))
            for i, c in enumerate(clusters)
        ]
    )
    worst = np.zeros(k)
    for i in range(k):
        ratios = []
        for j in range(k):
            if i == j:
                continue
            separation = float(np.linalg.norm(centroids[i] - centroids[j]))
            if separation == 0.0:
                return float("inf")
            ratios.append((scatter[i] + scatter[j]) / separation)
        worst[i] = max(ratios)
    return float(worst.mean())
