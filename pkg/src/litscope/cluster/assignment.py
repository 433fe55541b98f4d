"""Cluster assignments with canonical labeling.

Labels >= 0 always form a contiguous range renumbered by decreasing
cluster size (ties by smallest member index), so keyword lists, trends,
and UI tabs keep stable keys across reruns. -1 marks the uncategorized
(noise) group.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import ParameterError
from ..validation import check_labels

MODE_AUTOMATIC = "automatic"
MODE_USER = "user_controlled"

ALGO_KMEANS = "kmeans"
ALGO_WARD = "agglomerative_ward"
ALGO_FCM = "fuzzy_cmeans"
ALGO_HDBSCAN = "hdbscan"
USER_ALGORITHMS = (ALGO_KMEANS, ALGO_WARD, ALGO_FCM)
SWEEP_K_VALUES = (3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 15)


@dataclass(frozen=True)
class ClusteringConfig:
    algorithm: str = ALGO_HDBSCAN
    k: int | None = None
    fuzzifier: float = 2.0
    min_cluster_size: int | None = None
    min_samples: int | None = None
    seed: int = 0
    max_iter: int = 300
    tol: float = 1e-5

    def __post_init__(self):
        if self.algorithm not in USER_ALGORITHMS + (ALGO_HDBSCAN,):
            raise ParameterError(f"unknown algorithm {self.algorithm!r}")
        if self.algorithm in USER_ALGORITHMS and self.k is None:
            raise ParameterError(f"{self.algorithm} requires k")
        if self.fuzzifier <= 1.0:
            raise ParameterError("fuzzifier must be > 1")

    def to_dict(self) -> dict:
        return {
            "algorithm": self.algorithm,
            "k": self.k,
            "fuzzifier": self.fuzzifier,
            "min_cluster_size": self.min_cluster_size,
            "min_samples": self.min_samples,
            "seed": self.seed,
            "max_iter": self.max_iter,
            "tol": self.tol,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ClusteringConfig":
        return cls(
            algorithm=data.get("algorithm", ALGO_HDBSCAN),
            k=data.get("k"),
            fuzzifier=data.get("fuzzifier", 2.0),
            min_cluster_size=data.get("min_cluster_size"),
            min_samples=data.get("min_samples"),
            seed=data.get("seed", 0),
            max_iter=data.get("max_iter", 300),
            tol=data.get("tol", 1e-5),
        )


@dataclass
class ClusterAssignment:
    labels: np.ndarray
    mode: str
    algorithm: str
    memberships: np.ndarray | None = None

    def __post_init__(self):
        self.labels = check_labels(self.labels)
        if self.memberships is not None:
            self.memberships = np.asarray(self.memberships, dtype=np.float64)
            if self.memberships.shape[0] != self.labels.shape[0]:
                raise ParameterError("memberships not aligned to labels")
            sums = self.memberships.sum(axis=1)
            if not np.allclose(sums, 1.0, atol=1e-9):
                raise ParameterError("membership rows must sum to 1")
        positive = self.labels[self.labels >= 0]
        if positive.size:
            present = np.unique(positive)
            expected = np.arange(present.size)
            if not np.array_equal(present, expected):
                raise ParameterError(
                    "labels >= 0 must form a contiguous 0..n_clusters-1 range"
                )

    @property
    def n_clusters(self) -> int:
        positive = self.labels[self.labels >= 0]
        return int(positive.max()) + 1 if positive.size else 0

    @property
    def n_noise(self) -> int:
        return int(np.sum(self.labels == -1))

    def cluster_ids(self) -> list[int]:
        ids = list(range(self.n_clusters))
        if self.n_noise:
            ids.append(-1)
        return ids

    def members(self, cluster_id: int) -> np.ndarray:
        return np.nonzero(self.labels == cluster_id)[0]


def canonicalize_labels(labels: np.ndarray) -> tuple[np.ndarray, dict[int, int]]:
    """Renumber clusters by decreasing size, ties by smallest member index.

    Returns the new labels and the old->new id mapping; -1 maps to -1.
    """
    labels = check_labels(labels)
    old_ids = [int(c) for c in np.unique(labels) if c >= 0]
    stats = []
    for cluster in old_ids:
        members = np.nonzero(labels == cluster)[0]
        stats.append((-members.size, int(members.min()), cluster))
    stats.sort()
    mapping = {old: new for new, (_, _, old) in enumerate(stats)}
    mapping[-1] = -1
    remapped = np.array([mapping[int(c)] for c in labels], dtype=np.int64)
    return remapped, mapping
