"""Shared configuration and output types for dimensionality reduction."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import ParameterError

METHOD_SVD = "svd"
METHOD_UMAP = "umap"

METRIC_COSINE = "cosine"
METRIC_EUCLIDEAN = "euclidean"

SWEEP_COMPONENTS = (5, 10, 15)


@dataclass(frozen=True)
class UmapParams:
    n_neighbors: int = 15
    min_dist: float = 0.1
    spread: float = 1.0
    n_epochs: int = 200
    negative_sample_rate: int = 5
    metric: str = METRIC_COSINE
    seed: int = 0

    def __post_init__(self):
        if self.n_neighbors < 2:
            raise ParameterError("n_neighbors must be >= 2")
        if not self.min_dist < self.spread:
            raise ParameterError("min_dist must be < spread")
        if self.metric not in (METRIC_COSINE, METRIC_EUCLIDEAN):
            raise ParameterError(f"unknown metric {self.metric!r}")

    def to_dict(self) -> dict:
        return {
            "n_neighbors": self.n_neighbors,
            "min_dist": self.min_dist,
            "spread": self.spread,
            "n_epochs": self.n_epochs,
            "negative_sample_rate": self.negative_sample_rate,
            "metric": self.metric,
            "seed": self.seed,
        }


@dataclass(frozen=True)
class ReductionConfig:
    method: str = METHOD_UMAP
    n_components: int = 10
    umap: UmapParams = field(default_factory=UmapParams)

    def __post_init__(self):
        if self.method not in (METHOD_SVD, METHOD_UMAP):
            raise ParameterError(f"unknown reduction method {self.method!r}")
        if self.n_components < 1:
            raise ParameterError("n_components must be >= 1")

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            "n_components": self.n_components,
            "umap": self.umap.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ReductionConfig":
        umap_params = UmapParams(**data.get("umap", {}))
        return cls(
            method=data.get("method", METHOD_UMAP),
            n_components=int(data.get("n_components", 10)),
            umap=umap_params,
        )


@dataclass
class ReducedMatrix:
    """n x k layout plus how it was produced."""

    values: np.ndarray
    method: str
    config: dict = field(default_factory=dict)

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.float64)
        if self.values.ndim != 2:
            raise ValueError("reduced matrix must be 2-dimensional")
        if not np.isfinite(self.values).all():
            raise ValueError("reduced matrix contains NaN/Inf")

    @property
    def rows(self) -> int:
        return self.values.shape[0]

    @property
    def n_components(self) -> int:
        return self.values.shape[1]
