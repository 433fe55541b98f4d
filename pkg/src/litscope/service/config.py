"""Pipeline configuration: one object captures every knob that affects output."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from ..cluster.assignment import (
    ALGO_HDBSCAN,
    ALGO_WARD,
    MODE_AUTOMATIC,
    MODE_USER,
    USER_ALGORITHMS,
)
from ..errors import ParameterError
from ..metrics.coherence import CoherenceConfig
from ..reduce.types import METHOD_UMAP, ReductionConfig, UmapParams
from ..text.matrix import REPRESENTATION_TAGS, TAG_EXTERNAL
from ..text.tfidf import TfidfParams

DEFAULT_FETCH_CAP = 300


@dataclass(frozen=True)
class PipelineConfig:
    """Defaults follow the sweep-selected configuration: a MiniLM-class
    embedding endpoint, 10-component UMAP, and Ward clustering in
    user-controlled mode (HDBSCAN drives automatic mode)."""

    representation: str = TAG_EXTERNAL
    mode: str = MODE_AUTOMATIC
    k: int | None = None
    algorithm: str = ALGO_WARD
    reduction: ReductionConfig = field(default_factory=ReductionConfig)
    tfidf: TfidfParams = field(default_factory=TfidfParams)
    hashed_dims: int = 256
    embedding_url: str | None = None
    embedding_fallback: bool = False
    min_cluster_size: int | None = None
    min_samples: int | None = None
    fuzzifier: float = 2.0
    top_n: int = 10
    coherence: CoherenceConfig = field(default_factory=CoherenceConfig)
    seed: int = 0

    def __post_init__(self):
        if self.representation not in REPRESENTATION_TAGS:
            raise ParameterError(f"unknown representation {self.representation!r}")
        if self.mode not in (MODE_AUTOMATIC, MODE_USER):
            raise ParameterError(f"unknown mode {self.mode!r}")
        if self.mode == MODE_USER and self.k is None:
            raise ParameterError("user_controlled mode requires k")
        if self.algorithm not in USER_ALGORITHMS:
            raise ParameterError(
                f"user-controlled algorithm must be one of {USER_ALGORITHMS}"
            )

    @property
    def effective_algorithm(self) -> str:
        return ALGO_HDBSCAN if self.mode == MODE_AUTOMATIC else self.algorithm

    def with_overrides(self, **kwargs) -> "PipelineConfig":
        return replace(self, **kwargs)

    @classmethod
    def offline_default(cls, **kwargs) -> "PipelineConfig":
        """Default configuration with the hashed fallback representation,
        so no embedding endpoint is needed."""
        kwargs.setdefault("representation", "hashed")
        return cls(**kwargs)

    def to_dict(self) -> dict:
        return {
            "representation": self.representation,
            "mode": self.mode,
            "k": self.k,
            "algorithm": self.algorithm,
            "reduction": self.reduction.to_dict(),
            "tfidf": {
                "min_df": self.tfidf.min_df,
                "max_df": self.tfidf.max_df,
                "max_features": self.tfidf.max_features,
                "ngram_range": list(self.tfidf.ngram_range),
            },
            "hashed_dims": self.hashed_dims,
            "embedding_url": self.embedding_url,
            "embedding_fallback": self.embedding_fallback,
            "min_cluster_size": self.min_cluster_size,
            "min_samples": self.min_samples,
            "fuzzifier": self.fuzzifier,
            "top_n": self.top_n,
            "coherence": self.coherence.to_dict(),
            "seed": self.seed,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PipelineConfig":
        kwargs = {
            key: data[key]
            for key in (
                "representation",
                "mode",
                "k",
                "algorithm",
                "hashed_dims",
                "embedding_url",
                "embedding_fallback",
                "min_cluster_size",
                "min_samples",
                "fuzzifier",
                "top_n",
                "seed",
            )
            if key in data and data[key] is not None
        }
        if data.get("reduction"):
            kwargs["reduction"] = ReductionConfig.from_dict(data["reduction"])
        elif "n_components" in data or "reducer" in data:
            # Flat UI-style keys.
            kwargs["reduction"] = ReductionConfig(
                method=data.get("reducer", METHOD_UMAP),
                n_components=int(data.get("n_components", 10)),
                umap=UmapParams(),
            )
        if data.get("tfidf"):
            tfidf = data["tfidf"]
            kwargs["tfidf"] = TfidfParams(
                min_df=tfidf.get("min_df", 3),
                max_df=tfidf.get("max_df", 0.7),
                max_features=tfidf.get("max_features", 3000),
                ngram_range=tuple(tfidf.get("ngram_range", (1, 3))),
            )
        if data.get("coherence"):
            kwargs["coherence"] = CoherenceConfig(**data["coherence"])
        return cls(**kwargs)
