from .cache import ResultCache, result_key
from .config import PipelineConfig
from .pipeline import (
    ENV_CACHE_DIR,
    ENV_EMBED_URL,
    ENV_FIXTURE_DIR,
    ExplorationResult,
    ExplorerService,
    TrendSeries,
    run_pipeline,
    temporal_series,
)

__all__ = [
    "ENV_CACHE_DIR",
    "ENV_EMBED_URL",
    "ENV_FIXTURE_DIR",
    "ExplorationResult",
    "ExplorerService",
    "PipelineConfig",
    "ResultCache",
    "TrendSeries",
    "result_key",
    "run_pipeline",
    "temporal_series",
]
