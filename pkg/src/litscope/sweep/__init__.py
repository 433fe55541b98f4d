from .grid import SweepConfig, SweepGrid, enumerate_grid
from .harness import CSV_COLUMNS, CorpusContext, SweepResult, run_config, run_sweep, write_csv
from .presets import load_presets, preset_query
from .ranking import (
    METRICS,
    DefaultConfiguration,
    RankTable,
    SweepRecord,
    component_frequency_default,
    normalized_performance,
    rank_aggregate,
)

__all__ = [
    "CSV_COLUMNS",
    "CorpusContext",
    "DefaultConfiguration",
    "METRICS",
    "RankTable",
    "SweepConfig",
    "SweepGrid",
    "SweepRecord",
    "SweepResult",
    "component_frequency_default",
    "enumerate_grid",
    "load_presets",
    "normalized_performance",
    "preset_query",
    "rank_aggregate",
    "run_config",
    "run_sweep",
    "write_csv",
]
