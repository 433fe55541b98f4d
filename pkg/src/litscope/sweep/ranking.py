"""Rank aggregation over sweep records and component-frequency defaults.

Per metric, configurations are ranked independently (DBI ascending,
everything else descending), tied values share the mean of their rank
positions, and non-finite sentinels rank last. The aggregate score is the
plain sum of the five ranks; lower is stronger.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

from ..errors import ParameterError
from .grid import SweepConfig

METRICS = ("chi", "dbi", "sil", "c_v", "c_npmi")
ASCENDING = {"dbi"}  # lower is better; the rest rank descending


@dataclass
class SweepRecord:
    corpus_id: str
    config: SweepConfig
    metrics: dict[str, float | None]
    runtime: float = 0.0
    error: str | None = None
    ranks: dict[str, float] = field(default_factory=dict)
    aggregate: float | None = None

    def metric(self, name: str) -> float | None:
        value = self.metrics.get(name)
        if value is None or not math.isfinite(value):
            return None
        return float(value)


@dataclass
class RankTable:
    corpus_id: str
    records: list[SweepRecord]  # ascending aggregate
    winner: SweepRecord


def _rank_one_metric(values: list[float | None], ascending: bool) -> list[float]:
    keyed = []
    for index, value in enumerate(values):
        if value is None:
            keyed.append((1, 0.0, index))  # sentinel bucket, always last
        else:
            keyed.append((0, value if ascending else -value, index))
    order = sorted(keyed, key=lambda item: (item[0], item[1]))
    ranks = [0.0] * len(values)
    position = 0
    while position < len(order):
        tie_end = position
        while (
            tie_end < len(order)
            and order[tie_end][:2] == order[position][:2]
        ):
            tie_end += 1
        mean_rank = (position + 1 + tie_end) / 2.0
        for _, _, index in order[position:tie_end]:
            ranks[index] = mean_rank
        position = tie_end
    return ranks


def normalized_performance(records: list[SweepRecord]) -> list[float]:
    """Mean of min-max normalized metrics per record, DBI inverted.

    Sentinels contribute 0; a metric constant across records contributes
    0.5 to everyone (it cannot discriminate).
    """
    scores = [0.0] * len(records)
    for name in METRICS:
        values = [r.metric(name) for r in records]
        finite = [v for v in values if v is not None]
        if not finite:
            continue
        lo, hi = min(finite), max(finite)
        for i, value in enumerate(values):
            if value is None:
                continue
            if hi == lo:
                unit = 0.5
            else:
                unit = (value - lo) / (hi - lo)
                if name in ASCENDING:
                    unit = 1.0 - unit
            scores[i] += unit
    return [s / len(METRICS) for s in scores]


def rank_aggregate(records: list[SweepRecord]) -> RankTable:
    """Rank each metric, sum the ranks, and pick the winner.

    Aggregate ties break by higher mean normalized performance, then by
    lexicographic config order.
    """
    if not records:
        raise ParameterError("rank_aggregate needs at least one record")
    corpus_ids = {r.corpus_id for r in records}
    if len(corpus_ids) != 1:
        raise ParameterError(f"records span multiple corpora: {sorted(corpus_ids)}")

    for name in METRICS:
        ranks = _rank_one_metric(
            [r.metric(name) for r in records], ascending=name in ASCENDING
        )
        for record, rank in zip(records, ranks):
            record.ranks[name] = rank
    for record in records:
        record.aggregate = sum(record.ranks[name] for name in METRICS)

    performance = normalized_performance(records)
    ordered = sorted(
        zip(records, performance),
        key=lambda pair: (pair[0].aggregate, -pair[1], pair[0].config),
    )
    ordered_records = [record for record, _ in ordered]
    return RankTable(
        corpus_id=records[0].corpus_id,
        records=ordered_records,
        winner=ordered_records[0],
    )


DEFAULT_AXES = ("representation", "reducer", "n_components", "algorithm")


@dataclass(frozen=True)
class DefaultConfiguration:
    representation: str
    reducer: str
    n_components: int
    algorithm: str

    def to_dict(self) -> dict:
        return {
            "representation": self.representation,
            "reducer": self.reducer,
            "n_components": self.n_components,
            "algorithm": self.algorithm,
        }


def component_frequency_default(winners: list[SweepRecord]) -> DefaultConfiguration:
    """Most frequent value per component axis across per-corpus winners.

    Frequency ties resolve by the higher mean normalized performance of
    the winners carrying each tied value.
    """
    if not winners:
        raise ParameterError("need at least one winner")
    performance = normalized_performance(winners)
    choices = {}
    for axis in DEFAULT_AXES:
        values = [getattr(r.config, axis) for r in winners]
        counts = Counter(values)
        top = max(counts.values())
        tied = sorted(v for v, c in counts.items() if c == top)
        if len(tied) == 1:
            choices[axis] = tied[0]
            continue
        def mean_perf(value):
            scores = [
                p
                for r, p in zip(winners, performance)
                if getattr(r.config, axis) == value
            ]
            return sum(scores) / len(scores)

        # tied is sorted, and max keeps the first maximum: deterministic.
        choices[axis] = max(tied, key=mean_perf)
    return DefaultConfiguration(**choices)
