"""Runs the configuration grid over corpora and writes Table-style CSVs.

Representations and reductions are computed once per corpus and shared
across the clustering configs that consume them; failed configs are
recorded with sentinel metrics instead of aborting the sweep.
"""

from __future__ import annotations

import csv
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ..arxiv.records import CorpusSnapshot
from ..cluster import cluster_matrix
from ..cluster.assignment import ClusteringConfig
from ..labeling import ctfidf_keywords
from ..metrics.coherence import CoherenceConfig, CoherenceEvaluator
from ..metrics.intrinsic import calinski_harabasz, davies_bouldin, silhouette
from ..errors import LitscopeError, MetricUndefinedError
from ..reduce import reduce_matrix
from ..reduce.types import ReductionConfig, UmapParams
from ..text.external import ExternalEmbedder
from ..text.hashing import HashedEmbedder
from ..text.preprocess import preprocess_corpus
from ..text.tfidf import TfidfVectorizer
from .grid import SweepConfig, SweepGrid, enumerate_grid
from .ranking import METRICS, RankTable, SweepRecord, rank_aggregate

log = logging.getLogger(__name__)

CSV_COLUMNS = (
    "dataset",
    "representation",
    "reducer",
    "n_components",
    "K",
    "algorithm",
    "CHI",
    "DBI",
    "SIL",
    "C_V",
    "C_NPMI",
    "aggregate_rank",
)


@dataclass
class SweepResult:
    tables: list[RankTable]
    records: list[SweepRecord] = field(default_factory=list)

    @property
    def winners(self) -> list[SweepRecord]:
        return [table.winner for table in self.tables]


class CorpusContext:
    """Per-corpus shared state: docs, representations, reductions, windows."""

    def __init__(
        self,
        corpus_id: str,
        snapshot: CorpusSnapshot,
        coherence: CoherenceConfig,
        embedder: ExternalEmbedder | None = None,
        hashed_dims: int = 256,
    ):
        self.corpus_id = corpus_id
        self.snapshot = snapshot
        self.docs = preprocess_corpus(snapshot.papers)
        self.coherence = CoherenceEvaluator(
            [d.tokens for d in self.docs], coherence
        )
        self._embedder = embedder
        self._hashed_dims = hashed_dims
        self._representations: dict[str, np.ndarray] = {}
        self._reductions: dict[tuple, np.ndarray] = {}

    def representation(self, tag: str) -> np.ndarray:
        if tag not in self._representations:
            if tag == "tfidf":
                matrix = TfidfVectorizer().fit_transform(self.docs)
            elif tag == "hashed":
                matrix = HashedEmbedder(dims=self._hashed_dims).transform(self.docs)
            elif tag == "external":
                if self._embedder is None:
                    raise LitscopeError(
                        "external representation requires an embedding endpoint"
                    )
                matrix = self._embedder.embed(
                    [" ".join(d.tokens) for d in self.docs]
                )
            else:
                raise LitscopeError(f"unknown representation {tag!r}")
            self._representations[tag] = matrix.values
        return self._representations[tag]

    def reduction(self, tag: str, method: str, n_components: int, seed: int) -> np.ndarray:
        key = (tag, method, n_components, seed)
        if key not in self._reductions:
            X = self.representation(tag)
            n_neighbors = min(15, X.shape[0] - 1)
            cfg = ReductionConfig(
                method=method,
                n_components=min(n_components, X.shape[0] - 1, X.shape[1]),
                umap=UmapParams(n_neighbors=n_neighbors, seed=seed),
            )
            self._reductions[key] = reduce_matrix(X, cfg).values
        return self._reductions[key]


def run_config(context: CorpusContext, config: SweepConfig, top_n: int = 10) -> SweepRecord:
    started = time.perf_counter()
    metrics: dict[str, float | None] = {name: None for name in METRICS}
    error = None
    try:
        reduced = context.reduction(
            config.representation, config.reducer, config.n_components, config.seed
        )
        assignment = cluster_matrix(
            reduced,
            ClusteringConfig(algorithm=config.algorithm, k=config.k, seed=config.seed),
        )
        for name, fn in (
            ("sil", silhouette),
            ("chi", calinski_harabasz),
            ("dbi", davies_bouldin),
        ):
            try:
                metrics[name] = fn(reduced, assignment.labels)
            except MetricUndefinedError:
                metrics[name] = None
        keyword_lists = ctfidf_keywords(context.docs, assignment, top_n=top_n)
        topics = [
            [term for term, _ in kw.keywords]
            for kw in keyword_lists
            if not kw.uncategorized and len(kw.keywords) >= 2
        ]
        if topics:
            metrics["c_npmi"] = context.coherence.npmi(topics).score
            metrics["c_v"] = context.coherence.cv(topics).score
    except LitscopeError as exc:
        error = f"{type(exc).__name__}: {exc}"
        log.warning("config %s failed: %s", config.label(), error)
    return SweepRecord(
        corpus_id=context.corpus_id,
        config=config,
        metrics=metrics,
        runtime=time.perf_counter() - started,
        error=error,
    )


def run_sweep(
    corpora: dict[str, CorpusSnapshot],
    grid: SweepGrid,
    *,
    coherence: CoherenceConfig | None = None,
    embedder: ExternalEmbedder | None = None,
    hashed_dims: int = 256,
    top_n: int = 10,
    workers: int = 1,
) -> SweepResult:
    coherence = coherence or CoherenceConfig()
    configs = enumerate_grid(grid)
    tables = []
    all_records = []
    for corpus_id, snapshot in sorted(corpora.items()):
        context = CorpusContext(
            corpus_id, snapshot, coherence, embedder=embedder, hashed_dims=hashed_dims
        )
        # Reductions are built sequentially so worker threads only run
        # independent clustering configs.
        for config in configs:
            try:
                context.reduction(
                    config.representation,
                    config.reducer,
                    config.n_components,
                    config.seed,
                )
            except LitscopeError:
                pass  # surfaces again per config as a recorded failure
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                records = list(
                    pool.map(lambda c: run_config(context, c, top_n), configs)
                )
        else:
            records = [run_config(context, config, top_n) for config in configs]
        tables.append(rank_aggregate(records))
        all_records.extend(records)
        log.info(
            "corpus %s: winner %s (aggregate %.1f)",
            corpus_id,
            tables[-1].winner.config.label(),
            tables[-1].winner.aggregate,
        )
    return SweepResult(tables=tables, records=all_records)


def write_csv(result: SweepResult, path) -> None:
    """Winner-first CSV per corpus, mirroring the study's summary table."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for table in result.tables:
            for record in table.records:
                config = record.config
                writer.writerow(
                    [
                        table.corpus_id,
                        config.representation,
                        config.reducer,
                        config.n_components,
                        config.k,
                        config.algorithm,
                        _cell(record.metric("chi")),
                        _cell(record.metric("dbi")),
                        _cell(record.metric("sil")),
                        _cell(record.metric("c_v")),
                        _cell(record.metric("c_npmi")),
                        record.aggregate,
                    ]
                )


def _cell(value: float | None) -> str:
    return "" if value is None else f"{value:.6g}"
