"""Full exploration pipeline: fetch -> preprocess -> represent -> reduce ->
cluster -> label -> metrics -> trends, with stage-level tracing."""

from __future__ import annotations

import logging
import os
import time
from dataclasses import dataclass, field

from ..arxiv.client import ArxivClient, FixtureTransport
from ..arxiv.query import QuerySpec
from ..arxiv.records import CorpusSnapshot
from ..cluster import cluster_matrix, hdbscan
from ..cluster.assignment import (
    MODE_AUTOMATIC,
    MODE_USER,
    ClusterAssignment,
    ClusteringConfig,
)
from ..errors import (
    EmbeddingEndpointError,
    MetricUndefinedError,
    StageError,
    TooFewDocumentsError,
)
from ..labeling import ClusterKeywords, ctfidf_keywords
from ..metrics.coherence import CoherenceEvaluator
from ..metrics.intrinsic import MetricReport, calinski_harabasz, davies_bouldin, silhouette
from ..reduce import reduce_matrix
from ..reduce.types import ReductionConfig, UmapParams
from ..text.external import EmbeddingEndpointConfig, ExternalEmbedder
from ..text.hashing import HashedEmbedder
from ..text.matrix import TAG_EXTERNAL, TAG_HASHED, TAG_TFIDF
from ..text.preprocess import preprocess_corpus
from ..text.tfidf import TfidfVectorizer
from .cache import ResultCache, result_key
from .config import PipelineConfig

log = logging.getLogger(__name__)

MIN_DOCUMENTS = 3

ENV_CACHE_DIR = "ELIOT_CACHE_DIR"
ENV_EMBED_URL = "ELIOT_EMBED_URL"
ENV_FIXTURE_DIR = "ELIOT_FIXTURE_DIR"


@dataclass
class TrendSeries:
    """Per cluster: year -> count; plus one scatter point per paper."""

    series: dict[int, dict[int, int]]
    scatter: list[dict]

    def to_dict(self) -> dict:
        return {
            "series": {
                str(cluster): {str(year): count for year, count in sorted(years.items())}
                for cluster, years in sorted(self.series.items())
            },
            "scatter": self.scatter,
        }


def temporal_series(
    assignment: ClusterAssignment, papers, window: tuple[int, int] | None = None
) -> TrendSeries:
    """Bucket papers per cluster per publication year."""
    years = [paper.published.year for paper in papers]
    if window is None:
        lo, hi = (min(years), max(years)) if years else (0, 0)
    else:
        lo, hi = window
    series: dict[int, dict[int, int]] = {}
    scatter = []
    for cluster in assignment.cluster_ids():
        series[cluster] = {year: 0 for year in range(lo, hi + 1)}
    for index, (paper, label) in enumerate(zip(papers, assignment.labels)):
        cluster = int(label)
        year = paper.published.year
        series[cluster][year] = series[cluster].get(year, 0) + 1
        scatter.append(
            {
                "index": index,
                "date": paper.published.strftime("%Y-%m-%d"),
                "year": year,
                "cluster": cluster,
                "title": paper.title,
            }
        )
    return TrendSeries(series=series, scatter=scatter)


@dataclass
class ExplorationResult:
    key: str
    snapshot: CorpusSnapshot
    config_echo: dict
    assignment: ClusterAssignment
    keywords: list[ClusterKeywords]
    metrics: MetricReport
    trends: TrendSeries
    suggested_k: int
    timing: dict[str, float] = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)
    cached: bool = False

    def to_dict(self) -> dict:
        keyword_map = {kw.cluster_id: kw for kw in self.keywords}
        clusters = []
        for cluster in self.assignment.cluster_ids():
            members = self.assignment.members(cluster)
            papers = []
            for index in members:
                paper = self.snapshot.papers[int(index)]
                papers.append(
                    {
                        "index": int(index),
                        "arxiv_id": paper.arxiv_id,
                        "title": paper.title,
                        "authors": list(paper.authors),
                        "categories": list(paper.categories),
                        "abstract": paper.abstract,
                        "url": paper.url,
                        "published": paper.published.strftime("%Y-%m-%d"),
                        "year": paper.published.year,
                    }
                )
            kw = keyword_map.get(cluster)
            clusters.append(
                {
                    "id": cluster,
                    "size": int(members.size),
                    "uncategorized": cluster == -1,
                    "keywords": kw.to_dict()["keywords"] if kw else [],
                    "years": {
                        str(year): count
                        for year, count in sorted(
                            self.trends.series.get(cluster, {}).items()
                        )
                    },
                    "papers": papers,
                }
            )
        return {
            "key": self.key,
            "cached": self.cached,
            "query": self.snapshot.query.to_dict(),
            "snapshot": {
                "fetched_at": self.snapshot.to_dict()["fetched_at"],
                "source": self.snapshot.source,
                "n_papers": len(self.snapshot.papers),
            },
            "config": self.config_echo,
            "labels": [int(label) for label in self.assignment.labels],
            "n_clusters": self.assignment.n_clusters,
            "n_noise": self.assignment.n_noise,
            "suggested_k": self.suggested_k,
            "clusters": clusters,
            "metrics": self.metrics.to_dict(),
            "trends": self.trends.to_dict(),
            "timing": self.timing,
            "warnings": list(self.warnings),
        }


class _StageTimer:
    def __init__(self):
        self.timing: dict[str, float] = {}

    def run(self, stage: str, fn):
        started = time.perf_counter()
        try:
            value = fn()
        except StageError:
            raise
        except Exception as exc:
            raise StageError(stage, exc) from exc
        self.timing[stage] = round(time.perf_counter() - started, 6)
        return value


def _represent(docs, cfg: PipelineConfig, embed_post, warnings: list[str]):
    tag = cfg.representation
    if tag == TAG_TFIDF:
        vectorizer = TfidfVectorizer(
            min_df=cfg.tfidf.min_df,
            max_df=cfg.tfidf.max_df,
            max_features=cfg.tfidf.max_features,
            ngram_range=cfg.tfidf.ngram_range,
        )
        return vectorizer.fit_transform(docs), TAG_TFIDF
    if tag == TAG_HASHED:
        return HashedEmbedder(dims=cfg.hashed_dims).transform(docs), TAG_HASHED
    url = cfg.embedding_url or os.environ.get(ENV_EMBED_URL)
    if url is None:
        if cfg.embedding_fallback:
            warnings.append("no embedding endpoint configured; fell back to hashed")
            return HashedEmbedder(dims=cfg.hashed_dims).transform(docs), TAG_HASHED
        raise EmbeddingEndpointError(
            "external representation requires an embedding endpoint "
            f"(set {ENV_EMBED_URL} or embedding_url)"
        )
    embedder = ExternalEmbedder(EmbeddingEndpointConfig(url=url), post=embed_post)
    texts = [" ".join(doc.tokens) for doc in docs]
    try:
        return embedder.embed(texts), TAG_EXTERNAL
    except EmbeddingEndpointError:
        if not cfg.embedding_fallback:
            raise
        warnings.append("embedding endpoint failed; fell back to hashed")
        return HashedEmbedder(dims=cfg.hashed_dims).transform(docs), TAG_HASHED


def run_pipeline(
    snapshot: CorpusSnapshot,
    cfg: PipelineConfig,
    *,
    embed_post=None,
    key: str | None = None,
) -> ExplorationResult:
    """Run every stage on a snapshot; deterministic given (snapshot, seed)."""
    if len(snapshot.papers) < MIN_DOCUMENTS:
        raise TooFewDocumentsError(
            f"need at least {MIN_DOCUMENTS} papers, got {len(snapshot.papers)}"
        )
    timer = _StageTimer()
    warnings: list[str] = []
    n = len(snapshot.papers)

    docs = timer.run("preprocess", lambda: preprocess_corpus(snapshot.papers))
    matrix, representation_used = timer.run(
        "represent", lambda: _represent(docs, cfg, embed_post, warnings)
    )

    n_components = min(
        cfg.reduction.n_components, n - 1, matrix.values.shape[1]
    )
    n_neighbors = min(cfg.reduction.umap.n_neighbors, n - 1)
    reduction_cfg = ReductionConfig(
        method=cfg.reduction.method,
        n_components=n_components,
        umap=UmapParams(
            n_neighbors=n_neighbors,
            min_dist=cfg.reduction.umap.min_dist,
            spread=cfg.reduction.umap.spread,
            n_epochs=cfg.reduction.umap.n_epochs,
            negative_sample_rate=cfg.reduction.umap.negative_sample_rate,
            metric=cfg.reduction.umap.metric,
            seed=cfg.seed,
        ),
    )
    reduced = timer.run("reduce", lambda: reduce_matrix(matrix, reduction_cfg))

    clustering_cfg = ClusteringConfig(
        algorithm=cfg.effective_algorithm,
        k=cfg.k if cfg.mode == MODE_USER else None,
        fuzzifier=cfg.fuzzifier,
        min_cluster_size=cfg.min_cluster_size,
        min_samples=cfg.min_samples,
        seed=cfg.seed,
    )
    assignment = timer.run("cluster", lambda: cluster_matrix(reduced, clustering_cfg))

    if cfg.mode == MODE_AUTOMATIC:
        suggested_k = assignment.n_clusters
        timer.timing["suggest"] = 0.0
    else:
        suggestion = timer.run(
            "suggest",
            lambda: hdbscan(
                reduced.values,
                min_cluster_size=cfg.min_cluster_size,
                min_samples=cfg.min_samples,
            ),
        )
        suggested_k = suggestion.n_clusters

    keywords = timer.run(
        "label", lambda: ctfidf_keywords(docs, assignment, top_n=cfg.top_n)
    )

    def compute_metrics() -> MetricReport:
        report = MetricReport(
            n_clusters=assignment.n_clusters,
            n_noise=assignment.n_noise,
            space="reduced",
        )
        for name, fn in (
            ("sil", silhouette),
            ("chi", calinski_harabasz),
            ("dbi", davies_bouldin),
        ):
            try:
                setattr(report, name, fn(reduced.values, assignment.labels))
            except MetricUndefinedError as exc:
                report.reasons[name] = exc.reason
        topics = [
            [term for term, _ in kw.keywords]
            for kw in keywords
            if not kw.uncategorized and len(kw.keywords) >= 2
        ]
        if topics:
            evaluator = CoherenceEvaluator([d.tokens for d in docs], cfg.coherence)
            npmi = evaluator.npmi(topics)
            cv = evaluator.cv(topics)
            report.c_npmi = npmi.score
            report.c_v = cv.score
            if npmi.score is None:
                report.reasons["c_npmi"] = "no-scorable-pairs"
            if cv.score is None:
                report.reasons["c_v"] = "no-scorable-pairs"
            if npmi.missing_terms:
                report.reasons.setdefault(
                    "missing_terms", npmi.missing_terms
                )
        else:
            report.reasons["c_npmi"] = "no-topics"
            report.reasons["c_v"] = "no-topics"
        return report

    metrics = timer.run("metrics", compute_metrics)

    window = None
    query = snapshot.query
    if query.date_start is not None and query.date_end is not None:
        window = (query.date_start.year, query.date_end.year)
    trends = timer.run(
        "trends", lambda: temporal_series(assignment, snapshot.papers, window)
    )

    config_echo = cfg.to_dict()
    config_echo["effective"] = {
        "representation_used": representation_used,
        "representation_input": "lemmatized_tokens",
        "algorithm": cfg.effective_algorithm,
        "n_components": n_components,
        "n_neighbors": n_neighbors,
    }
    return ExplorationResult(
        key=key or result_key(snapshot.query.to_dict(), cfg.to_dict()),
        snapshot=snapshot,
        config_echo=config_echo,
        assignment=assignment,
        keywords=keywords,
        metrics=metrics,
        trends=trends,
        suggested_k=suggested_k,
        timing=timer.timing,
        warnings=warnings,
    )


class ExplorerService:
    """Ties the arXiv client, pipeline, and result cache together."""

    def __init__(
        self,
        client: ArxivClient | None = None,
        cache_dir=None,
        ttl_seconds: float | None = None,
        embed_post=None,
    ):
        if client is None:
            fixture_dir = os.environ.get(ENV_FIXTURE_DIR)
            transport = FixtureTransport(fixture_dir) if fixture_dir else None
            client = ArxivClient(transport)
        self.client = client
        cache_dir = cache_dir or os.environ.get(ENV_CACHE_DIR)
        self.cache = ResultCache(cache_dir, ttl_seconds) if cache_dir else None
        self.embed_post = embed_post

    def explore(
        self, spec: QuerySpec, cfg: PipelineConfig, use_cache: bool = True
    ) -> dict:
        key = result_key(spec.to_dict(), cfg.to_dict())
        if use_cache and self.cache is not None:
            hit = self.cache.get(key)
            if hit is not None:
                return {**hit, "cached": True}
        started = time.perf_counter()
        snapshot = self.client.fetch_corpus(spec)
        fetch_time = round(time.perf_counter() - started, 6)
        result = run_pipeline(snapshot, cfg, embed_post=self.embed_post, key=key)
        result.timing = {"fetch": fetch_time, **result.timing}
        payload = result.to_dict()
        if self.cache is not None:
            self.cache.put(key, payload)
        return payload

    def cached_lookup(self, spec: QuerySpec, cfg: PipelineConfig) -> dict | None:
        if self.cache is None:
            return None
        hit = self.cache.get(result_key(spec.to_dict(), cfg.to_dict()))
        return {**hit, "cached": True} if hit is not None else None

    def result(self, key: str) -> dict | None:
        return self.cache.get(key) if self.cache is not None else None
