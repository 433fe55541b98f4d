"""litscope: query-time arXiv literature exploration.

Retrieval, document representation, dimensionality reduction, clustering,
c-TF-IDF keyword labeling, quality metrics, temporal trends, a
configuration-sweep harness, and an HTTP/CLI front door.
"""

from .arxiv import ArxivClient, CorpusSnapshot, PaperRecord, QuerySpec, build_query_string
from .cluster import (
    HDBSCAN,
    AgglomerativeWard,
    ClusterAssignment,
    ClusteringConfig,
    FuzzyCMeans,
    KMeans,
)
from .labeling import ClusterKeywords, ctfidf_keywords
from .metrics import (
    CoherenceConfig,
    MetricReport,
    calinski_harabasz,
    cv_coherence,
    davies_bouldin,
    npmi_coherence,
    silhouette,
)
from .reduce import UMAP, ReductionConfig, TruncatedSVD
from .service import ExplorerService, PipelineConfig, run_pipeline
from .sweep import SweepGrid, component_frequency_default, enumerate_grid, rank_aggregate
from .text import HashedEmbedder, TfidfParams, TfidfVectorizer, preprocess

__version__ = "0.1.0"

__all__ = [
    "ArxivClient",
    "AgglomerativeWard",
    "ClusterAssignment",
    "ClusterKeywords",
    "ClusteringConfig",
    "CoherenceConfig",
    "CorpusSnapshot",
    "ExplorerService",
    "FuzzyCMeans",
    "HDBSCAN",
    "HashedEmbedder",
    "KMeans",
    "MetricReport",
    "PaperRecord",
    "PipelineConfig",
    "QuerySpec",
    "ReductionConfig",
    "SweepGrid",
    "TfidfParams",
    "TfidfVectorizer",
    "TruncatedSVD",
    "UMAP",
    "build_query_string",
    "calinski_harabasz",
    "component_frequency_default",
    "ctfidf_keywords",
    "cv_coherence",
    "davies_bouldin",
    "enumerate_grid",
    "npmi_coherence",
    "preprocess",
    "rank_aggregate",
    "run_pipeline",
    "silhouette",
]
