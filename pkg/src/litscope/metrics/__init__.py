from .coherence import (
    CoherenceConfig,
    CoherenceEvaluator,
    CoherenceResult,
    WindowStats,
    cv_coherence,
    npmi_coherence,
    npmi_pair,
)
from .intrinsic import (
    SPACE_ORIGINAL,
    SPACE_REDUCED,
    MetricReport,
    calinski_harabasz,
    davies_bouldin,
    silhouette,
)

__all__ = [
    "CoherenceConfig",
    "CoherenceEvaluator",
    "CoherenceResult",
    "MetricReport",
    "SPACE_ORIGINAL",
    "SPACE_REDUCED",
    "WindowStats",
    "calinski_harabasz",
    "cv_coherence",
    "davies_bouldin",
    "npmi_coherence",
    "npmi_pair",
    "silhouette",
]
