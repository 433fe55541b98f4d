"""Class-based TF-IDF keyword extraction for cluster labeling.

Each cluster is treated as one concatenated document; a term's score in
cluster c is W(t, c) = tf(t, c) * ln(1 + A / f(t)) with A the average
term count per class and f(t) the term's total count across classes.
"""

from __future__ import annotations

import logging
import math
from collections import Counter
from dataclasses import dataclass

from .cluster.assignment import ClusterAssignment
from .errors import ParameterError
from .stopwords import ENGLISH_STOPWORDS
from .text.preprocess import PreprocessedDoc
from .text.tfidf import iter_ngrams

log = logging.getLogger(__name__)


@dataclass
class ClusterKeywords:
    cluster_id: int
    keywords: list[tuple[str, float]]
    top_n: int
    uncategorized: bool = False

    def to_dict(self) -> dict:
        return {
            "id": self.cluster_id,
            "keywords": [{"term": t, "weight": w} for t, w in self.keywords],
            "uncategorized": self.uncategorized,
        }


def _class_counts(
    docs: list[PreprocessedDoc],
    indices,
    ngram_range: tuple[int, int],
    stop_words,
) -> Counter:
    counts: Counter = Counter()
    for i in indices:
        tokens = docs[i].tokens
        if stop_words:
            tokens = [t for t in tokens if t not in stop_words]
        counts.update(iter_ngrams(tokens, ngram_range))
    return counts


def _top_terms(scores: dict[str, float], top_n: int) -> list[tuple[str, float]]:
    ranked = sorted(scores.items(), key=lambda kv: (-kv[1], kv[0]))
    return [(term, float(weight)) for term, weight in ranked[:top_n]]


def ctfidf_keywords(
    docs: list[PreprocessedDoc],
    assignment: ClusterAssignment,
    top_n: int = 10,
    ngram_range: tuple[int, int] = (1, 2),
    stop_words=ENGLISH_STOPWORDS,
) -> list[ClusterKeywords]:
    """Ranked distinguishing keywords per cluster, noise cluster included.

    The uncategorized group (-1) is excluded from the class statistics
    (A and f) but still receives its own ranked list; ranking ties break
    lexicographically.
    """
    if top_n < 1:
        raise ParameterError("top_n must be >= 1")
    if assignment.n_clusters == 0:
        log.warning("all documents are uncategorized; no keywords extracted")
        return []

    cluster_ids = list(range(assignment.n_clusters))
    per_class = {
        c: _class_counts(docs, assignment.members(c), ngram_range, stop_words)
        for c in cluster_ids
    }
    total: Counter = Counter()
    for counts in per_class.values():
        total.update(counts)
    average_size = sum(sum(c.values()) for c in per_class.values()) / len(per_class)

    results = []
    for cluster in cluster_ids:
        scores = {
            term: tf * math.log(1.0 + average_size / total[term])
            for term, tf in per_class[cluster].items()
        }
        results.append(
            ClusterKeywords(
                cluster_id=cluster,
                keywords=_top_terms(scores, top_n),
                top_n=top_n,
            )
        )

    if assignment.n_noise:
        noise_counts = _class_counts(
            docs, assignment.members(-1), ngram_range, stop_words
        )
        # Noise terms may be absent from the class statistics; fold the
        # noise counts into f for this list only so the factor stays finite.
        scores = {
            term: tf * math.log(1.0 + average_size / (total[term] + tf))
            for term, tf in noise_counts.items()
        }
        results.append(
            ClusterKeywords(
                cluster_id=-1,
                keywords=_top_terms(scores, top_n),
                top_n=top_n,
                uncategorized=True,
            )
        )
    return results
