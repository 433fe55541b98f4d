"""Sliding-window topic coherence: pairwise NPMI and indirect C_V.

Window statistics depend only on the corpus and the window width, so an
evaluator can be shared across many clusterings of the same corpus.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import ParameterError

NPMI_WINDOW = 10
CV_WINDOW = 110
EPSILON = 1e-12


@dataclass(frozen=True)
class CoherenceConfig:
    top_n: int = 10
    window_npmi: int = NPMI_WINDOW
    window_cv: int = CV_WINDOW
    epsilon: float = EPSILON

    def __post_init__(self):
        if self.window_npmi < 1 or self.window_cv < 1:
            raise ParameterError("window widths must be >= 1")
        if self.epsilon <= 0:
            raise ParameterError("epsilon must be > 0")

    def to_dict(self) -> dict:
        return {
            "top_n": self.top_n,
            "window_npmi": self.window_npmi,
            "window_cv": self.window_cv,
            "epsilon": self.epsilon,
        }


class WindowStats:
    """Boolean word-occurrence vectors over all sliding windows of a corpus.

    Documents shorter than the width contribute a single window; word
    vectors are built lazily and cached.
    """

    def __init__(self, docs: list[list[str]], width: int):
        self.width = width
        self._doc_positions: list[dict[str, list[int]]] = []
        self._doc_windows: list[int] = []
        self._offsets: list[int] = []
        total = 0
        for tokens in docs:
            length = len(tokens)
            n_win = max(1, length - width + 1) if length else 0
            positions: dict[str, list[int]] = {}
            for i, token in enumerate(tokens):
                positions.setdefault(token, []).append(i)
            self._doc_positions.append(positions)
            self._doc_windows.append(n_win)
            self._offsets.append(total)
            total += n_win
        self.n_windows = total
        self._vectors: dict[str, np.ndarray] = {}

    def vector(self, word: str) -> np.ndarray:
        cached = self._vectors.get(word)
        if cached is not None:
            return cached
        v = np.zeros(self.n_windows, dtype=bool)
        for positions, n_win, offset in zip(
            self._doc_positions, self._doc_windows, self._offsets
        ):
            occurrences = positions.get(word)
            if not occurrences or n_win == 0:
                continue
            for p in occurrences:
                lo = max(0, p - self.width + 1)
                hi = min(p, n_win - 1)
                v[offset + lo : offset + hi + 1] = True
        self._vectors[word] = v
        return v

    def probability(self, word: str) -> float:
        if self.n_windows == 0:
            return 0.0
        return float(self.vector(word).sum()) / self.n_windows

    def joint_probability(self, w1: str, w2: str) -> float:
        if self.n_windows == 0:
            return 0.0
        joint = np.count_nonzero(self.vector(w1) & self.vector(w2))
        return float(joint) / self.n_windows

    def present(self, word: str) -> bool:
        return self.probability(word) > 0.0


def npmi_pair(stats: WindowStats, w1: str, w2: str, epsilon: float) -> float:
    """NPMI in [-1, 1]; a never-co-occurring pair is -1 by convention."""
    p1, p2 = stats.probability(w1), stats.probability(w2)
    joint = stats.joint_probability(w1, w2)
    if joint == 0.0:
        return -1.0
    value = np.log((joint + epsilon) / (p1 * p2)) / -np.log(joint + epsilon)
    return float(np.clip(value, -1.0, 1.0))


@dataclass
class CoherenceResult:
    score: float | None
    missing_terms: int
    topics_scored: int


class CoherenceEvaluator:
    """Shares window statistics across repeated topic evaluations."""

    def __init__(self, docs: list[list[str]], cfg: CoherenceConfig | None = None):
        self.cfg = cfg or CoherenceConfig()
        self._npmi_stats = WindowStats(docs, self.cfg.window_npmi)
        self._cv_stats = WindowStats(docs, self.cfg.window_cv)

    def npmi(self, topics: list[list[str]]) -> CoherenceResult:
        cfg = self.cfg
        stats = self._npmi_stats
        missing = 0
        topic_scores = []
        for topic in topics:
            words = topic[: cfg.top_n]
            if len(words) < 2:
                raise ParameterError("each topic needs at least 2 words")
            pair_scores = []
            for i in range(len(words)):
                for j in range(i + 1, len(words)):
                    if not stats.present(words[i]) or not stats.present(words[j]):
                        missing += 1
                        continue
                    pair_scores.append(
                        npmi_pair(stats, words[i], words[j], cfg.epsilon)
                    )
            if pair_scores:
                topic_scores.append(float(np.mean(pair_scores)))
        score = float(np.mean(topic_scores)) if topic_scores else None
        return CoherenceResult(score, missing, len(topic_scores))

    def cv(self, topics: list[list[str]]) -> CoherenceResult:
        cfg = self.cfg
        stats = self._cv_stats
        missing = 0
        topic_scores = []
        for topic in topics:
            words = topic[: cfg.top_n]
            if len(words) < 2:
                raise ParameterError("each topic needs at least 2 words")
            kept = [w for w in words if stats.present(w)]
            missing += len(words) - len(kept)
            if len(kept) < 2:
                continue
            vectors = np.array(
                [
                    [npmi_pair(stats, w, other, cfg.epsilon) for other in kept]
                    for w in kept
                ]
            )
            reference = vectors.sum(axis=0)
            ref_norm = np.linalg.norm(reference)
            sims = []
            for row in vectors:
                norm = np.linalg.norm(row)
                if norm == 0.0 or ref_norm == 0.0:
                    sims.append(0.0)
                else:
                    sims.append(float(row @ reference / (norm * ref_norm)))
            topic_scores.append(float(np.mean(sims)))
        score = float(np.mean(topic_scores)) if topic_scores else None
        return CoherenceResult(score, missing, len(topic_scores))


def npmi_coherence(
    topics: list[list[str]], docs: list[list[str]], cfg: CoherenceConfig | None = None
) -> float:
    result = CoherenceEvaluator(docs, cfg).npmi(topics)
    if result.score is None:
        raise ParameterError("no topic had a scorable word pair")
    return result.score


def cv_coherence(
    topics: list[list[str]], docs: list[list[str]], cfg: CoherenceConfig | None = None
) -> float:
    result = CoherenceEvaluator(docs, cfg).cv(topics)
    if result.score is None:
        raise ParameterError("no topic had enough in-corpus words")
    return result.score
