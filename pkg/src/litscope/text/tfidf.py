"""Native TF-IDF vectorizer over preprocessed token streams."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin

from ..errors import DegenerateVocabularyError, ParameterError
from ..validation import l2_normalize_rows
from .matrix import NORM_L2, TAG_TFIDF, DocumentMatrix
from .preprocess import PreprocessedDoc


@dataclass(frozen=True)
class TfidfParams:
    """Document-frequency and vocabulary bounds for the vectorizer."""

    min_df: int = 3
    max_df: float = 0.7
    max_features: int = 3000
    ngram_range: tuple[int, int] = (1, 3)

    def __post_init__(self):
        if self.min_df < 1:
            raise ParameterError(f"min_df must be >= 1, got {self.min_df}")
        if not 0.0 < self.max_df <= 1.0:
            raise ParameterError(f"max_df must be in (0, 1], got {self.max_df}")
        if self.max_features < 1:
            raise ParameterError("max_features must be >= 1")
        lo, hi = self.ngram_range
        if not 1 <= lo <= hi:
            raise ParameterError(f"invalid ngram_range {self.ngram_range}")


def iter_ngrams(tokens: list[str], ngram_range: tuple[int, int]):
    lo, hi = ngram_range
    for n in range(lo, hi + 1):
        for i in range(len(tokens) - n + 1):
            yield " ".join(tokens[i : i + n])


class TfidfVectorizer(BaseEstimator, TransformerMixin):
    """TF-IDF with smoothed idf, df bounds, and a frequency-capped vocabulary.

    idf(t) = ln((1 + n) / (1 + df(t))) + 1; rows are L2-normalized.
    Vocabulary keeps the ``max_features`` terms with the highest corpus
    frequency (ties broken lexicographically) whose document frequency
    lies within [min_df, max_df * n]. Columns are sorted lexicographically.
    """

    def __init__(
        self,
        min_df: int = 3,
        max_df: float = 0.7,
        max_features: int = 3000,
        ngram_range: tuple[int, int] = (1, 3),
        stop_words=None,
    ):
        self.min_df = min_df
        self.max_df = max_df
        self.max_features = max_features
        self.ngram_range = ngram_range
        self.stop_words = stop_words

    @property
    def params(self) -> TfidfParams:
        return TfidfParams(
            min_df=self.min_df,
            max_df=self.max_df,
            max_features=self.max_features,
            ngram_range=tuple(self.ngram_range),
        )

    def _doc_terms(self, doc: PreprocessedDoc) -> Counter:
        tokens = doc.tokens
        if self.stop_words:
            tokens = [t for t in tokens if t not in self.stop_words]
        return Counter(iter_ngrams(tokens, tuple(self.ngram_range)))

    def fit(self, docs: list[PreprocessedDoc], y=None):
        params = self.params  # validates
        if len(docs) < 2:
            raise ParameterError("TF-IDF needs at least 2 documents")
        n = len(docs)
        df: Counter = Counter()
        corpus_freq: Counter = Counter()
        per_doc = []
        for doc in docs:
            counts = self._doc_terms(doc)
            per_doc.append(counts)
            df.update(counts.keys())
            corpus_freq.update(counts)
        if not df:
            raise DegenerateVocabularyError(
                "no terms survive tokenization", culprit="empty-tokens"
            )

        ceiling = params.max_df * n
        kept = [t for t in df if params.min_df <= df[t] <= ceiling]
        if not kept:
            culprit = "min_df" if max(df.values()) < params.min_df else "max_df"
            raise DegenerateVocabularyError(
                f"vocabulary empty after document-frequency filtering ({culprit})",
                culprit=culprit,
            )
        kept.sort(key=lambda t: (-corpus_freq[t], t))
        kept = kept[: params.max_features]

        self.vocabulary_ = {term: i for i, term in enumerate(sorted(kept))}
        dfs = np.array(
            [df[t] for t in sorted(kept)], dtype=np.float64
        )
        self.idf_ = np.log((1.0 + n) / (1.0 + dfs)) + 1.0
        self._fit_doc_counts = per_doc
        return self

    def transform(self, docs: list[PreprocessedDoc]) -> DocumentMatrix:
        if not hasattr(self, "vocabulary_"):
            raise ParameterError("vectorizer is not fitted")
        X = np.zeros((len(docs), len(self.vocabulary_)), dtype=np.float64)
        for row, doc in enumerate(docs):
            for term, count in self._doc_terms(doc).items():
                col = self.vocabulary_.get(term)
                if col is not None:
                    X[row, col] = count * self.idf_[col]
        return DocumentMatrix(
            l2_normalize_rows(X), representation_tag=TAG_TFIDF, norm=NORM_L2
        )

    def fit_transform(self, docs: list[PreprocessedDoc], y=None) -> DocumentMatrix:
        self.fit(docs)
        # Reuse the counts gathered during fit.
        X = np.zeros((len(docs), len(self.vocabulary_)), dtype=np.float64)
        for row, counts in enumerate(self._fit_doc_counts):
            for term, count in counts.items():
                col = self.vocabulary_.get(term)
                if col is not None:
                    X[row, col] = count * self.idf_[col]
        return DocumentMatrix(
            l2_normalize_rows(X), representation_tag=TAG_TFIDF, norm=NORM_L2
        )


def fit_tfidf(
    docs: list[PreprocessedDoc], params: TfidfParams, stop_words=None
) -> tuple[dict, DocumentMatrix]:
    """Functional wrapper returning (vocabulary, matrix)."""
    vectorizer = TfidfVectorizer(
        min_df=params.min_df,
        max_df=params.max_df,
        max_features=params.max_features,
        ngram_range=params.ngram_range,
        stop_words=stop_words,
    )
    matrix = vectorizer.fit_transform(docs)
    return vectorizer.vocabulary_, matrix
