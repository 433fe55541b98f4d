"""Deterministic hashed-embedding fallback.

Signed feature hashing of unigrams and bigrams through blake2b, so runs
are byte-identical across platforms without any model server.
"""

from __future__ import annotations

import hashlib

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin

from ..errors import ParameterError
from ..validation import l2_normalize_rows
from .matrix import NORM_L2, TAG_HASHED, DocumentMatrix
from .preprocess import PreprocessedDoc

_HASH_KEY = b"litscope-hashed-v1"


def _hash64(term: str) -> int:
    digest = hashlib.blake2b(
        term.encode("utf-8"), digest_size=8, key=_HASH_KEY
    ).digest()
    return int.from_bytes(digest, "big")


class HashedEmbedder(BaseEstimator, TransformerMixin):
    """Stateless transformer: token stream -> L2-normalized hashed vector."""

    def __init__(self, dims: int = 256):
        self.dims = dims

    def fit(self, docs=None, y=None):
        if self.dims < 8:
            raise ParameterError(f"hashed dims must be >= 8, got {self.dims}")
        return self

    def transform(self, docs: list[PreprocessedDoc]) -> DocumentMatrix:
        self.fit()
        X = np.zeros((len(docs), self.dims), dtype=np.float64)
        for row, doc in enumerate(docs):
            tokens = doc.tokens
            terms = list(tokens)
            terms.extend(
                f"{tokens[i]} {tokens[i + 1]}" for i in range(len(tokens) - 1)
            )
            for term in terms:
                h = _hash64(term)
                column = h % self.dims
                sign = 1.0 if h >> 63 else -1.0
                X[row, column] += sign
        return DocumentMatrix(
            l2_normalize_rows(X), representation_tag=TAG_HASHED, norm=NORM_L2
        )


def embed_hashed(docs: list[PreprocessedDoc], dims: int = 256) -> DocumentMatrix:
    return HashedEmbedder(dims=dims).transform(docs)
