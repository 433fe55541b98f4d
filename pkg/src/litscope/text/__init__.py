from .external import EmbeddingEndpointConfig, ExternalEmbedder, embed_external
from .hashing import HashedEmbedder, embed_hashed
from .matrix import (
    NORM_L2,
    NORM_NONE,
    TAG_EXTERNAL,
    TAG_HASHED,
    TAG_TFIDF,
    DocumentMatrix,
)
from .preprocess import PreprocessedDoc, clean_text, preprocess, preprocess_corpus
from .tfidf import TfidfParams, TfidfVectorizer, fit_tfidf, iter_ngrams

__all__ = [
    "DocumentMatrix",
    "EmbeddingEndpointConfig",
    "ExternalEmbedder",
    "HashedEmbedder",
    "NORM_L2",
    "NORM_NONE",
    "PreprocessedDoc",
    "TAG_EXTERNAL",
    "TAG_HASHED",
    "TAG_TFIDF",
    "TfidfParams",
    "TfidfVectorizer",
    "clean_text",
    "embed_external",
    "embed_hashed",
    "fit_tfidf",
    "iter_ngrams",
    "preprocess",
    "preprocess_corpus",
]
