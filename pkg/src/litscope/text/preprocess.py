"""Title+abstract normalization into lemmatized token streams."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field

from ..errors import EmptyDocumentError
from .lemmatizer import lemmatize, tag_tokens

_URL_RE = re.compile(r"(?:https?://|www\.)\S+")
_MATH_SPAN_RE = re.compile(r"\$[^$]*\$")
_LATEX_CMD_RE = re.compile(r"\\[a-zA-Z]+\*?(?:\[[^\]]*\])?(?:\{[^{}]*\})?")
_NON_ALNUM_RE = re.compile(r"[^a-z0-9]+")


@dataclass
class PreprocessedDoc:
    """One document's normalized view, row-aligned to its corpus."""

    doc_index: int
    raw: str
    tokens: list[str]
    token_counts: Counter = field(default_factory=Counter)

    def __post_init__(self):
        if not self.token_counts:
            self.token_counts = Counter(self.tokens)


def clean_text(text: str) -> str:
    """Lowercase and strip URLs, LaTeX fragments, and non-alphanumerics."""
    text = text.lower()
    text = _URL_RE.sub(" ", text)
    text = _MATH_SPAN_RE.sub(" ", text)
    text = _LATEX_CMD_RE.sub(" ", text)
    text = text.replace("{", " ").replace("}", " ")
    return _NON_ALNUM_RE.sub(" ", text).strip()


def preprocess(title: str, abstract: str, doc_index: int = 0) -> PreprocessedDoc:
    """Concatenate, clean, POS-tag, and lemmatize one paper's text.

    Stopwords are retained here; removal is the vectorizers' and the
    keyword extractor's decision.
    """
    if not title.strip() and not abstract.strip():
        raise EmptyDocumentError("both title and abstract are empty")
    raw = f"{title}. {abstract}"
    words = clean_text(raw).split()
    tags = tag_tokens(words)
    tokens = [lemmatize(word, tag) for word, tag in zip(words, tags)]
    return PreprocessedDoc(doc_index=doc_index, raw=raw, tokens=tokens)


def preprocess_corpus(papers) -> list[PreprocessedDoc]:
    """Preprocess an ordered list of PaperRecord-like objects."""
    return [
        preprocess(paper.title, paper.abstract, doc_index=i)
        for i, paper in enumerate(papers)
    ]
