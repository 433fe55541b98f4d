"""Dense document-vector matrices fed to reduction and clustering."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

TAG_TFIDF = "tfidf"
TAG_HASHED = "hashed"
TAG_EXTERNAL = "external"
REPRESENTATION_TAGS = (TAG_TFIDF, TAG_HASHED, TAG_EXTERNAL)

NORM_NONE = "none"
NORM_L2 = "l2"


@dataclass
class DocumentMatrix:
    """n x d real matrix of document vectors, row-aligned to a corpus."""

    values: np.ndarray
    representation_tag: str
    norm: str = NORM_NONE

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.float64)
        if self.values.ndim != 2:
            raise ValueError("document matrix must be 2-dimensional")
        if not np.isfinite(self.values).all():
            raise ValueError("document matrix contains NaN/Inf")
        if self.representation_tag not in REPRESENTATION_TAGS:
            raise ValueError(f"unknown representation tag {self.representation_tag!r}")
        if self.norm == NORM_L2:
            lengths = np.linalg.norm(self.values, axis=1)
            nonzero = lengths > 0
            if not np.allclose(lengths[nonzero], 1.0, atol=1e-9):
                raise ValueError("norm=l2 but rows are not unit length")

    @property
    def rows(self) -> int:
        return self.values.shape[0]

    @property
    def dims(self) -> int:
        return self.values.shape[1]
