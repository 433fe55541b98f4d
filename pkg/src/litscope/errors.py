"""Exception hierarchy shared across the pipeline.

Every stage raises a subclass of :class:`LitscopeError` so callers (CLI,
HTTP service) can report the failing stage without pattern-matching on
messages.
"""

from __future__ import annotations


class LitscopeError(Exception):
    """Base class for all errors raised by this package."""


class InvalidQueryError(LitscopeError):
    """Query spec violates its invariants (empty terms, bad bounds, ...)."""


class RetrievalError(LitscopeError):
    """Transport failed after retries. Carries the last HTTP status."""

    def __init__(self, message: str, status: int | None = None):
        super().__init__(message)
        self.status = status


class FeedParseError(LitscopeError):
    """Feed bytes are not a well-formed Atom document."""

    def __init__(self, message: str, byte_offset: int | None = None):
        super().__init__(message)
        self.byte_offset = byte_offset


class EmptyDocumentError(LitscopeError):
    """Both title and abstract are empty."""


class DegenerateVocabularyError(LitscopeError):
    """Vocabulary is empty after document-frequency / feature filtering."""

    def __init__(self, message: str, culprit: str):
        super().__init__(message)
        self.culprit = culprit


class EmbeddingEndpointError(LitscopeError):
    """External embedding endpoint unreachable or returned a non-200."""

    def __init__(self, message: str, status: int | None = None):
        super().__init__(message)
        self.status = status


class EmbeddingProtocolError(LitscopeError):
    """Endpoint reachable but its payload violates the wire contract."""


class ParameterError(LitscopeError):
    """An operation was called with out-of-range parameters."""


class DimensionError(ParameterError):
    """Requested dimensionality incompatible with the input matrix."""


class MetricUndefinedError(LitscopeError):
    """A clustering metric has no value for this partition (e.g. k < 2)."""

    def __init__(self, message: str, reason: str = "undefined"):
        super().__init__(message)
        self.reason = reason


class TooFewDocumentsError(LitscopeError):
    """Fewer documents retrieved than the pipeline can meaningfully process."""


class StageError(LitscopeError):
    """Wraps a failure with the name of the pipeline stage that raised it."""

    def __init__(self, stage: str, cause: Exception):
        super().__init__(f"stage '{stage}' failed: {cause}")
        self.stage = stage
        self.cause = cause
