from .atom import AtomFeed, parse_atom, parse_feed
from .client import (
    ArxivClient,
    FixtureTransport,
    HttpResponse,
    RateLimiter,
    UrllibTransport,
    fixture_key,
)
from .query import QuerySpec, build_query_string
from .records import CorpusSnapshot, PaperRecord, dedupe_latest, load_snapshot

__all__ = [
    "ArxivClient",
    "AtomFeed",
    "CorpusSnapshot",
    "FixtureTransport",
    "HttpResponse",
    "PaperRecord",
    "QuerySpec",
    "RateLimiter",
    "UrllibTransport",
    "build_query_string",
    "dedupe_latest",
    "fixture_key",
    "load_snapshot",
    "parse_atom",
    "parse_feed",
]
