"""Paper records, corpus snapshots, and latest-version deduplication."""

from __future__ import annotations

import json
from dataclasses import dataclass
from datetime import datetime, timezone

from .query import QuerySpec

SOURCE_LIVE = "live"
SOURCE_FIXTURE = "fixture"


@dataclass(frozen=True)
class PaperRecord:
    """One arXiv paper, keyed by its versionless identifier."""

    arxiv_id: str
    version: int
    title: str
    abstract: str
    authors: tuple[str, ...]
    categories: tuple[str, ...]
    published: datetime
    updated: datetime
    url: str

    def __post_init__(self):
        object.__setattr__(self, "authors", tuple(self.authors))
        object.__setattr__(self, "categories", tuple(self.categories))
        if not self.arxiv_id:
            raise ValueError("arxiv_id must be non-empty")
        if self.version < 1:
            raise ValueError(f"version must be >= 1, got {self.version}")
        if not self.title.strip():
            raise ValueError(f"{self.arxiv_id}: empty title")
        if not self.abstract.strip():
            raise ValueError(f"{self.arxiv_id}: empty abstract")
        if self.published > self.updated:
            raise ValueError(f"{self.arxiv_id}: published after updated")

    def to_dict(self) -> dict:
        return {
            "arxiv_id": self.arxiv_id,
            "version": self.version,
            "title": self.title,
            "abstract": self.abstract,
            "authors": list(self.authors),
            "categories": list(self.categories),
            "published": _iso(self.published),
            "updated": _iso(self.updated),
            "url": self.url,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PaperRecord":
        return cls(
            arxiv_id=data["arxiv_id"],
            version=int(data["version"]),
            title=data["title"],
            abstract=data["abstract"],
            authors=tuple(data["authors"]),
            categories=tuple(data["categories"]),
            published=_parse_ts(data["published"]),
            updated=_parse_ts(data["updated"]),
            url=data["url"],
        )


@dataclass(frozen=True)
class CorpusSnapshot:
    """A persisted, replayable retrieval: the query plus what it returned."""

    query: QuerySpec
    fetched_at: datetime
    papers: tuple[PaperRecord, ...]
    source: str = SOURCE_LIVE

    def __post_init__(self):
        object.__setattr__(self, "papers", tuple(self.papers))
        ids = [p.arxiv_id for p in self.papers]
        if len(set(ids)) != len(ids):
            raise ValueError("snapshot papers must have pairwise-distinct ids")
        if len(self.papers) > self.query.max_results:
            raise ValueError("snapshot exceeds query.max_results")

    def to_dict(self) -> dict:
        return {
            "query": self.query.to_dict(),
            "fetched_at": _iso(self.fetched_at),
            "source": self.source,
            "papers": [p.to_dict() for p in self.papers],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "CorpusSnapshot":
        return cls(
            query=QuerySpec.from_dict(data["query"]),
            fetched_at=_parse_ts(data["fetched_at"]),
            papers=tuple(PaperRecord.from_dict(p) for p in data["papers"]),
            source=data["source"],
        )

    @classmethod
    def from_json(cls, text: str) -> "CorpusSnapshot":
        return cls.from_dict(json.loads(text))


def load_snapshot(path) -> CorpusSnapshot:
    with open(path, "r", encoding="utf-8") as fh:
        return CorpusSnapshot.from_json(fh.read())


def dedupe_latest(papers) -> list[PaperRecord]:
    """Keep one record per arxiv_id: highest version, ties by latest update.

    Survivors keep the position of their id's first occurrence, so input
    order is preserved modulo the removed duplicates. Idempotent.
    """
    order: list[str] = []
    best: dict[str, PaperRecord] = {}
    for paper in papers:
        current = best.get(paper.arxiv_id)
        if current is None:
            order.append(paper.arxiv_id)
            best[paper.arxiv_id] = paper
        elif (paper.version, paper.updated) > (current.version, current.updated):
            best[paper.arxiv_id] = paper
    return [best[arxiv_id] for arxiv_id in order]


def _iso(dt: datetime) -> str:
    if dt.tzinfo is None:
        dt = dt.replace(tzinfo=timezone.utc)
    return dt.astimezone(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def _parse_ts(value: str) -> datetime:
    if value.endswith("Z"):
        value = value[:-1] + "+00:00"
    dt = datetime.fromisoformat(value)
    if dt.tzinfo is None:
        dt = dt.replace(tzinfo=timezone.utc)
    return dt.astimezone(timezone.utc)
