"""Atom feed parsing for the arXiv query API."""

from __future__ import annotations

import re
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from datetime import datetime, timezone

from ..errors import FeedParseError
from .records import PaperRecord

ATOM = "{http://www.w3.org/2005/Atom}"
_VERSION_RE = re.compile(r"v(\d+)$")
_ID_RE = re.compile(r"arxiv\.org/abs/(.+)$")


@dataclass
class AtomFeed:
    """Parsed feed: surviving records plus bookkeeping for skipped entries."""

    records: list[PaperRecord] = field(default_factory=list)
    skipped: int = 0
    total_results: int | None = None


def parse_feed(feed_bytes: bytes) -> AtomFeed:
    """Parse an arXiv Atom feed into records.

    Entries without a usable abstract (or violating record invariants)
    are skipped and counted rather than failing the whole feed.
    """
    try:
        root = ET.fromstring(feed_bytes)
    except ET.ParseError as exc:
        offset = _byte_offset(feed_bytes, exc)
        raise FeedParseError(
            f"feed is not well-formed XML at byte {offset}: {exc}", byte_offset=offset
        ) from exc

    feed = AtomFeed()
    total = root.find(
        "{http://a9.com/-/spec/opensearch/1.1/}totalResults"
    )
    if total is not None and total.text and total.text.strip().isdigit():
        feed.total_results = int(total.text.strip())

    for entry in root.iter(f"{ATOM}entry"):
        try:
            record = _parse_entry(entry)
        except ValueError:
            feed.skipped += 1
            continue
        feed.records.append(record)
    return feed


def parse_atom(feed_bytes: bytes) -> list[PaperRecord]:
    """One PaperRecord per well-formed entry, in feed order."""
    return parse_feed(feed_bytes).records


def _parse_entry(entry: ET.Element) -> PaperRecord:
    raw_id = _text(entry, "id")
    id_match = _ID_RE.search(raw_id)
    versioned = id_match.group(1) if id_match else raw_id
    version_match = _VERSION_RE.search(versioned)
    if version_match:
        version = int(version_match.group(1))
        arxiv_id = versioned[: version_match.start()]
    else:
        version = 1
        arxiv_id = versioned

    title = _collapse(_text(entry, "title"))
    abstract = _collapse(_text(entry, "summary"))
    authors = tuple(
        _collapse(name.text or "")
        for name in entry.findall(f"{ATOM}author/{ATOM}name")
    )
    categories = tuple(
        cat.get("term", "")
        for cat in entry.findall(f"{ATOM}category")
        if cat.get("term")
    )
    url = raw_id
    for link in entry.findall(f"{ATOM}link"):
        if link.get("rel") == "alternate" and link.get("href"):
            url = link.get("href")
            break

    return PaperRecord(
        arxiv_id=arxiv_id,
        version=version,
        title=title,
        abstract=abstract,
        authors=authors,
        categories=categories,
        published=_parse_ts(_text(entry, "published")),
        updated=_parse_ts(_text(entry, "updated")),
        url=url,
    )


def _text(entry: ET.Element, tag: str) -> str:
    node = entry.find(f"{ATOM}{tag}")
    if node is None or node.text is None:
        raise ValueError(f"entry missing <{tag}>")
    return node.text


def _collapse(text: str) -> str:
    return " ".join(text.split())


def _parse_ts(value: str) -> datetime:
    value = value.strip()
    if value.endswith("Z"):
        value = value[:-1] + "+00:00"
    dt = datetime.fromisoformat(value)
    if dt.tzinfo is None:
        dt = dt.replace(tzinfo=timezone.utc)
    return dt.astimezone(timezone.utc)


def _byte_offset(feed_bytes: bytes, exc: ET.ParseError) -> int | None:
    position = getattr(exc, "position", None)
    if not position:
        return None
    line, column = position
    lines = feed_bytes.split(b"\n")
    if line - 1 >= len(lines):
        return len(feed_bytes)
    return sum(len(l) + 1 for l in lines[: line - 1]) + column
