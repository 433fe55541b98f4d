"""HTTP client for the arXiv query API with paging, retries, and fixtures."""

from __future__ import annotations

import hashlib
import logging
import time
import urllib.error
import urllib.parse
import urllib.request
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable, Protocol

from ..errors import RetrievalError
from .atom import parse_feed
from .query import QuerySpec, SORT_SUBMITTED, build_query_string
from .records import SOURCE_FIXTURE, SOURCE_LIVE, CorpusSnapshot, dedupe_latest

log = logging.getLogger(__name__)

API_URL = "https://export.arxiv.org/api/query"
PAGE_SIZE = 100
COURTESY_DELAY = 3.0
MAX_RETRIES = 3
BACKOFF_BASE = 1.0


@dataclass
class HttpResponse:
    status: int
    body: bytes


class Transport(Protocol):
    def get(self, url: str) -> HttpResponse: ...


class UrllibTransport:
    """Default live transport over stdlib urllib."""

    def __init__(self, timeout: float = 30.0):
        self.timeout = timeout

    def get(self, url: str) -> HttpResponse:
        request = urllib.request.Request(
            url, headers={"User-Agent": "litscope/0.1 (literature explorer)"}
        )
        try:
            with urllib.request.urlopen(request, timeout=self.timeout) as response:
                return HttpResponse(status=response.status, body=response.read())
        except urllib.error.HTTPError as exc:
            return HttpResponse(status=exc.code, body=exc.read() or b"")


def fixture_key(search_query: str, start: int) -> str:
    """Filename (sans extension) for one page of a fixture query."""
    digest = hashlib.sha256(search_query.encode("utf-8")).hexdigest()[:16]
    return f"{digest}_{start}"


class FixtureTransport:
    """Replays Atom XML pages from a directory, keyed by query hash."""

    def __init__(self, directory):
        self.directory = Path(directory)

    def get(self, url: str) -> HttpResponse:
        params = urllib.parse.parse_qs(urllib.parse.urlsplit(url).query)
        search_query = params.get("search_query", [""])[0]
        start = int(params.get("start", ["0"])[0])
        path = self.directory / f"{fixture_key(search_query, start)}.xml"
        if not path.exists():
            # Past the last prepared page: serve an empty feed, mirroring
            # an exhausted live query.
            if start > 0:
                return HttpResponse(status=200, body=_EMPTY_FEED)
            return HttpResponse(status=404, body=b"")
        return HttpResponse(status=200, body=path.read_bytes())


_EMPTY_FEED = (
    b'<?xml version="1.0" encoding="UTF-8"?>'
    b'<feed xmlns="http://www.w3.org/2005/Atom"></feed>'
)


class RateLimiter:
    """Serializes requests so consecutive calls are >= ``delay`` apart."""

    def __init__(
        self,
        delay: float = COURTESY_DELAY,
        clock: Callable[[], float] = time.monotonic,
        sleep: Callable[[float], None] = time.sleep,
    ):
        self.delay = delay
        self._clock = clock
        self._sleep = sleep
        self._last: float | None = None

    def wait(self) -> None:
        now = self._clock()
        if self._last is not None:
            gap = now - self._last
            if gap < self.delay:
                self._sleep(self.delay - gap)
                now = self._clock()
        self._last = now


class ArxivClient:
    """Fetches corpora from the arXiv query endpoint (or a fixture dir)."""

    def __init__(
        self,
        transport: Transport | None = None,
        *,
        api_url: str = API_URL,
        page_size: int = PAGE_SIZE,
        delay: float = COURTESY_DELAY,
        max_retries: int = MAX_RETRIES,
        clock: Callable[[], float] = time.monotonic,
        sleep: Callable[[float], None] = time.sleep,
        wallclock: Callable[[], datetime] | None = None,
    ):
        self.transport = transport if transport is not None else UrllibTransport()
        self.api_url = api_url
        self.page_size = page_size
        self.max_retries = max_retries
        self.limiter = RateLimiter(delay, clock=clock, sleep=sleep)
        self._sleep = sleep
        self._wallclock = wallclock or (lambda: datetime.now(timezone.utc))
        self.source = (
            SOURCE_FIXTURE if isinstance(self.transport, FixtureTransport) else SOURCE_LIVE
        )

    def page_url(self, search_query: str, start: int, count: int, sort: str) -> str:
        sort_by = "submittedDate" if sort == SORT_SUBMITTED else "relevance"
        params = urllib.parse.urlencode(
            {
                "search_query": search_query,
                "start": start,
                "max_results": count,
                "sortBy": sort_by,
                "sortOrder": "descending",
            }
        )
        return f"{self.api_url}?{params}"

    def _get_with_retries(self, url: str) -> bytes:
        last_status: int | None = None
        for attempt in range(self.max_retries):
            self.limiter.wait()
            try:
                response = self.transport.get(url)
            except Exception as exc:
                last_status = None
                log.warning("transport error on attempt %d: %s", attempt + 1, exc)
            else:
                if response.status == 200:
                    return response.body
                last_status = response.status
                log.warning(
                    "HTTP %d on attempt %d for %s", response.status, attempt + 1, url
                )
            if attempt + 1 < self.max_retries:
                self._sleep(BACKOFF_BASE * 2**attempt)
        raise RetrievalError(
            f"request failed after {self.max_retries} attempts: {url}",
            status=last_status,
        )

    def fetch_corpus(self, spec: QuerySpec) -> CorpusSnapshot:
        """Page through results up to ``spec.max_results`` and snapshot them.

        The feed is deduplicated to the latest version of each paper and
        re-checked against the submission-date window client-side.
        """
        search_query = build_query_string(spec)
        collected = []
        skipped = 0
        start = 0
        while len(collected) < spec.max_results:
            count = min(self.page_size, spec.max_results - len(collected))
            url = self.page_url(search_query, start, count, spec.sort)
            feed = parse_feed(self._get_with_retries(url))
            skipped += feed.skipped
            collected.extend(feed.records)
            start += count
            exhausted = len(feed.records) + feed.skipped < count
            if exhausted or (
                feed.total_results is not None and start >= feed.total_results
            ):
                break
        if skipped:
            log.warning("skipped %d feed entries without usable metadata", skipped)

        papers = dedupe_latest(collected)
        papers = [p for p in papers if self._within_window(spec, p)]
        papers = papers[: spec.max_results]
        return CorpusSnapshot(
            query=spec,
            fetched_at=self._wallclock(),
            papers=tuple(papers),
            source=self.source,
        )

    @staticmethod
    def _within_window(spec: QuerySpec, paper) -> bool:
        day = paper.published.date()
        if spec.date_start is not None and day < spec.date_start:
            return False
        if spec.date_end is not None and day > spec.date_end:
            return False
        return True
