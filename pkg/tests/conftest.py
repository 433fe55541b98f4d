from __future__ import annotations

import shutil
import sys
from datetime import datetime, timezone
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from litscope.arxiv import (
    ArxivClient,
    FixtureTransport,
    QuerySpec,
    build_query_string,
    fixture_key,
)

FIXTURES = Path(__file__).parent / "fixtures"
CORPUS60 = FIXTURES / "atom" / "corpus60.xml"


def make_blobs(centers, points_per_blob, spread, dims, seed=0):
    """Gaussian blobs with known labels."""
    rng = np.random.default_rng(seed)
    rows = []
    labels = []
    for index, center in enumerate(centers):
        rows.append(rng.normal(center, spread, size=(points_per_blob, dims)))
        labels.extend([index] * points_per_blob)
    return np.vstack(rows), np.array(labels)


@pytest.fixture
def blob_data():
    return make_blobs


@pytest.fixture
def corpus60_bytes() -> bytes:
    return CORPUS60.read_bytes()


def fixture_client(tmp_path, spec: QuerySpec, feed_path: Path = CORPUS60, **kwargs):
    """ArxivClient wired to replay `feed_path` for `spec`, with fake time."""
    fdir = tmp_path / "feeds"
    fdir.mkdir(exist_ok=True)
    shutil.copy(feed_path, fdir / f"{fixture_key(build_query_string(spec), 0)}.xml")
    clock = {"now": 0.0}

    def fake_clock():
        clock["now"] += 0.0001
        return clock["now"]

    kwargs.setdefault("clock", fake_clock)
    kwargs.setdefault("sleep", lambda seconds: None)
    kwargs.setdefault(
        "wallclock", lambda: datetime(2026, 1, 15, 12, 0, 0, tzinfo=timezone.utc)
    )
    return ArxivClient(FixtureTransport(fdir), **kwargs)


@pytest.fixture
def corpus60_snapshot(tmp_path):
    spec = QuerySpec(terms=("machine learning",), max_results=100)
    return fixture_client(tmp_path, spec).fetch_corpus(spec)
