import json
from datetime import datetime, timezone

import numpy as np
import pytest

from conftest import fixture_client
from litscope.arxiv import CorpusSnapshot, QuerySpec
from litscope.errors import ParameterError, StageError, TooFewDocumentsError
from litscope.service import PipelineConfig, run_pipeline, temporal_series
from litscope.cluster.assignment import ClusterAssignment
from test_records import paper


def strip_volatile(result: dict) -> dict:
    out = dict(result)
    out.pop("timing")
    return out


@pytest.fixture(scope="module")
def snapshot(tmp_path_factory):
    spec = QuerySpec(terms=("machine learning",), max_results=100)
    client = fixture_client(tmp_path_factory.mktemp("feeds"), spec)
    return client.fetch_corpus(spec)


def test_two_runs_value_identical(snapshot):
    cfg = PipelineConfig.offline_default(seed=7)
    a = strip_volatile(run_pipeline(snapshot, cfg).to_dict())
    b = strip_volatile(run_pipeline(snapshot, cfg).to_dict())
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_automatic_mode_totality(snapshot):
    cfg = PipelineConfig.offline_default(mode="automatic", seed=7)
    result = run_pipeline(snapshot, cfg)
    data = result.to_dict()
    seen = sorted(
        paper_row["index"] for tab in data["clusters"] for paper_row in tab["papers"]
    )
    assert seen == list(range(60))  # every paper in exactly one tab
    assert sum(tab["size"] for tab in data["clusters"]) == 60


def test_user_controlled_k5_gives_exactly_five_tabs(snapshot):
    cfg = PipelineConfig.offline_default(mode="user_controlled", k=5, seed=7)
    data = run_pipeline(snapshot, cfg).to_dict()
    assert len(data["clusters"]) == 5
    assert all(not tab["uncategorized"] for tab in data["clusters"])
    assert data["n_noise"] == 0


def test_trend_conservation(snapshot):
    cfg = PipelineConfig.offline_default(seed=7)
    data = run_pipeline(snapshot, cfg).to_dict()
    total = sum(
        count
        for years in data["trends"]["series"].values()
        for count in years.values()
    )
    assert total == 60
    assert len(data["trends"]["scatter"]) == 60


def test_config_echo_changes_when_a_knob_changes(snapshot):
    base = run_pipeline(
        snapshot, PipelineConfig.offline_default(seed=7)
    ).to_dict()
    changed = run_pipeline(
        snapshot,
        PipelineConfig.offline_default(seed=7).with_overrides(top_n=7),
    ).to_dict()
    assert base["config"] != changed["config"]
    assert changed["config"]["top_n"] == 7


def test_suggested_k_matches_automatic_cluster_count(snapshot):
    auto = run_pipeline(snapshot, PipelineConfig.offline_default(seed=7))
    user = run_pipeline(
        snapshot,
        PipelineConfig.offline_default(mode="user_controlled", k=6, seed=7),
    )
    assert auto.suggested_k == auto.assignment.n_clusters
    assert user.suggested_k == auto.assignment.n_clusters


def test_too_few_documents(snapshot):
    spec = QuerySpec(terms=("x",), max_results=20)
    tiny = CorpusSnapshot(
        query=spec,
        fetched_at=datetime(2026, 1, 1, tzinfo=timezone.utc),
        papers=snapshot.papers[:2],
        source="fixture",
    )
    with pytest.raises(TooFewDocumentsError):
        run_pipeline(tiny, PipelineConfig.offline_default())


def test_stage_error_carries_stage_name(snapshot):
    # External representation with no endpoint and no fallback fails in
    # the represent stage.
    cfg = PipelineConfig(representation="external", seed=0)
    with pytest.raises(StageError) as excinfo:
        run_pipeline(snapshot, cfg)
    assert excinfo.value.stage == "represent"


def test_external_falls_back_to_hashed_when_enabled(snapshot):
    cfg = PipelineConfig(
        representation="external", embedding_fallback=True, seed=7
    )
    result = run_pipeline(snapshot, cfg)
    assert result.config_echo["effective"]["representation_used"] == "hashed"
    assert result.warnings


def test_external_representation_via_stub_endpoint(snapshot):
    rng = np.random.default_rng(0)
    table = {}

    def post(cfg, payload):
        vectors = []
        for text in payload["texts"]:
            if text not in table:
                table[text] = rng.normal(size=16).tolist()
            vectors.append(table[text])
        return 200, json.dumps(
            {"vectors": vectors, "dims": 16, "model": "stub"}
        ).encode()

    cfg = PipelineConfig(
        representation="external", embedding_url="http://stub", seed=7
    )
    result = run_pipeline(snapshot, cfg, embed_post=post)
    assert result.config_echo["effective"]["representation_used"] == "external"
    assert result.assignment.labels.shape == (60,)


def test_user_mode_requires_k():
    with pytest.raises(ParameterError):
        PipelineConfig(mode="user_controlled")


def test_temporal_series_counting():
    papers = [
        paper("A", 1), paper("B", 1), paper("C", 1),
    ]
    # Years: all 2024 by construction in test_records.paper.
    assignment = ClusterAssignment(
        labels=np.array([0, 0, 1]), mode="user_controlled", algorithm="kmeans"
    )
    trends = temporal_series(assignment, papers)
    assert trends.series[0] == {2024: 2}
    assert trends.series[1] == {2024: 1}
    assert len(trends.scatter) == 3


def test_temporal_series_all_noise():
    papers = [paper("A", 1), paper("B", 1)]
    assignment = ClusterAssignment(
        labels=np.array([-1, -1]), mode="automatic", algorithm="hdbscan"
    )
    trends = temporal_series(assignment, papers)
    assert set(trends.series) == {-1}
    assert sum(trends.series[-1].values()) == 2


def test_temporal_series_conservation_on_random_fixtures():
    rng = np.random.default_rng(1)
    papers = [paper(f"P{i}", 1) for i in range(15)]
    labels = rng.integers(0, 3, size=15)
    labels[:3] = [0, 1, 2]
    assignment = ClusterAssignment(
        labels=labels, mode="user_controlled", algorithm="kmeans"
    )
    trends = temporal_series(assignment, papers)
    total = sum(count for years in trends.series.values() for count in years.values())
    assert total == 15


def test_config_roundtrip():
    cfg = PipelineConfig.offline_default(mode="user_controlled", k=4, seed=3)
    assert PipelineConfig.from_dict(cfg.to_dict()) == cfg
