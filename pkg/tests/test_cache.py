import json

from conftest import fixture_client
from litscope.arxiv import QuerySpec
from litscope.service import ExplorerService, PipelineConfig, ResultCache, result_key


def make_service(tmp_path, spec):
    client = fixture_client(tmp_path, spec)
    return ExplorerService(client=client, cache_dir=tmp_path / "cache")


def test_second_call_is_a_hit(tmp_path):
    spec = QuerySpec(terms=("machine learning",), max_results=100)
    service = make_service(tmp_path, spec)
    cfg = PipelineConfig.offline_default(seed=7)
    first = service.explore(spec, cfg)
    second = service.explore(spec, cfg)
    assert first["cached"] is False
    assert second["cached"] is True


def test_hit_and_miss_value_identical_apart_from_flag(tmp_path):
    spec = QuerySpec(terms=("machine learning",), max_results=100)
    service = make_service(tmp_path, spec)
    cfg = PipelineConfig.offline_default(seed=7)
    first = service.explore(spec, cfg)
    second = service.explore(spec, cfg)
    first.pop("cached")
    second.pop("cached")
    assert json.dumps(first, sort_keys=True) == json.dumps(second, sort_keys=True)


def test_changed_k_misses(tmp_path):
    spec = QuerySpec(terms=("machine learning",), max_results=100)
    service = make_service(tmp_path, spec)
    service.explore(
        spec, PipelineConfig.offline_default(mode="user_controlled", k=4, seed=7)
    )
    result = service.explore(
        spec, PipelineConfig.offline_default(mode="user_controlled", k=5, seed=7)
    )
    assert result["cached"] is False


def test_no_cache_bypasses(tmp_path):
    spec = QuerySpec(terms=("machine learning",), max_results=100)
    service = make_service(tmp_path, spec)
    cfg = PipelineConfig.offline_default(seed=7)
    service.explore(spec, cfg)
    again = service.explore(spec, cfg, use_cache=False)
    assert again["cached"] is False


def test_corrupt_entry_treated_as_miss_and_evicted(tmp_path):
    spec = QuerySpec(terms=("machine learning",), max_results=100)
    service = make_service(tmp_path, spec)
    cfg = PipelineConfig.offline_default(seed=7)
    first = service.explore(spec, cfg)
    key = first["key"]
    path = tmp_path / "cache" / f"{key}.json"
    path.write_text("{not json", encoding="utf-8")
    refetched = service.explore(spec, cfg)
    assert refetched["cached"] is False
    assert json.loads(path.read_text())["key"] == key  # re-written cleanly


def test_result_lookup_by_key(tmp_path):
    spec = QuerySpec(terms=("machine learning",), max_results=100)
    service = make_service(tmp_path, spec)
    cfg = PipelineConfig.offline_default(seed=7)
    stored = service.explore(spec, cfg)
    fetched = service.result(stored["key"])
    assert fetched is not None
    assert fetched["key"] == stored["key"]
    assert service.result("deadbeef" * 3) is None


def test_ttl_expiry(tmp_path):
    cache = ResultCache(tmp_path / "c", ttl_seconds=0.0)
    cache.put("k", {"v": 1})
    assert cache.get("k") is None  # age > 0 the moment it lands


def test_key_stability_and_sensitivity():
    spec = QuerySpec(terms=("a",), max_results=20)
    cfg = PipelineConfig.offline_default(seed=1)
    k1 = result_key(spec.to_dict(), cfg.to_dict())
    k2 = result_key(spec.to_dict(), cfg.to_dict())
    assert k1 == k2
    k3 = result_key(
        spec.to_dict(), PipelineConfig.offline_default(seed=2).to_dict()
    )
    assert k3 != k1
