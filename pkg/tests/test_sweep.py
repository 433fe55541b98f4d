import json
from pathlib import Path

import pytest

from litscope.errors import ParameterError
from litscope.sweep import (
    SweepConfig,
    SweepGrid,
    SweepRecord,
    component_frequency_default,
    enumerate_grid,
    load_presets,
    rank_aggregate,
)

FIXTURES = Path(__file__).parent / "fixtures"


def record(corpus="c", rep="tfidf", red="svd", comp=5, algo="kmeans", k=3,
           **metrics):
    values = {"chi": None, "dbi": None, "sil": None, "c_v": None, "c_npmi": None}
    values.update(metrics)
    return SweepRecord(
        corpus_id=corpus,
        config=SweepConfig(rep, red, comp, algo, k),
        metrics=values,
    )


def load_winner_records():
    rows = json.loads((FIXTURES / "table2_winners.json").read_text())
    return [
        SweepRecord(
            corpus_id=row["dataset"],
            config=SweepConfig(
                row["representation"], row["reducer"], row["n_components"],
                row["algorithm"], row["k"],
            ),
            metrics={name: row[name] for name in ("chi", "dbi", "sil", "c_v", "c_npmi")},
        )
        for row in rows
    ]


def test_paper_grid_count_single_representation():
    grid = SweepGrid.paper_grid(representations=("tfidf",))
    assert len(enumerate_grid(grid)) == 2 * 3 * 3 * 11  # 198


def test_paper_grid_count_two_representations():
    grid = SweepGrid.paper_grid(representations=("tfidf", "hashed"))
    assert len(enumerate_grid(grid)) == 396


def test_single_point_axes_give_one_config():
    grid = SweepGrid(
        representations=("hashed",), reducers=("svd",), components=(5,),
        algorithms=("kmeans",), k_values=(3,),
    )
    assert len(enumerate_grid(grid)) == 1


def test_enumeration_deterministic_and_lexicographic():
    grid = SweepGrid.paper_grid(representations=("hashed", "tfidf"))
    first = enumerate_grid(grid)
    second = enumerate_grid(grid)
    assert first == second
    assert first == sorted(first)


def test_empty_axis_rejected():
    with pytest.raises(ParameterError):
        SweepGrid(representations=())


def test_rank_aggregate_hand_table():
    # Three configs; orientation: DBI ascending, others descending.
    records = [
        record(rep="tfidf", chi=100.0, dbi=1.0, sil=0.5, c_v=0.4, c_npmi=-0.2),
        record(rep="hashed", chi=200.0, dbi=0.5, sil=0.6, c_v=0.5, c_npmi=-0.1),
        record(rep="external", chi=50.0, dbi=2.0, sil=0.4, c_v=0.3, c_npmi=-0.3),
    ]
    table = rank_aggregate(records)
    by_rep = {r.config.representation: r for r in table.records}
    # hashed is best on every metric: all ranks 1, aggregate 5.
    assert by_rep["hashed"].aggregate == 5.0
    assert by_rep["tfidf"].aggregate == 10.0
    assert by_rep["external"].aggregate == 15.0
    assert table.winner.config.representation == "hashed"


def test_single_record_wins_with_aggregate_five():
    table = rank_aggregate(
        [record(chi=1.0, dbi=1.0, sil=0.1, c_v=0.1, c_npmi=0.0)]
    )
    assert table.winner.aggregate == 5.0


def test_positive_scaling_of_sil_leaves_ranks_unchanged():
    base = [
        record(rep="tfidf", chi=100.0, dbi=1.0, sil=0.5, c_v=0.4, c_npmi=-0.2),
        record(rep="hashed", chi=200.0, dbi=0.5, sil=0.6, c_v=0.5, c_npmi=-0.1),
        record(rep="external", chi=50.0, dbi=2.0, sil=0.4, c_v=0.3, c_npmi=-0.3),
    ]
    scaled = [
        record(rep=r.config.representation, chi=r.metrics["chi"],
               dbi=r.metrics["dbi"], sil=r.metrics["sil"] * 7.5,
               c_v=r.metrics["c_v"], c_npmi=r.metrics["c_npmi"])
        for r in base
    ]
    ranks_base = {
        r.config.representation: r.ranks["sil"]
        for r in rank_aggregate(base).records
    }
    ranks_scaled = {
        r.config.representation: r.ranks["sil"]
        for r in rank_aggregate(scaled).records
    }
    assert ranks_base == ranks_scaled
    assert (
        rank_aggregate(base).winner.config
        == rank_aggregate(scaled).winner.config
    )


def test_aggregate_equals_sum_of_ranks():
    records = [
        record(rep="tfidf", chi=10.0, dbi=3.0, sil=0.2, c_v=0.2, c_npmi=-0.4),
        record(rep="hashed", chi=20.0, dbi=2.0, sil=0.3, c_v=0.1, c_npmi=-0.2),
        record(rep="external", chi=20.0, dbi=1.0, sil=0.1, c_v=0.3, c_npmi=-0.3),
    ]
    table = rank_aggregate(records)
    for rec in table.records:
        assert rec.aggregate == pytest.approx(sum(rec.ranks.values()))


def test_tied_metric_values_share_mean_rank():
    records = [
        record(rep="tfidf", chi=20.0, dbi=1.0, sil=0.5, c_v=0.5, c_npmi=-0.1),
        record(rep="hashed", chi=20.0, dbi=2.0, sil=0.4, c_v=0.4, c_npmi=-0.2),
        record(rep="external", chi=5.0, dbi=3.0, sil=0.3, c_v=0.3, c_npmi=-0.3),
    ]
    table = rank_aggregate(records)
    chi_ranks = sorted(r.ranks["chi"] for r in table.records)
    assert chi_ranks == [1.5, 1.5, 3.0]


def test_sentinel_metrics_rank_last():
    records = [
        record(rep="tfidf", chi=None, dbi=None, sil=None, c_v=None, c_npmi=None),
        record(rep="hashed", chi=1.0, dbi=1.0, sil=0.1, c_v=0.1, c_npmi=-0.5),
        record(rep="external", chi=float("inf"), dbi=0.5, sil=0.2, c_v=0.2,
               c_npmi=-0.4),
    ]
    table = rank_aggregate(records)
    by_rep = {r.config.representation: r for r in table.records}
    assert by_rep["tfidf"].ranks["chi"] == 2.5  # shares last with the inf sentinel
    assert by_rep["external"].ranks["chi"] == 2.5
    assert by_rep["hashed"].ranks["chi"] == 1.0
    assert table.winner.config.representation != "tfidf"


def test_rank_aggregate_invariant_to_input_order():
    records = [
        record(rep="tfidf", chi=10.0, dbi=3.0, sil=0.2, c_v=0.2, c_npmi=-0.4),
        record(rep="hashed", chi=20.0, dbi=2.0, sil=0.3, c_v=0.1, c_npmi=-0.2),
        record(rep="external", chi=30.0, dbi=1.0, sil=0.1, c_v=0.3, c_npmi=-0.3),
    ]
    forward = rank_aggregate(list(records))
    backward = rank_aggregate(list(records[::-1]))
    assert [r.config for r in forward.records] == [r.config for r in backward.records]
    assert forward.winner.config == backward.winner.config


def test_mixed_corpora_rejected():
    with pytest.raises(ParameterError):
        rank_aggregate([record(corpus="a"), record(corpus="b")])


def test_component_frequency_reproduces_study_default():
    winners = load_winner_records()
    default = component_frequency_default(winners)
    assert default.representation == "external"
    assert default.reducer == "umap"
    assert default.n_components == 10
    assert default.algorithm == "agglomerative_ward"


def test_single_winner_returned_verbatim():
    winner = record(rep="hashed", red="umap", comp=15, algo="fuzzy_cmeans",
                    chi=1.0, dbi=1.0, sil=0.5, c_v=0.5, c_npmi=0.0)
    default = component_frequency_default([winner])
    assert default.to_dict() == {
        "representation": "hashed",
        "reducer": "umap",
        "n_components": 15,
        "algorithm": "fuzzy_cmeans",
    }


def test_two_winner_algorithm_tie_broken_by_normalized_metrics():
    # Same everywhere except algorithm; kmeans row dominates every metric,
    # so the tie resolves to kmeans.
    strong = record(corpus="a", rep="hashed", red="umap", comp=10, algo="kmeans",
                    chi=300.0, dbi=0.5, sil=0.7, c_v=0.6, c_npmi=-0.1)
    weak = record(corpus="b", rep="hashed", red="umap", comp=10,
                  algo="agglomerative_ward",
                  chi=100.0, dbi=1.5, sil=0.3, c_v=0.3, c_npmi=-0.3)
    default = component_frequency_default([strong, weak])
    assert default.algorithm == "kmeans"
    # Flip the dominance: the tie must flip with it.
    default_flipped = component_frequency_default(
        [
            record(corpus="a", rep="hashed", red="umap", comp=10, algo="kmeans",
                   chi=100.0, dbi=1.5, sil=0.3, c_v=0.3, c_npmi=-0.3),
            record(corpus="b", rep="hashed", red="umap", comp=10,
                   algo="agglomerative_ward",
                   chi=300.0, dbi=0.5, sil=0.7, c_v=0.6, c_npmi=-0.1),
        ]
    )
    assert default_flipped.algorithm == "agglomerative_ward"


def test_presets_cover_eight_domains_capped_at_300():
    presets = load_presets()
    assert len(presets) == 8
    for preset in presets:
        assert preset["query"]["max_results"] == 300
        assert preset["query"]["sort"] == "relevance"
        assert preset["query"]["terms"]
    ids = [p["id"] for p in presets]
    assert "computer_science" in ids
    assert "quantitative_finance" in ids
