from datetime import date

import pytest

from litscope.arxiv import QuerySpec, build_query_string
from litscope.errors import InvalidQueryError


def test_single_phrase_with_bare_archive():
    spec = QuerySpec(terms=("large language models",), category="cs")
    assert build_query_string(spec) == (
        '(ti:"large language models" OR abs:"large language models")'
        " AND cat:cs.*"
    )


def test_two_terms_combined_conjunctively():
    spec = QuerySpec(terms=("market", "prediction"), category="q-fin")
    assert build_query_string(spec) == (
        '(ti:"market" OR abs:"market")'
        ' AND (ti:"prediction" OR abs:"prediction")'
        " AND cat:q-fin.*"
    )


def test_full_category_code_used_verbatim():
    spec = QuerySpec(terms=("planning",), category="cs.AI")
    assert build_query_string(spec).endswith("AND cat:cs.AI")


def test_empty_terms_rejected():
    with pytest.raises(InvalidQueryError):
        QuerySpec(terms=())


def test_blank_term_rejected():
    with pytest.raises(InvalidQueryError):
        QuerySpec(terms=("ok", "  "))


def test_date_clause_appended():
    spec = QuerySpec(
        terms=("fluid dynamics",),
        date_start=date(2024, 4, 1),
        date_end=date(2026, 4, 30),
    )
    assert (
        "submittedDate:[202404010000 TO 202604302359]" in build_query_string(spec)
    )


def test_date_order_enforced():
    with pytest.raises(InvalidQueryError):
        QuerySpec(
            terms=("x",), date_start=date(2025, 1, 1), date_end=date(2024, 1, 1)
        )


def test_max_results_bounds():
    with pytest.raises(InvalidQueryError):
        QuerySpec(terms=("x",), max_results=19)
    with pytest.raises(InvalidQueryError):
        QuerySpec(terms=("x",), max_results=501)
    QuerySpec(terms=("x",), max_results=20)
    QuerySpec(terms=("x",), max_results=500)


def test_deterministic_for_equal_specs():
    make = lambda: QuerySpec(
        terms=("graph", "spectral methods"), category="math", max_results=40
    )
    assert build_query_string(make()) == build_query_string(make())


def test_roundtrip_through_dict():
    spec = QuerySpec(
        terms=("a b", "c"),
        category="stat",
        date_start=date(2023, 1, 1),
        date_end=date(2024, 6, 30),
        sort="submitted_date",
        max_results=50,
    )
    assert QuerySpec.from_dict(spec.to_dict()) == spec
