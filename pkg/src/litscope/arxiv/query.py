"""Query specs and arXiv search-expression construction."""

from __future__ import annotations

from dataclasses import dataclass
from datetime import date

from ..errors import InvalidQueryError

MIN_RESULTS = 20
MAX_RESULTS = 500

SORT_RELEVANCE = "relevance"
SORT_SUBMITTED = "submitted_date"
_SORTS = (SORT_RELEVANCE, SORT_SUBMITTED)


@dataclass(frozen=True)
class QuerySpec:
    """An explicit, reproducible arXiv query.

    ``terms`` are phrases combined conjunctively; each one is matched
    against titles and abstracts. ``category`` may be a bare archive
    (``cs``) or a full code (``cs.AI``). Dates are inclusive and refer to
    submission (published) time.
    """

    terms: tuple[str, ...]
    category: str | None = None
    date_start: date | None = None
    date_end: date | None = None
    sort: str = SORT_RELEVANCE
    max_results: int = 300

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        if not self.terms:
            raise InvalidQueryError("query needs at least one term")
        if any(not t.strip() for t in self.terms):
            raise InvalidQueryError("query terms must be non-empty phrases")
        if not MIN_RESULTS <= self.max_results <= MAX_RESULTS:
            raise InvalidQueryError(
                f"max_results must be within [{MIN_RESULTS}, {MAX_RESULTS}], "
                f"got {self.max_results}"
            )
        if self.sort not in _SORTS:
            raise InvalidQueryError(f"sort must be one of {_SORTS}, got {self.sort!r}")
        if (
            self.date_start is not None
            and self.date_end is not None
            and self.date_start > self.date_end
        ):
            raise InvalidQueryError("date_start must not be after date_end")

    def to_dict(self) -> dict:
        out: dict = {
            "terms": list(self.terms),
            "sort": self.sort,
            "max_results": self.max_results,
        }
        if self.category is not None:
            out["category"] = self.category
        if self.date_start is not None:
            out["date_start"] = self.date_start.isoformat()
        if self.date_end is not None:
            out["date_end"] = self.date_end.isoformat()
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "QuerySpec":
        return cls(
            terms=tuple(data["terms"]),
            category=data.get("category"),
            date_start=_parse_date(data.get("date_start")),
            date_end=_parse_date(data.get("date_end")),
            sort=data.get("sort", SORT_RELEVANCE),
            max_results=int(data.get("max_results", 300)),
        )


def _parse_date(value) -> date | None:
    if value is None:
        return None
    if isinstance(value, date):
        return value
    return date.fromisoformat(value)


def _category_clause(category: str) -> str:
    # A bare archive matches all of its subcategories; full codes verbatim.
    if "." in category:
        return f"cat:{category}"
    return f"cat:{category}.*"


def build_query_string(spec: QuerySpec) -> str:
    """Render the search expression sent as ``search_query``.

    Each term expands to a title-or-abstract disjunction, phrases stay
    quoted, term groups are ANDed, and category / submission-date clauses
    are appended when set. Deterministic for equal specs.
    """
    if not spec.terms:
        raise InvalidQueryError("query needs at least one term")
    groups = [f'(ti:"{term}" OR abs:"{term}")' for term in spec.terms]
    if spec.category is not None:
        groups.append(_category_clause(spec.category))
    if spec.date_start is not None or spec.date_end is not None:
        start = spec.date_start or date(1991, 1, 1)
        end = spec.date_end or date(2999, 12, 31)
        groups.append(
            "submittedDate:[{}0000 TO {}2359]".format(
                start.strftime("%Y%m%d"), end.strftime("%Y%m%d")
            )
        )
    return " AND ".join(groups)
