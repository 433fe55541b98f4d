"""Bundled domain presets for the offline configuration study."""

from __future__ import annotations

import json
from importlib import resources

from ..arxiv.query import QuerySpec

_ORDER = (
    "computer_science",
    "physics",
    "eess",
    "mathematics",
    "statistics",
    "quantitative_biology",
    "quantitative_finance",
    "economics",
)


def load_presets() -> list[dict]:
    """The eight bundled domain presets, each capped at 300 papers."""
    presets = []
    package = resources.files(__package__) / "presets"
    for slug in _ORDER:
        with (package / f"{slug}.json").open("r", encoding="utf-8") as fh:
            presets.append(json.load(fh))
    return presets


def preset_query(preset_id: str) -> QuerySpec:
    for preset in load_presets():
        if preset["id"] == preset_id:
            return QuerySpec.from_dict(preset["query"])
    raise KeyError(f"no preset named {preset_id!r}")
