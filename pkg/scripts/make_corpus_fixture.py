#!/usr/bin/env python3
"""Regenerates the deterministic 60-paper Atom fixture used by the tests.

Four themes with distinct vocabularies and temporal profiles, so the
pipeline has real structure to find. Output is stable across runs.
"""

from __future__ import annotations

import random
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "tests" / "fixtures" / "atom" / "corpus60.xml"

THEMES = [
    {
        "slug": "lm",
        "category": "cs.CL",
        "count": 18,
        "year_weights": {2021: 1, 2022: 2, 2023: 4, 2024: 6, 2025: 5},
        "nouns": [
            "language model", "transformer", "instruction tuning", "prompt",
            "token", "decoder", "attention head", "alignment", "benchmark",
            "reasoning chain", "dialogue agent", "text corpus",
        ],
        "verbs": ["fine-tune", "pretrain", "evaluate", "distill", "align"],
        "title_patterns": [
            "{A} for {B} in Large Language Models",
            "Scaling {A} with {B}",
            "On the {A} of Instruction-Tuned {B}",
        ],
    },
    {
        "slug": "qc",
        "category": "quant-ph",
        "count": 14,
        "year_weights": {2021: 3, 2022: 3, 2023: 3, 2024: 3, 2025: 2},
        "nouns": [
            "qubit", "quantum circuit", "entanglement", "error correction",
            "superconducting cavity", "noise channel", "gate fidelity",
            "variational ansatz", "decoherence", "stabilizer code",
        ],
        "verbs": ["simulate", "calibrate", "entangle", "measure", "stabilize"],
        "title_patterns": [
            "{A} in Noisy {B} Devices",
            "Quantum {A} via {B}",
            "Benchmarking {A} for {B}",
        ],
    },
    {
        "slug": "pf",
        "category": "q-fin.PM",
        "count": 14,
        "year_weights": {2021: 2, 2022: 3, 2023: 3, 2024: 3, 2025: 3},
        "nouns": [
            "portfolio", "risk premium", "asset allocation", "volatility",
            "sharpe ratio", "drawdown", "hedging strategy", "market regime",
            "transaction cost", "factor exposure",
        ],
        "verbs": ["rebalance", "hedge", "optimize", "backtest", "forecast"],
        "title_patterns": [
            "{A} under {B} Constraints",
            "Robust {A} with {B}",
            "Dynamic {A} and {B} in Markets",
        ],
    },
    {
        "slug": "mi",
        "category": "eess.IV",
        "count": 14,
        "year_weights": {2021: 2, 2022: 2, 2023: 4, 2024: 4, 2025: 2},
        "nouns": [
            "segmentation mask", "mri scan", "lesion", "encoder-decoder",
            "annotation", "radiology report", "contrast agent", "organ boundary",
            "voxel", "ct volume",
        ],
        "verbs": ["segment", "register", "denoise", "annotate", "reconstruct"],
        "title_patterns": [
            "{A} for Automated {B} Segmentation",
            "Deep {A} in {B} Imaging",
            "Weakly Supervised {A} with {B}",
        ],
    },
]

SURNAMES = [
    "Alvarez", "Bennett", "Chen", "Dubois", "Eriksson", "Fischer", "Gupta",
    "Haddad", "Ivanova", "Johnson", "Kimura", "Lindqvist", "Moreau", "Novak",
    "Okafor", "Petrov", "Quinn", "Rossi", "Sato", "Tanaka",
]
GIVEN = ["A.", "B.", "C.", "D.", "E.", "F.", "G.", "H.", "J.", "K.", "L.", "M."]


SENTENCE_TEMPLATES = [
    "We {v} the {n1} and examine how the {n2} shapes the {n3}.",
    "Our method can {v} a {n1} while keeping the {n2} stable.",
    "A {n1} is combined with a {n2} to better {v} the {n3}.",
    "Results indicate the {n1} dominates the {n2} in most settings.",
    "To {v} the {n1}, we introduce a new {n2} objective.",
    "The proposed {n1} outperforms a strong {n2} baseline.",
]


def sentence(rng, verbs, nouns):
    template = rng.choice(SENTENCE_TEMPLATES)
    return template.format(
        v=rng.choice(verbs),
        n1=rng.choice(nouns),
        n2=rng.choice(nouns),
        n3=rng.choice(nouns),
    )


def make_entry(rng, theme, serial, year):
    month = rng.randint(1, 12)
    day = rng.randint(1, 28)
    version = 2 if rng.random() < 0.2 else 1
    arxiv_id = f"{year % 100:02d}{month:02d}.{10000 + serial}"
    nouns, verbs = theme["nouns"], theme["verbs"]
    title = rng.choice(theme["title_patterns"]).format(
        A=rng.choice(nouns).title(), B=rng.choice(nouns).title()
    )
    abstract = " ".join(
        [sentence(rng, verbs, nouns) for _ in range(4)]
        + [
            f"Experiments on {rng.randint(3, 40)} datasets show that the "
            f"{rng.choice(nouns)} improves the {rng.choice(nouns)} by "
            f"{rng.randint(2, 35)} percent."
        ]
    )
    authors = "\n".join(
        f"    <author><name>{rng.choice(GIVEN)} {rng.choice(SURNAMES)}</name></author>"
        for _ in range(rng.randint(1, 4))
    )
    published = f"{year}-{month:02d}-{day:02d}T09:{rng.randint(10, 59)}:00Z"
    if version == 1:
        updated = published
    elif year < 2025:
        updated = f"{year + 1}-{rng.randint(1, 12):02d}-{rng.randint(1, 28):02d}T10:00:00Z"
    else:
        updated = f"{year}-12-{rng.randint(day, 28):02d}T10:00:00Z"
    return f"""  <entry>
    <id>http://arxiv.org/abs/{arxiv_id}v{version}</id>
    <updated>{updated}</updated>
    <published>{published}</published>
    <title>{title}</title>
    <summary>{abstract}</summary>
{authors}
    <category term="{theme['category']}" scheme="http://arxiv.org/schemas/atom"/>
    <link rel="alternate" type="text/html" href="http://arxiv.org/abs/{arxiv_id}v{version}"/>
  </entry>"""


def main():
    rng = random.Random(20240613)
    entries = []
    serial = 0
    for theme in THEMES:
        years = [y for y, w in theme["year_weights"].items() for _ in range(w)]
        assert len(years) == theme["count"], theme["slug"]
        for year in years:
            entries.append(make_entry(rng, theme, serial, year))
            serial += 1
    order = list(range(len(entries)))
    rng.shuffle(order)
    body = "\n".join(entries[i] for i in order)
    feed = f"""<?xml version="1.0" encoding="UTF-8"?>
<feed xmlns="http://www.w3.org/2005/Atom" xmlns:opensearch="http://a9.com/-/spec/opensearch/1.1/">
  <title>ArXiv Query Results</title>
  <opensearch:totalResults>{len(entries)}</opensearch:totalResults>
{body}
</feed>
"""
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(feed, encoding="utf-8")
    print(f"wrote {OUT} ({len(entries)} entries)")


if __name__ == "__main__":
    main()
