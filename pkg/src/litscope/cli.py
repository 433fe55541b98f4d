"""Command-line interface: explore, sweep, serve."""

from __future__ import annotations

import argparse
import calendar
import json
import logging
import sys
from datetime import date
from pathlib import Path

from .arxiv.client import ArxivClient, FixtureTransport
from .arxiv.query import QuerySpec
from .arxiv.records import load_snapshot
from .errors import LitscopeError, StageError
from .service.config import PipelineConfig
from .service.pipeline import ENV_FIXTURE_DIR, ExplorerService
from .sweep.grid import SweepGrid
from .sweep.harness import run_sweep, write_csv
from .sweep.ranking import component_frequency_default

log = logging.getLogger(__name__)


def _parse_month(value: str, *, end: bool) -> date:
    """YYYY, YYYY-MM, or YYYY-MM-DD; open precision snaps to the window edge."""
    parts = [int(p) for p in value.split("-")]
    if len(parts) == 1:
        year = parts[0]
        return date(year, 12, 31) if end else date(year, 1, 1)
    if len(parts) == 2:
        year, month = parts
        if end:
            return date(year, month, calendar.monthrange(year, month)[1])
        return date(year, month, 1)
    return date(*parts)


def _spec_from_args(args) -> QuerySpec:
    terms = tuple(t.strip() for t in args.terms.split(",") if t.strip())
    return QuerySpec(
        terms=terms,
        category=args.category,
        date_start=_parse_month(args.date_from, end=False) if args.date_from else None,
        date_end=_parse_month(args.date_to, end=True) if args.date_to else None,
        sort=args.sort,
        max_results=args.max_results,
    )


def _config_from_args(args) -> PipelineConfig:
    mode = "automatic" if args.mode in ("auto", "automatic") else "user_controlled"
    overrides: dict = {"mode": mode, "seed": args.seed}
    if args.k is not None:
        overrides["k"] = args.k
    if args.representation:
        overrides["representation"] = args.representation
    if args.embed_url:
        overrides["embedding_url"] = args.embed_url
    if args.embedding_fallback:
        overrides["embedding_fallback"] = True
    overrides["reduction"] = {
        "method": args.reducer,
        "n_components": args.n_components or 10,
    }
    overrides["tfidf"] = {
        "min_df": args.tfidf_min_df,
        "max_df": args.tfidf_max_df,
        "max_features": args.tfidf_max_features,
        "ngram_range": (1, args.tfidf_ngram_max),
    }
    return PipelineConfig.from_dict(overrides)


def cmd_explore(args) -> int:
    spec = _spec_from_args(args)
    cfg = _config_from_args(args)
    client = None
    if args.fixture_dir:
        client = ArxivClient(FixtureTransport(args.fixture_dir))
    service = ExplorerService(client=client, cache_dir=args.cache_dir)
    result = service.explore(spec, cfg, use_cache=not args.no_cache)
    text = json.dumps(result, indent=2, sort_keys=True)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote {args.out} (key {result['key']})")
    else:
        print(text)
    return 0


def cmd_sweep(args) -> int:
    corpora = {}
    for path in args.corpus:
        snapshot = load_snapshot(path)
        corpora[Path(path).stem] = snapshot
    if args.paper_grid:
        grid = SweepGrid.paper_grid(
            representations=tuple(args.representations), seeds=tuple(args.seeds)
        )
    else:
        grid = SweepGrid(
            representations=tuple(args.representations),
            reducers=tuple(args.reducers),
            components=tuple(args.components),
            algorithms=tuple(args.algorithms),
            k_values=tuple(args.k_values),
            seeds=tuple(args.seeds),
        )
    result = run_sweep(corpora, grid, workers=args.workers)
    write_csv(result, args.out)
    default = component_frequency_default(result.winners)
    print(f"wrote {args.out}")
    print("note: SIL/CHI/DBI are computed in the reduced (clustering input) space")
    for table in result.tables:
        winner = table.winner
        print(
            f"{table.corpus_id}: winner {winner.config.label()} "
            f"(aggregate {winner.aggregate:.1f})"
        )
    print(f"component-frequency default: {default.to_dict()}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service.api import create_app

    service = ExplorerService(cache_dir=args.cache)
    app = create_app(service)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="litscope",
        description="Query-time arXiv literature exploration and evaluation",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    explore = sub.add_parser("explore", help="run one exploration query")
    explore.add_argument("--terms", required=True, help="comma-separated phrases")
    explore.add_argument("--category", default=None)
    explore.add_argument("--from", dest="date_from", default=None, metavar="YYYY-MM")
    explore.add_argument("--to", dest="date_to", default=None, metavar="YYYY-MM")
    explore.add_argument(
        "--sort", choices=("relevance", "submitted_date"), default="relevance"
    )
    explore.add_argument("--max-results", type=int, default=300)
    explore.add_argument("--mode", choices=("auto", "automatic", "user"), default="auto")
    explore.add_argument("--k", type=int, default=None)
    explore.add_argument(
        "--representation", choices=("tfidf", "hashed", "external"), default=None
    )
    explore.add_argument("--reducer", choices=("svd", "umap"), default="umap")
    explore.add_argument("--n-components", type=int, default=None)
    explore.add_argument("--tfidf-min-df", type=int, default=3)
    explore.add_argument("--tfidf-max-df", type=float, default=0.7)
    explore.add_argument("--tfidf-max-features", type=int, default=3000)
    explore.add_argument("--tfidf-ngram-max", type=int, default=3)
    explore.add_argument("--embed-url", default=None)
    explore.add_argument("--embedding-fallback", action="store_true")
    explore.add_argument("--seed", type=int, default=0)
    explore.add_argument("--out", default=None)
    explore.add_argument("--cache-dir", default=None)
    explore.add_argument("--no-cache", action="store_true")
    explore.add_argument(
        "--fixture-dir", default=None, help=f"Atom XML dir (or {ENV_FIXTURE_DIR})"
    )
    explore.set_defaults(fn=cmd_explore)

    sweep = sub.add_parser("sweep", help="run the configuration study")
    sweep.add_argument("--corpus", nargs="+", required=True, help="snapshot JSON files")
    sweep.add_argument("--paper-grid", action="store_true")
    sweep.add_argument(
        "--representations", nargs="+", default=["tfidf", "hashed"],
        choices=("tfidf", "hashed", "external"),
    )
    sweep.add_argument("--reducers", nargs="+", default=["svd", "umap"])
    sweep.add_argument("--components", nargs="+", type=int, default=[5, 10, 15])
    sweep.add_argument(
        "--algorithms", nargs="+",
        default=["kmeans", "agglomerative_ward", "fuzzy_cmeans"],
    )
    sweep.add_argument(
        "--k-values", nargs="+", type=int,
        default=[3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 15],
    )
    sweep.add_argument("--seeds", nargs="+", type=int, default=[0])
    sweep.add_argument("--workers", type=int, default=1)
    sweep.add_argument("--out", required=True)
    sweep.set_defaults(fn=cmd_sweep)

    serve = sub.add_parser("serve", help="run the HTTP API")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument("--cache", default=None)
    serve.set_defaults(fn=cmd_serve)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except StageError as exc:
        print(f"error in stage '{exc.stage}': {exc.cause}", file=sys.stderr)
        return 2
    except LitscopeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
