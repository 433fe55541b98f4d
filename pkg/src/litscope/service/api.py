"""HTTP API over the exploration service."""

from __future__ import annotations

import logging

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from ..arxiv.query import QuerySpec
from ..errors import (
    InvalidQueryError,
    LitscopeError,
    ParameterError,
    RetrievalError,
    StageError,
    TooFewDocumentsError,
)
from ..sweep.presets import load_presets
from .config import PipelineConfig
from .pipeline import ExplorerService

log = logging.getLogger(__name__)


class ExploreRequest(BaseModel):
    query: dict
    config: dict = Field(default_factory=dict)


def build_request(body: ExploreRequest) -> tuple[QuerySpec, PipelineConfig]:
    query = dict(body.query)
    # The UI form carries max_results / sort alongside the run config.
    for key in ("max_results", "sort"):
        if key in body.config and body.config[key] is not None:
            query[key] = body.config[key]
    return QuerySpec.from_dict(query), PipelineConfig.from_dict(body.config)


def create_app(service: ExplorerService | None = None) -> FastAPI:
    service = service or ExplorerService()
    app = FastAPI(title="litscope", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.post("/api/explore")
    def explore(body: ExploreRequest) -> dict:
        try:
            spec, cfg = build_request(body)
        except (InvalidQueryError, ParameterError, KeyError, ValueError) as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        use_cache = bool(body.config.get("cache", True))
        try:
            return service.explore(spec, cfg, use_cache=use_cache)
        except TooFewDocumentsError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        except StageError as exc:
            raise HTTPException(
                status_code=500,
                detail={"stage": exc.stage, "error": str(exc.cause)},
            ) from exc
        except RetrievalError as exc:
            raise HTTPException(
                status_code=502,
                detail={"stage": "fetch", "error": str(exc)},
            ) from exc
        except LitscopeError as exc:
            raise HTTPException(status_code=500, detail=str(exc)) from exc

    @app.get("/api/result/{key}")
    def result(key: str) -> dict:
        payload = service.result(key)
        if payload is None:
            raise HTTPException(status_code=404, detail=f"no result for key {key}")
        return payload

    @app.get("/api/presets")
    def presets() -> list[dict]:
        return load_presets()

    @app.get("/api/health")
    def health() -> dict:
        return {"status": "ok"}

    return app
