"""Client for an out-of-process sentence-embedding endpoint.

Wire contract: POST {"texts": [...]} -> {"vectors": [[...], ...],
"dims": int, "model": str}. The endpoint serves a MiniLM-class sentence
model; this package never loads one in-process.
"""

from __future__ import annotations

import json
import urllib.error
import urllib.request
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ..errors import EmbeddingEndpointError, EmbeddingProtocolError, ParameterError
from ..validation import l2_normalize_rows
from .matrix import NORM_L2, TAG_EXTERNAL, DocumentMatrix


@dataclass(frozen=True)
class EmbeddingEndpointConfig:
    url: str
    model_name: str = "all-MiniLM-L6-v2"
    batch_size: int = 32
    timeout: float = 30.0
    auth_token: str | None = None

    def __post_init__(self):
        if self.batch_size < 1:
            raise ParameterError("batch_size must be >= 1")


def _default_post(cfg: EmbeddingEndpointConfig, payload: dict) -> tuple[int, bytes]:
    headers = {"Content-Type": "application/json"}
    if cfg.auth_token:
        headers["Authorization"] = f"Bearer {cfg.auth_token}"
    request = urllib.request.Request(
        cfg.url, data=json.dumps(payload).encode("utf-8"), headers=headers
    )
    try:
        with urllib.request.urlopen(request, timeout=cfg.timeout) as response:
            return response.status, response.read()
    except urllib.error.HTTPError as exc:
        return exc.code, exc.read() or b""
    except (urllib.error.URLError, TimeoutError, OSError) as exc:
        raise EmbeddingEndpointError(f"embedding endpoint unreachable: {exc}") from exc


class ExternalEmbedder:
    """Batched, order-preserving client over the embedding wire contract."""

    def __init__(
        self,
        cfg: EmbeddingEndpointConfig,
        post: Callable[[EmbeddingEndpointConfig, dict], tuple[int, bytes]] | None = None,
    ):
        self.cfg = cfg
        self._post = post or _default_post

    def embed(self, texts: list[str]) -> DocumentMatrix:
        batches = [
            texts[i : i + self.cfg.batch_size]
            for i in range(0, len(texts), self.cfg.batch_size)
        ]
        vectors: list[list[float]] = []
        dims: int | None = None
        for batch in batches:
            status, body = self._post(self.cfg, {"texts": batch})
            if status != 200:
                raise EmbeddingEndpointError(
                    f"embedding endpoint returned HTTP {status}", status=status
                )
            try:
                payload = json.loads(body)
                batch_vectors = payload["vectors"]
            except (json.JSONDecodeError, KeyError, TypeError) as exc:
                raise EmbeddingProtocolError(
                    f"malformed embedding response: {exc}"
                ) from exc
            if len(batch_vectors) != len(batch):
                raise EmbeddingProtocolError(
                    f"endpoint returned {len(batch_vectors)} vectors "
                    f"for {len(batch)} inputs"
                )
            for vector in batch_vectors:
                if dims is None:
                    dims = len(vector)
                elif len(vector) != dims:
                    raise EmbeddingProtocolError(
                        f"vector dimension changed across batches: "
                        f"{len(vector)} != {dims}"
                    )
            vectors.extend(batch_vectors)

        X = np.asarray(vectors, dtype=np.float64)
        if X.size == 0:
            X = X.reshape(0, dims or 0)
        if not np.isfinite(X).all():
            raise EmbeddingProtocolError("endpoint returned non-finite vectors")
        return DocumentMatrix(
            l2_normalize_rows(X), representation_tag=TAG_EXTERNAL, norm=NORM_L2
        )


def embed_external(texts: list[str], cfg: EmbeddingEndpointConfig, post=None) -> DocumentMatrix:
    return ExternalEmbedder(cfg, post=post).embed(texts)
