"""UMAP layout: k-NN graph -> fuzzy union -> stochastic cross-entropy descent.

Single-threaded and fully seeded so two runs with the same seed produce
byte-identical layouts. The per-epoch inner loop is JIT-compiled when
numba is importable and falls back to pure Python otherwise.
"""

from __future__ import annotations

import logging

import numpy as np
import scipy.linalg
import scipy.sparse as sp
from scipy.optimize import curve_fit
from scipy.sparse.csgraph import connected_components
from sklearn.base import BaseEstimator, TransformerMixin

from ..errors import ParameterError
from ..validation import check_matrix, check_random_state
from .fuzzy import fuzzy_union
from .neighbors import knn_graph
from .types import METHOD_UMAP, METRIC_COSINE, ReducedMatrix, ReductionConfig

log = logging.getLogger(__name__)

_GRAD_CLIP = 4.0
_INIT_SCALE = 10.0
_INITIAL_ALPHA = 1.0
_LOG_EPS = 1e-12

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is an optional speedup
    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        return wrap if not (args and callable(args[0])) else args[0]


def find_curve_params(min_dist: float, spread: float) -> tuple[float, float]:
    """Least-squares (a, b) so 1/(1 + a t^{2b}) tracks the offset exponential
    that is 1 inside min_dist and decays with the given spread outside it."""
    grid = np.linspace(0.0, spread * 3.0, 300)
    target = np.where(
        grid < min_dist, 1.0, np.exp(-(grid - min_dist) / spread)
    )

    def curve(t, a, b):
        return 1.0 / (1.0 + a * t ** (2.0 * b))

    (a, b), _ = curve_fit(curve, grid, target, p0=(1.0, 1.0), maxfev=10000)
    return float(a), float(b)


def spectral_init(
    union: sp.csr_matrix, n_components: int, rng: np.random.Generator
) -> np.ndarray | None:
    """Eigenvectors of the normalized Laplacian, or None if disconnected."""
    n = union.shape[0]
    n_parts, _ = connected_components(union, directed=False)
    if n_parts > 1 or n_components + 1 > n:
        return None
    degree = np.asarray(union.sum(axis=1)).ravel()
    degree[degree == 0.0] = 1.0
    dinv = 1.0 / np.sqrt(degree)
    laplacian = np.eye(n) - (dinv[:, None] * union.toarray()) * dinv[None, :]
    _, vectors = scipy.linalg.eigh(laplacian)
    coords = vectors[:, 1 : n_components + 1]
    # Eigenvector signs are solver-dependent; pin them.
    anchor = np.argmax(np.abs(coords), axis=0)
    signs = np.sign(coords[anchor, np.arange(coords.shape[1])])
    signs[signs == 0] = 1.0
    coords = coords * signs[None, :]
    peak = np.abs(coords).max()
    if peak == 0.0:
        return None
    coords = coords * (_INIT_SCALE / peak)
    return coords + rng.normal(scale=1e-4, size=coords.shape)


@njit(cache=True)
def _epoch_step(emb, heads, tails, fired, nneg, draws, a, b, alpha):
    dim = emb.shape[1]
    pos = 0
    for idx in range(fired.shape[0]):
        e = fired[idx]
        h = heads[e]
        t = tails[e]
        d2 = 0.0
        for d in range(dim):
            diff = emb[h, d] - emb[t, d]
            d2 += diff * diff
        if d2 > 0.0:
            coeff = (-2.0 * a * b * d2 ** (b - 1.0)) / (a * d2**b + 1.0)
            for d in range(dim):
                g = coeff * (emb[h, d] - emb[t, d])
                if g > _GRAD_CLIP:
                    g = _GRAD_CLIP
                elif g < -_GRAD_CLIP:
                    g = -_GRAD_CLIP
                emb[h, d] += g * alpha
                emb[t, d] -= g * alpha
        for _ in range(nneg[idx]):
            other = draws[pos]
            pos += 1
            if other == h:
                continue
            d2 = 0.0
            for d in range(dim):
                diff = emb[h, d] - emb[other, d]
                d2 += diff * diff
            if d2 > 0.0:
                coeff = (2.0 * b) / ((0.001 + d2) * (a * d2**b + 1.0))
                for d in range(dim):
                    g = coeff * (emb[h, d] - emb[other, d])
                    if g > _GRAD_CLIP:
                        g = _GRAD_CLIP
                    elif g < -_GRAD_CLIP:
                        g = -_GRAD_CLIP
                    emb[h, d] += g * alpha
            else:
                for d in range(dim):
                    emb[h, d] += _GRAD_CLIP * alpha


def _edge_cross_entropy(emb, heads, tails, weights, a, b) -> float:
    diff = emb[heads] - emb[tails]
    d2 = np.einsum("ij,ij->i", diff, diff)
    q = 1.0 / (1.0 + a * np.power(d2, b, where=d2 > 0, out=np.zeros_like(d2)))
    q[d2 == 0.0] = 1.0
    attract = -weights * np.log(q + _LOG_EPS)
    repulse = -(1.0 - weights) * np.log(1.0 - q + _LOG_EPS)
    return float(np.sum(attract + repulse))


class UMAP(BaseEstimator, TransformerMixin):
    def __init__(
        self,
        n_components: int = 10,
        n_neighbors: int = 15,
        min_dist: float = 0.1,
        spread: float = 1.0,
        n_epochs: int = 200,
        negative_sample_rate: int = 5,
        metric: str = METRIC_COSINE,
        seed: int = 0,
    ):
        self.n_components = n_components
        self.n_neighbors = n_neighbors
        self.min_dist = min_dist
        self.spread = spread
        self.n_epochs = n_epochs
        self.negative_sample_rate = negative_sample_rate
        self.metric = metric
        self.seed = seed

    def fit(self, X, y=None):
        self.fit_transform(X)
        return self

    def fit_transform(self, X, y=None) -> np.ndarray:
        X = check_matrix(X, min_rows=3)
        n = X.shape[0]
        if self.n_neighbors < 2:
            raise ParameterError("n_neighbors must be >= 2")
        if n < self.n_neighbors + 1:
            raise ParameterError(
                f"need at least n_neighbors + 1 = {self.n_neighbors + 1} rows, got {n}"
            )
        if self.n_components >= n:
            raise ParameterError("n_components must be < number of rows")
        if not self.min_dist < self.spread:
            raise ParameterError("min_dist must be < spread")

        rng = check_random_state(self.seed)
        graph = knn_graph(X, self.n_neighbors, metric=self.metric)
        union = fuzzy_union(graph)
        self.graph_ = union

        a, b = find_curve_params(self.min_dist, self.spread)
        self.curve_params_ = (a, b)

        embedding = spectral_init(union, self.n_components, rng)
        if embedding is None:
            log.info("union graph disconnected; using seeded Gaussian init")
            embedding = rng.normal(scale=_INIT_SCALE, size=(n, self.n_components))
        embedding = np.ascontiguousarray(embedding, dtype=np.float64)

        coo = union.tocoo()
        weights = coo.data.astype(np.float64)
        heads = coo.row.astype(np.int64)
        tails = coo.col.astype(np.int64)
        if weights.size:
            # Edges too weak to fire within the epoch budget are dropped.
            keep = weights >= weights.max() / float(self.n_epochs)
            heads, tails, weights = heads[keep], tails[keep], weights[keep]
        order = rng.permutation(weights.size)
        heads, tails, weights = heads[order], tails[order], weights[order]

        eps = np.full(weights.size, np.inf)
        if weights.size:
            eps = weights.max() / weights
        epns = eps / float(self.negative_sample_rate)
        next_sample = eps.copy()
        next_negative = epns.copy()

        bound = _INIT_SCALE * self.spread * np.sqrt(n)
        self.loss_history_ = []
        for epoch in range(self.n_epochs):
            alpha = _INITIAL_ALPHA * (1.0 - epoch / float(self.n_epochs))
            fired = np.nonzero(next_sample <= epoch)[0]
            if fired.size:
                nneg = np.floor(
                    (epoch - next_negative[fired]) / epns[fired]
                ).astype(np.int64)
                np.clip(nneg, 0, None, out=nneg)
                draws = rng.integers(0, n, size=int(nneg.sum()), dtype=np.int64)
                _epoch_step(
                    embedding, heads, tails, fired, nneg, draws, a, b, alpha
                )
                next_sample[fired] += eps[fired]
                next_negative[fired] += nneg * epns[fired]
            np.clip(embedding, -bound, bound, out=embedding)
            self.loss_history_.append(
                _edge_cross_entropy(embedding, heads, tails, weights, a, b)
            )

        self.embedding_ = embedding
        return embedding


def umap_embed(X: np.ndarray, cfg: ReductionConfig) -> ReducedMatrix:
    params = cfg.umap
    model = UMAP(
        n_components=cfg.n_components,
        n_neighbors=params.n_neighbors,
        min_dist=params.min_dist,
        spread=params.spread,
        n_epochs=params.n_epochs,
        negative_sample_rate=params.negative_sample_rate,
        metric=params.metric,
        seed=params.seed,
    )
    values = model.fit_transform(X)
    return ReducedMatrix(values, method=METHOD_UMAP, config=cfg.to_dict())
