"""Density-based automatic clustering with an uncategorized group.

Pipeline: core distances at min_samples -> mutual reachability ->
Prim MST (ties by index) -> single-linkage dendrogram -> condensed tree
pruned at min_cluster_size -> excess-of-mass cluster selection. Points
outside every selected cluster are labeled -1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin

from ..errors import ParameterError
from ..validation import check_matrix
from .assignment import ALGO_HDBSCAN, MODE_AUTOMATIC, ClusterAssignment, canonicalize_labels

_DIST_FLOOR = 1e-12  # keeps lambda = 1/distance finite for duplicates


def default_min_cluster_size(n: int) -> int:
    return max(5, n // 50)


def core_distances(D: np.ndarray, min_samples: int) -> np.ndarray:
    """Distance to the min_samples-th nearest neighbor (self excluded)."""
    n = D.shape[0]
    if min_samples > n - 1:
        raise ParameterError(f"min_samples must be <= n - 1 = {n - 1}")
    sorted_rows = np.sort(D + np.diag(np.full(n, np.inf)), axis=1)
    return sorted_rows[:, min_samples - 1]


def mutual_reachability(D: np.ndarray, core: np.ndarray) -> np.ndarray:
    return np.maximum(np.maximum(core[:, None], core[None, :]), D)


def prim_mst(W: np.ndarray) -> list[tuple[int, int, float]]:
    """Minimum spanning tree edges; argmin ties resolve to the lowest index."""
    n = W.shape[0]
    in_tree = np.zeros(n, dtype=bool)
    in_tree[0] = True
    best = W[0].copy()
    parent = np.zeros(n, dtype=np.int64)
    edges = []
    for _ in range(n - 1):
        candidates = np.where(in_tree, np.inf, best)
        nxt = int(np.argmin(candidates))
        edges.append((int(parent[nxt]), nxt, float(best[nxt])))
        in_tree[nxt] = True
        improve = (~in_tree) & (W[nxt] < best)
        best[improve] = W[nxt][improve]
        parent[improve] = nxt
    return edges


@dataclass
class CondensedTree:
    parents: np.ndarray
    children: np.ndarray
    lambdas: np.ndarray
    sizes: np.ndarray
    root: int


def _single_linkage(edges, n: int):
    """scipy-style merge tree from MST edges sorted by (weight, i, j)."""
    edges = sorted(edges, key=lambda e: (e[2], min(e[0], e[1]), max(e[0], e[1])))
    parent = np.arange(2 * n - 1, dtype=np.int64)

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    children = np.zeros((n - 1, 2), dtype=np.int64)
    heights = np.zeros(n - 1)
    counts = np.ones(2 * n - 1, dtype=np.int64)
    for merge, (a, b, w) in enumerate(edges):
        ra, rb = find(a), find(b)
        node = n + merge
        children[merge] = (ra, rb)
        heights[merge] = w
        counts[node] = counts[ra] + counts[rb]
        parent[ra] = node
        parent[rb] = node
    return children, heights, counts


def condense_tree(children, heights, counts, n: int, min_cluster_size: int) -> CondensedTree:
    """Prune the dendrogram: splits where both sides reach min_cluster_size
    spawn new clusters; smaller sides fall out as points at the split's
    lambda = 1/distance."""
    root_node = 2 * n - 2
    root_cluster = n
    rows: list[tuple[int, int, float, int]] = []
    next_cluster = n + 1
    stack = [(root_node, root_cluster)]

    def leaves_under(node: int):
        out, todo = [], [node]
        while todo:
            current = todo.pop()
            if current < n:
                out.append(current)
            else:
                todo.extend(children[current - n])
        return out

    while stack:
        node, cluster = stack.pop()
        left, right = children[node - n]
        lam = 1.0 / max(heights[node - n], _DIST_FLOOR)
        sides = []
        for child in (left, right):
            size = 1 if child < n else counts[child]
            sides.append((child, int(size)))
        big = [s for s in sides if s[1] >= min_cluster_size]
        if len(big) == 2:
            for child, size in sides:
                rows.append((cluster, next_cluster, lam, size))
                if child >= n:
                    stack.append((child, next_cluster))
                else:  # min_cluster_size == 1 degenerate case
                    rows.append((next_cluster, child, lam, 1))
                next_cluster += 1
        else:
            for child, size in sides:
                if size >= min_cluster_size:
                    if child >= n:
                        stack.append((child, cluster))
                else:
                    for leaf in leaves_under(child):
                        rows.append((cluster, leaf, lam, 1))

    parents = np.array([r[0] for r in rows], dtype=np.int64)
    child_arr = np.array([r[1] for r in rows], dtype=np.int64)
    lambdas = np.array([r[2] for r in rows])
    sizes = np.array([r[3] for r in rows], dtype=np.int64)
    return CondensedTree(parents, child_arr, lambdas, sizes, root=root_cluster)


def cluster_stabilities(tree: CondensedTree, n: int) -> dict[int, float]:
    birth: dict[int, float] = {tree.root: 0.0}
    for parent, child, lam in zip(tree.parents, tree.children, tree.lambdas):
        if child >= n:
            birth[int(child)] = float(lam)
    stability: dict[int, float] = {c: 0.0 for c in birth}
    for parent, lam, size in zip(tree.parents, tree.lambdas, tree.sizes):
        stability[int(parent)] += (float(lam) - birth[int(parent)]) * int(size)
    return stability


def select_clusters_eom(tree: CondensedTree, n: int) -> list[int]:
    """Excess-of-mass: a cluster wins when its stability reaches the summed
    stability of its condensed children; the root is never selectable."""
    stability = cluster_stabilities(tree, n)
    children_of: dict[int, list[int]] = {c: [] for c in stability}
    parent_of: dict[int, int] = {}
    for parent, child in zip(tree.parents, tree.children):
        if child >= n:
            children_of[int(parent)].append(int(child))
            parent_of[int(child)] = int(parent)

    selected: dict[int, bool] = {}
    best: dict[int, float] = {}
    for cluster in sorted(stability, reverse=True):  # children before parents
        subtree = sum(best[c] for c in children_of[cluster])
        own = stability[cluster]
        if cluster != tree.root and (not children_of[cluster] or own >= subtree):
            selected[cluster] = True
            best[cluster] = own
        else:
            selected[cluster] = False
            best[cluster] = max(own, subtree) if cluster != tree.root else subtree

    # Keep only selected clusters with no selected ancestor.
    winners = []
    for cluster, is_sel in selected.items():
        if not is_sel:
            continue
        ancestor = parent_of.get(cluster)
        shadowed = False
        while ancestor is not None:
            if selected.get(ancestor, False):
                shadowed = True
                break
            ancestor = parent_of.get(ancestor)
        if not shadowed:
            winners.append(cluster)
    return sorted(winners)


class HDBSCAN(BaseEstimator, ClusterMixin):
    def __init__(self, min_cluster_size: int | None = None, min_samples: int | None = None):
        self.min_cluster_size = min_cluster_size
        self.min_samples = min_samples

    def fit_predict(self, X, y=None) -> np.ndarray:
        X = check_matrix(X)
        n = X.shape[0]
        mcs = self.min_cluster_size or default_min_cluster_size(n)
        if mcs < 2:
            raise ParameterError("min_cluster_size must be >= 2")
        min_samples = self.min_samples or mcs
        if n < mcs or min_samples > n - 1:
            self.labels_ = np.full(n, -1, dtype=np.int64)
            return self.labels_

        sq = np.sum(X**2, axis=1)
        D = np.sqrt(np.maximum(sq[:, None] + sq[None, :] - 2.0 * (X @ X.T), 0.0))
        core = core_distances(D, min_samples)
        W = mutual_reachability(D, core)
        edges = prim_mst(W)
        children, heights, counts = _single_linkage(edges, n)
        tree = condense_tree(children, heights, counts, n, mcs)
        winners = select_clusters_eom(tree, n)

        labels = np.full(n, -1, dtype=np.int64)
        if winners:
            winner_set = set(winners)
            parent_of_point: dict[int, int] = {}
            parent_of_cluster: dict[int, int] = {}
            for parent, child in zip(tree.parents, tree.children):
                if child < n:
                    parent_of_point[int(child)] = int(parent)
                else:
                    parent_of_cluster[int(child)] = int(parent)
            label_of = {cluster: i for i, cluster in enumerate(winners)}
            for point in range(n):
                cluster = parent_of_point.get(point)
                while cluster is not None:
                    if cluster in winner_set:
                        labels[point] = label_of[cluster]
                        break
                    cluster = parent_of_cluster.get(cluster)
            labels, _ = canonicalize_labels(labels)

        self.labels_ = labels
        return labels


def hdbscan(
    X: np.ndarray,
    min_cluster_size: int | None = None,
    min_samples: int | None = None,
) -> ClusterAssignment:
    model = HDBSCAN(min_cluster_size=min_cluster_size, min_samples=min_samples)
    labels = model.fit_predict(X)
    return ClusterAssignment(labels=labels, mode=MODE_AUTOMATIC, algorithm=ALGO_HDBSCAN)
