"""Fuzzy neighborhood graph: directed memberships + probabilistic union."""

from __future__ import annotations

import numpy as np
import scipy.sparse as sp

from .neighbors import NeighborGraph


def membership_strengths(graph: NeighborGraph) -> sp.csr_matrix:
    """Directed weights w_ij = exp(-max(0, d_ij - rho_i) / sigma_i)."""
    n, k = graph.indices.shape
    gaps = np.maximum(graph.distances - graph.rho[:, None], 0.0)
    weights = np.exp(-gaps / graph.sigma[:, None])
    rows = np.repeat(np.arange(n), k)
    matrix = sp.coo_matrix(
        (weights.ravel(), (rows, graph.indices.ravel())), shape=(n, n)
    )
    return matrix.tocsr()


def probabilistic_union(A: sp.spmatrix) -> sp.csr_matrix:
    """Symmetrize by the probabilistic t-conorm W = A + A^T - A o A^T.

    Entries stay in [0, 1], the diagonal is zero, and the result is
    symmetric to machine precision.
    """
    A = A.tocsr()
    At = A.T.tocsr()
    union = (A + At - A.multiply(At)).tocsr()
    union.setdiag(0.0)
    union.eliminate_zeros()
    return union


def fuzzy_union(graph: NeighborGraph) -> sp.csr_matrix:
    return probabilistic_union(membership_strengths(graph))
