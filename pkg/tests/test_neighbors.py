import numpy as np
import pytest

from litscope.errors import ParameterError
from litscope.reduce import knn_graph
from litscope.reduce.fuzzy import fuzzy_union, membership_strengths
from litscope.reduce.neighbors import NeighborGraph


def test_collinear_fixture_neighbors():
    X = np.array([[0.0], [1.0], [3.0]])
    graph = knn_graph(X, 1, metric="euclidean")
    assert graph.indices[:, 0].tolist() == [1, 0, 1]
    assert graph.distances[:, 0].tolist() == [1.0, 1.0, 2.0]
    assert graph.rho.tolist() == [1.0, 1.0, 2.0]


def test_smoothed_cardinality_equation_holds():
    rng = np.random.default_rng(0)
    X = rng.normal(size=(30, 4))
    k = 5
    graph = knn_graph(X, k, metric="euclidean")
    target = np.log2(k)
    for i in range(30):
        gaps = np.maximum(graph.distances[i] - graph.rho[i], 0.0)
        total = np.exp(-gaps / graph.sigma[i]).sum()
        assert total == pytest.approx(target, abs=1e-5)


def test_duplicate_points_rho_zero_no_crash():
    X = np.array([[1.0, 1.0], [1.0, 1.0], [1.0, 1.0], [5.0, 5.0]])
    graph = knn_graph(X, 2, metric="euclidean")
    assert graph.rho[0] == 0.0
    assert graph.rho[1] == 0.0
    assert np.all(graph.sigma > 0)


def test_k_bounds():
    X = np.zeros((3, 2))
    with pytest.raises(ParameterError):
        knn_graph(X, 3)
    with pytest.raises(ParameterError):
        knn_graph(X, 0)


def test_no_self_loops_and_sorted_rows():
    rng = np.random.default_rng(1)
    X = rng.normal(size=(20, 3))
    graph = knn_graph(X, 6, metric="cosine")
    for i in range(20):
        assert i not in graph.indices[i]
        assert np.all(np.diff(graph.distances[i]) >= 0)


def test_cosine_metric_on_duplicated_directions():
    X = np.array([[1.0, 0.0], [2.0, 0.0], [0.0, 3.0]])
    graph = knn_graph(X, 1, metric="cosine")
    # Parallel vectors have cosine distance 0 regardless of magnitude.
    assert graph.indices[0, 0] == 1
    assert graph.distances[0, 0] == pytest.approx(0.0, abs=1e-12)


def make_graph(indices, distances, rho, sigma):
    return NeighborGraph(
        k=indices.shape[1],
        indices=indices,
        distances=distances,
        rho=rho,
        sigma=sigma,
    )


def test_union_tconorm_mutual_pair():
    # Weights engineered to 1 in both directions: 1 + 1 - 1*1 = 1.
    indices = np.array([[1], [0]])
    distances = np.array([[0.5], [0.5]])
    rho = np.array([0.5, 0.5])  # gap 0 -> weight exp(0) = 1
    sigma = np.array([1.0, 1.0])
    union = fuzzy_union(make_graph(indices, distances, rho, sigma))
    assert union[0, 1] == pytest.approx(1.0)
    assert union[1, 0] == pytest.approx(1.0)


def test_union_one_directional_edge():
    import scipy.sparse as sp

    from litscope.reduce.fuzzy import probabilistic_union

    A = sp.csr_matrix(np.array([[0.0, 0.5, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, 0.0]]))
    union = probabilistic_union(A).toarray()
    assert union[0, 1] == pytest.approx(0.5)
    assert union[1, 0] == pytest.approx(0.5)


def test_union_symmetric_bounded_zero_diagonal():
    rng = np.random.default_rng(2)
    X = rng.normal(size=(12, 3))
    union = fuzzy_union(knn_graph(X, 4, metric="euclidean")).toarray()
    assert np.allclose(union, union.T, atol=1e-12)
    assert union.min() >= 0.0
    assert union.max() <= 1.0
    assert np.allclose(np.diag(union), 0.0)
