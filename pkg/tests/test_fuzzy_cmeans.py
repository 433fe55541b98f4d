import numpy as np
import pytest

from litscope.cluster import FuzzyCMeans, fuzzy_cmeans
from litscope.cluster.fuzzy_cmeans import fcm_objective, update_memberships
from litscope.errors import ParameterError
from oracles import adjusted_rand_index


def test_point_at_centroid_gets_crisp_membership():
    centers = np.array([[0.0, 0.0], [5.0, 5.0]])
    X = np.array([[0.0, 0.0], [2.0, 2.0]])
    U = update_memberships(X, centers, m=2.0)
    assert U[0, 0] == pytest.approx(1.0)
    assert U[0, 1] == pytest.approx(0.0)
    assert 0.0 < U[1, 0] < 1.0
    assert U.sum(axis=1) == pytest.approx([1.0, 1.0])


def test_large_fuzzifier_flattens_memberships(blob_data):
    X, _ = blob_data([(0.0,), (10.0,)], 8, 0.5, 2, seed=0)
    centers = np.array([[0.0, 0.0], [10.0, 10.0]])
    # Direct membership formula at fixed centroids: growing m pulls every
    # row toward uniform 1/K.
    sharp = update_memberships(X, centers, m=2.0)
    flat = update_memberships(X, centers, m=10.0)
    deviation_sharp = np.abs(sharp - 0.5).max()
    deviation_flat = np.abs(flat - 0.5).max()
    assert deviation_flat < deviation_sharp


def test_objective_monotone_nonincreasing():
    rng = np.random.default_rng(1)
    for trial in range(5):
        X = rng.normal(size=(30, 3))
        model = FuzzyCMeans(n_clusters=4, seed=trial)
        model.fit_predict(X)
        history = model.objective_history_
        assert all(
            history[i] >= history[i + 1] - 1e-9 for i in range(len(history) - 1)
        )


def test_recovers_separated_blobs(blob_data):
    X, truth = blob_data([(0.0,), (40.0,), (80.0,)], 10, 0.5, 2, seed=2)
    assignment = fuzzy_cmeans(X, 3, seed=0)
    assert adjusted_rand_index(assignment.labels, truth) == pytest.approx(1.0)
    assert assignment.memberships is not None
    assert assignment.memberships.sum(axis=1) == pytest.approx(
        np.ones(30), abs=1e-9
    )


def test_argmax_tie_goes_to_lowest_cluster_id():
    U = np.array([[0.5, 0.5], [0.2, 0.8]])
    assert np.argmax(U[0]) == 0  # numpy argmax picks the first maximum


def test_objective_definition():
    X = np.array([[0.0], [2.0]])
    centers = np.array([[0.0], [2.0]])
    U = np.array([[1.0, 0.0], [0.0, 1.0]])
    assert fcm_objective(X, centers, U, m=2.0) == pytest.approx(0.0)
    U = np.array([[0.5, 0.5], [0.5, 0.5]])
    # J = sum u^m d^2 = 4 * (0.25 * ... ) with d^2 in {0, 4}
    assert fcm_objective(X, centers, U, m=2.0) == pytest.approx(2.0)


def test_k_above_n_and_bad_m_rejected():
    X = np.zeros((3, 2))
    with pytest.raises(ParameterError):
        fuzzy_cmeans(X, 4)
    with pytest.raises(ParameterError):
        fuzzy_cmeans(X, 2, m=1.0)


def test_seeded_determinism():
    X = np.random.default_rng(3).normal(size=(20, 2))
    a = fuzzy_cmeans(X, 3, seed=5)
    b = fuzzy_cmeans(X, 3, seed=5)
    assert np.array_equal(a.labels, b.labels)
    assert np.array_equal(a.memberships, b.memberships)
