import numpy as np
import pytest
from sklearn.base import clone
from sklearn.pipeline import make_pipeline
from sklearn.preprocessing import StandardScaler

from closeness_decision import ClosenessTransformer, DomainError, LinkDecisionMaker, check_graph, generate


def test_check_graph_inputs():
    p4 = generate("path:4")
    assert check_graph(p4) is p4
    assert check_graph("path:4") == p4
    assert check_graph("n 4\n1 2\n2 3\n3 4\n") == p4
    adj = np.zeros((4, 4), dtype=int)
    for u, v in p4.edges:
        adj[u - 1, v - 1] = adj[v - 1, u - 1] = 1
    assert check_graph(adj) == p4


@pytest.mark.parametrize(
    "bad", [np.zeros((2, 3)), np.array([[0, 1], [0, 0]]), np.eye(2), np.array([[0, 2], [2, 0]])]
)
def test_check_graph_rejects_bad_matrices(bad):
    with pytest.raises(DomainError):
        check_graph(bad)


def test_transformer_features():
    X = ClosenessTransformer().fit_transform(["cycle:6", "complete:3"])
    assert X.shape == (2, 5)
    np.testing.assert_array_equal(X[0, :3], [9.75, 8.0625, 10.75])
    assert np.isnan(X[1, 2]) and np.isnan(X[1, 4])


def test_transformer_subset_and_names():
    t = ClosenessTransformer(features=("closeness", "nr")).fit(["path:4"])
    assert list(t.get_feature_names_out()) == ["closeness", "nr"]
    np.testing.assert_allclose(t.transform(["cycle:6"]), [[9.75, 8.0625 / 9.75]])
    with pytest.raises(DomainError):
        ClosenessTransformer(features=("degree",)).fit(["path:4"])
    with pytest.raises(DomainError):
        ClosenessTransformer().fit("path:4")


def test_transformer_in_pipeline():
    pipe = make_pipeline(ClosenessTransformer(features=("closeness", "residual")), StandardScaler())
    out = pipe.fit_transform([f"cycle:{n}" for n in range(4, 9)])
    assert out.shape == (5, 2)
    np.testing.assert_allclose(out.mean(axis=0), 0, atol=1e-12)


def test_decision_maker_p4():
    dm = LinkDecisionMaker("pessimistic").fit("path:4")
    assert dm.predict() == (1, 4)
    assert dm.optimum_ == dm.score() == 4.25
    assert dm.saddle_points_ == [((2, 3), (1, 4))]
    np.testing.assert_array_equal(dm.decision_function(), [3.0, 4.25, 3.0])


def test_decision_maker_params_and_clone():
    dm = LinkDecisionMaker(criterion="hurwicz", alpha=0.25)
    c = clone(dm)
    assert c.get_params() == {"criterion": "hurwicz", "alpha": 0.25, "weights": None}
    c.set_params(alpha=1.0)
    assert c.fit("cycle:6").best_actions_ == LinkDecisionMaker("optimistic").fit("cycle:6").best_actions_


def test_decision_maker_predict_many():
    dm = LinkDecisionMaker("paper-regret")
    assert dm.predict(["cycle:6", "path:4"]) == [(1, 4), (1, 4)]
    assert dm.score("cycle:6") == -0.375


def test_unfitted_raises():
    from sklearn.exceptions import NotFittedError

    with pytest.raises(NotFittedError):
        LinkDecisionMaker().predict()
