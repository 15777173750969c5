"""scikit-learn style wrappers.

`ClosenessTransformer` turns a collection of graphs into a feature matrix
so closeness metrics can sit inside a `sklearn.pipeline.Pipeline`.
`LinkDecisionMaker` fits the payoff table of one graph and predicts the
link to build under a chosen criterion.
"""

from __future__ import annotations

from collections.abc import Iterable

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .decision import Criterion, build_payoff_table, decide, find_saddle_points
from .exceptions import DomainError
from .graph import Graph, load_graph, parse_graph
from .metrics import metric_report

FEATURES = ("closeness", "residual", "additional", "nr", "na")


def check_graph(obj) -> Graph:
    """Coerce ``obj`` into a `Graph`.

    Accepts a `Graph`, a generator spec or file path, an edge-list
    document, or a square symmetric 0/1 adjacency matrix.
    """
    if isinstance(obj, Graph):
        return obj
    if isinstance(obj, str):
        return parse_graph(obj) if "\n" in obj else load_graph(obj)
    a = np.asarray(obj)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError(f"adjacency matrix must be square, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise DomainError("adjacency matrix must be symmetric")
    if np.any(np.diag(a)):
        raise DomainError("adjacency matrix has self-loops")
    if not np.isin(a, (0, 1)).all():
        raise DomainError("adjacency matrix must be 0/1")
    iu, ju = np.nonzero(np.triu(a, 1))
    return Graph.from_edges(a.shape[0], zip(iu + 1, ju + 1))


def check_graphs(X) -> list[Graph]:
    if isinstance(X, (Graph, str)) or (isinstance(X, np.ndarray) and X.ndim == 2):
        raise DomainError("expected a collection of graphs; wrap a single graph in a list")
    if not isinstance(X, Iterable):
        raise DomainError(f"expected an iterable of graphs, got {type(X).__name__}")
    return [check_graph(x) for x in X]


class ClosenessTransformer(TransformerMixin, BaseEstimator):
    """Map graphs to rows of closeness features.

    Parameters
    ----------
    features : sequence of str, default all of ``FEATURES``
        Columns to emit, in order. Undefined values (e.g. additional
        closeness of a complete graph) become NaN.
    """

    def __init__(self, features=FEATURES):
        self.features = features

    def fit(self, X, y=None):
        unknown = [f for f in self.features if f not in FEATURES]
        if unknown:
            raise DomainError(f"unknown features {unknown}; expected a subset of {FEATURES}")
        check_graphs(X)
        self.n_features_out_ = len(self.features)
        return self

    def transform(self, X):
        check_is_fitted(self, "n_features_out_")
        rows = []
        for g in check_graphs(X):
            rep = metric_report(g)
            rows.append([np.nan if getattr(rep, f) is None else getattr(rep, f) for f in self.features])
        return np.asarray(rows, dtype=float).reshape(-1, len(self.features))

    def get_feature_names_out(self, input_features=None):
        return np.asarray(self.features, dtype=object)


class LinkDecisionMaker(BaseEstimator):
    """Choose which link to build when nature deletes one link.

    Parameters
    ----------
    criterion : str, default "pessimistic"
        One of ``equal-likelihood``, ``weighted``, ``pessimistic``,
        ``optimistic``, ``hurwicz``, ``paper-regret``, ``savage``.
    alpha : float, default 0.5
        Hurwicz optimism weight.
    weights : dict or None
        Deletion probability per link, required by ``weighted``.

    Attributes
    ----------
    payoff_table_ : PayoffTable
    report_ : DecisionReport
    best_actions_ : list of (int, int)
    optimum_ : float
    saddle_points_ : list
    """

    def __init__(self, criterion="pessimistic", alpha=0.5, weights=None):
        self.criterion = criterion
        self.alpha = alpha
        self.weights = weights

    def _criterion(self) -> Criterion:
        return Criterion.parse(self.criterion, alpha=self.alpha, weights=self.weights)

    def fit(self, X, y=None):
        g = check_graph(X)
        self.payoff_table_ = build_payoff_table(g)
        self.report_ = decide(self.payoff_table_, self._criterion())
        self.best_actions_ = self.report_.best_actions
        self.optimum_ = self.report_.optimum
        self.saddle_points_ = find_saddle_points(self.payoff_table_)
        return self

    def decision_function(self, X=None):
        """Criterion score of every buildable link, in table column order."""
        if X is not None:
            return self._fresh(X).decision_function()
        check_is_fitted(self, "report_")
        return np.array([self.report_.scores[a] for a in self.payoff_table_.cols])

    def predict(self, X=None):
        """Best link of the fitted graph, or one best link per graph in ``X``.

        Ties resolve to the lexicographically first link; the full tie set
        is in ``best_actions_``.
        """
        if X is None:
            check_is_fitted(self, "report_")
            return self.best_actions_[0]
        return [self._fresh(g).best_actions_[0] for g in check_graphs(X)]

    def score(self, X=None, y=None):
        """Optimal criterion score (higher is better; regrets are negated)."""
        if X is not None:
            return self._fresh(X).optimum_
        check_is_fitted(self, "report_")
        return self.optimum_

    def _fresh(self, X) -> "LinkDecisionMaker":
        return type(self)(**self.get_params()).fit(X)
