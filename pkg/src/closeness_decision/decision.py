"""One-link-lost / one-link-built game and its decision criteria.

Rows of the payoff table are the links nature may delete, columns the
links we may build, and cells the closeness of the resulting graph. Every
criterion is expressed as a score to *maximize*; regret criteria are
negated so the best action is always an argmax.

Two regret notions are offered. ``PAPER_REGRET`` scores an action by the
spread of its own column (``max - min``), which is the quantity the
published linked-clique and cycle analyses minimize. ``SAVAGE`` is the
textbook criterion: regret of a cell is the gap to the best action for the
same deleted link, and an action is scored by its worst regret.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Mapping, Optional

import numpy as np

from .exceptions import DomainError
from .graph import UNREACHABLE, Edge, Graph, all_pairs_distances, mutate_copy, normalize_edge
from .metrics import TOL


class CriterionKind(str, enum.Enum):
    EQUAL_LIKELIHOOD = "equal-likelihood"
    WEIGHTED = "weighted"
    PESSIMISTIC = "pessimistic"
    OPTIMISTIC = "optimistic"
    HURWICZ = "hurwicz"
    PAPER_REGRET = "paper-regret"
    SAVAGE = "savage"

    @property
    def is_regret(self) -> bool:
        return self in (CriterionKind.PAPER_REGRET, CriterionKind.SAVAGE)


@dataclass(frozen=True)
class Criterion:
    """A scoring rule over payoff-table columns.

    Attributes:
        kind: which rule.
        alpha: optimism weight, used by Hurwicz only.
        weights: probability of each deletable link, used by Weighted only.
    """

    kind: CriterionKind
    alpha: float = 0.5
    weights: Optional[Mapping[Edge, float]] = None

    def __post_init__(self):
        object.__setattr__(self, "kind", CriterionKind(self.kind))
        if not 0.0 <= self.alpha <= 1.0:
            raise DomainError(f"alpha must lie in [0, 1], got {self.alpha}")
        if self.kind is CriterionKind.WEIGHTED:
            if self.weights is None:
                raise DomainError("weighted criterion needs weights")
            w = {normalize_edge(*e): float(p) for e, p in self.weights.items()}
            if any(p < 0 for p in w.values()):
                raise DomainError("weights must be nonnegative")
            if abs(sum(w.values()) - 1.0) > 1e-9:
                raise DomainError(f"weights sum to {sum(w.values())}, not 1")
            object.__setattr__(self, "weights", w)

    @property
    def name(self) -> str:
        if self.kind is CriterionKind.HURWICZ:
            return f"hurwicz({self.alpha:g})"
        return self.kind.value

    @classmethod
    def parse(cls, name: str, alpha: float = 0.5, weights=None) -> "Criterion":
        try:
            kind = CriterionKind(name.strip().lower())
        except ValueError:
            valid = ", ".join(k.value for k in CriterionKind)
            raise DomainError(f"unknown criterion {name!r}; expected one of {valid}") from None
        return cls(kind, alpha=alpha, weights=weights)


@dataclass
class PayoffTable:
    rows: list  # deletable edges of the base graph
    cols: list  # addable non-edges of the base graph
    cells: np.ndarray  # cells[r, c] = closeness after deleting rows[r], adding cols[c]

    @property
    def shape(self):
        return self.cells.shape

    def column(self, action: Edge) -> np.ndarray:
        a = normalize_edge(*action)
        try:
            return self.cells[:, self.cols.index(a)]
        except ValueError:
            raise DomainError(f"{a} is not an addable link of this table") from None

    def to_dict(self) -> dict:
        return {
            "rows": [list(e) for e in self.rows],
            "cols": [list(a) for a in self.cols],
            "cells": self.cells.tolist(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "PayoffTable":
        return cls(
            [tuple(e) for e in d["rows"]],
            [tuple(a) for a in d["cols"]],
            np.asarray(d["cells"], dtype=float),
        )


def build_payoff_table(g: Graph) -> PayoffTable:
    if not g.edges:
        raise DomainError("no deletable links")
    if g.is_complete():
        raise DomainError("no addable links")
    rows, cols = g.edge_list(), g.non_edges()
    cells = np.empty((len(rows), len(cols)))
    for r, e in enumerate(rows):
        dist = all_pairs_distances(mutate_copy(g, delete=e)).astype(float)
        dist[dist == UNREACHABLE] = np.inf
        for c, (p, q) in enumerate(cols):
            cells[r, c] = _closeness_after_adding(dist, p - 1, q - 1)
    return PayoffTable(rows, cols, cells)


def _closeness_after_adding(dist: np.ndarray, p: int, q: int) -> float:
    # A new link p-q only shortens paths that use it: d' = min(d, d(.,p)+1+d(q,.), d(.,q)+1+d(p,.)).
    via_pq = dist[:, p, None] + 1 + dist[None, q, :]
    via_qp = dist[:, q, None] + 1 + dist[None, p, :]
    new = np.minimum(dist, np.minimum(via_pq, via_qp))
    finite = np.isfinite(new)
    total = np.ldexp(1.0, -new[finite].astype(np.int64)).sum()
    return float(total - dist.shape[0])  # drop the diagonal's 2**0 terms


def score_action(table: PayoffTable, action: Edge, criterion: Criterion) -> float:
    col = table.column(action)
    kind = criterion.kind
    if kind is CriterionKind.EQUAL_LIKELIHOOD:
        return float(col.mean())
    if kind is CriterionKind.WEIGHTED:
        w = criterion.weights
        missing = [e for e in table.rows if e not in w]
        extra = [e for e in w if e not in table.rows]
        if missing or extra:
            raise DomainError(
                f"weights do not match deletable links (missing {missing}, unknown {extra})"
            )
        return float(sum(w[e] * v for e, v in zip(table.rows, col)))
    if kind is CriterionKind.PESSIMISTIC:
        return float(col.min())
    if kind is CriterionKind.OPTIMISTIC:
        return float(col.max())
    if kind is CriterionKind.HURWICZ:
        a = criterion.alpha
        return float(a * col.max() + (1 - a) * col.min())
    if kind is CriterionKind.PAPER_REGRET:
        return -float(col.max() - col.min())
    best_per_row = table.cells.max(axis=1)
    return -float((best_per_row - col).max())


@dataclass
class DecisionReport:
    criterion: Criterion
    scores: dict = field(default_factory=dict)
    optimum: float = float("nan")
    best_actions: list = field(default_factory=list)

    @property
    def value(self) -> float:
        """Optimum in the criterion's natural units (regret reported positive)."""
        return -self.optimum if self.criterion.kind.is_regret else self.optimum

    def to_dict(self) -> dict:
        return {
            "criterion": self.criterion.name,
            "optimum": self.optimum,
            "value": self.value,
            "best_actions": [list(a) for a in self.best_actions],
            "scores": [{"add": list(a), "score": s} for a, s in self.scores.items()],
        }


def decide(table: PayoffTable, criterion: Criterion) -> DecisionReport:
    scores = {a: score_action(table, a, criterion) for a in table.cols}
    best = max(scores.values())
    winners = sorted(a for a, s in scores.items() if s >= best - TOL)
    return DecisionReport(criterion, scores, best, winners)


def find_saddle_points(table: PayoffTable) -> list[tuple[Edge, Edge]]:
    """Cells that are the maximum of their row and the minimum of their column."""
    cells = table.cells
    if cells.size == 0:
        return []
    row_max = cells.max(axis=1, keepdims=True)
    col_min = cells.min(axis=0, keepdims=True)
    mask = (cells >= row_max - TOL) & (cells <= col_min + TOL)
    return [(table.rows[r], table.cols[c]) for r, c in zip(*np.nonzero(mask))]
