"""Closeness and its single-link residual/additional variants.

Closeness sums ``2**-d(i, j)`` over ordered pairs of distinct vertices;
pairs in different components contribute nothing, so disconnected graphs
are handled without special cases.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .exceptions import DomainError
from .graph import Edge, Graph, all_pairs_distances, mutate_copy

#: Comparison tolerance for closeness values (all are dyadic rationals).
TOL = 1e-9


def _contributions(dist: np.ndarray) -> np.ndarray:
    return np.where(dist > 0, np.ldexp(1.0, -np.clip(dist, 0, None)), 0.0)


def closeness(g: Graph) -> float:
    return float(_contributions(all_pairs_distances(g)).sum())


def vertex_closeness(g: Graph, v: int) -> float:
    """Sum of ``2**-d(v, j)`` over the other vertices ``j``."""
    if not 1 <= v <= g.n:
        raise DomainError(f"vertex {v} out of range 1..{g.n}")
    return float(_contributions(all_pairs_distances(g)[v - 1]).sum())


def _arg_extreme(values: dict, best: float) -> list:
    return sorted(k for k, val in values.items() if abs(val - best) <= TOL)


def residual_closeness(g: Graph) -> tuple[float, list[Edge]]:
    """Minimum closeness over single-edge deletions, with all minimizing edges."""
    if not g.edges:
        raise DomainError("residual closeness needs at least one edge")
    values = {e: closeness(mutate_copy(g, delete=e)) for e in g.edge_list()}
    best = min(values.values())
    return best, _arg_extreme(values, best)


def additional_closeness(g: Graph) -> tuple[float, list[Edge]]:
    """Maximum closeness over single non-edge additions, with all maximizing pairs."""
    if g.is_complete():
        raise DomainError("additional closeness is undefined for a complete graph")
    values = {a: closeness(mutate_copy(g, add=a)) for a in g.non_edges()}
    best = max(values.values())
    return best, _arg_extreme(values, best)


@dataclass
class MetricReport:
    """Closeness, residual and additional closeness of one graph.

    Fields that are undefined for the graph (no edges, complete graph, zero
    closeness) are left as ``None``.
    """

    closeness: float
    residual: Optional[float] = None
    residual_edges: list = field(default_factory=list)
    additional: Optional[float] = None
    additional_pairs: list = field(default_factory=list)
    nr: Optional[float] = None
    na: Optional[float] = None

    def to_dict(self) -> dict:
        return {
            "closeness": self.closeness,
            "residual": self.residual,
            "residual_edges": [list(e) for e in self.residual_edges],
            "additional": self.additional,
            "additional_pairs": [list(e) for e in self.additional_pairs],
            "nr": self.nr,
            "na": self.na,
        }


def metric_report(g: Graph) -> MetricReport:
    report = MetricReport(closeness=closeness(g))
    if g.edges:
        report.residual, report.residual_edges = residual_closeness(g)
        if report.closeness > 0:
            report.nr = report.residual / report.closeness
    if not g.is_complete():
        report.additional, report.additional_pairs = additional_closeness(g)
        if report.closeness > 0:
            report.na = report.additional / report.closeness
    return report
