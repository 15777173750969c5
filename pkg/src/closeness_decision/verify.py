"""Brute-force verification of the closed forms.

Every target pairs an analytic evaluator with an oracle that generates the
graph, runs BFS, sums closeness and, for decision targets, builds the full
payoff table and applies `decide`.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional

from . import closed_forms as cf
from . import fixtures as fx
from .decision import Criterion, CriterionKind, PayoffTable, build_payoff_table, decide, find_saddle_points
from .exceptions import DomainError
from .graph import FamilySpec, Graph, generate, mutate_copy
from .metrics import additional_closeness, closeness, metric_report, vertex_closeness

DEFAULT_TOLERANCE = 1e-9


@dataclass
class Instance:
    params: dict
    analytic: float
    oracle: float
    tolerance: Optional[float] = None

    @property
    def diff(self) -> float:
        return abs(self.analytic - self.oracle)


@dataclass
class SweepReport:
    target: str
    family: str
    ranges: dict
    tolerance: float
    instances: list = field(default_factory=list)

    def _tol(self, inst: Instance) -> float:
        return self.tolerance if inst.tolerance is None else inst.tolerance

    @property
    def max_diff(self) -> float:
        return max((i.diff for i in self.instances), default=0.0)

    @property
    def failures(self) -> list:
        return [i for i in self.instances if not i.diff <= self._tol(i)]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "target": self.target,
            "family": self.family,
            "ranges": {k: list(v) for k, v in self.ranges.items()},
            "tolerance": self.tolerance,
            "max_diff": self.max_diff,
            "passed": self.passed,
            "instances": [
                {
                    "params": i.params,
                    "analytic": i.analytic,
                    "oracle": i.oracle,
                    "diff": i.diff,
                    "ok": i.diff <= self._tol(i),
                }
                for i in self.instances
            ],
        }

    def to_text(self) -> str:
        lines = []
        for i in self.instances:
            p = " ".join(f"{k}={v}" for k, v in i.params.items())
            mark = "ok  " if i.diff <= self._tol(i) else "FAIL"
            lines.append(f"{mark} {p:<28} analytic={i.analytic:.10g} oracle={i.oracle:.10g} diff={i.diff:.3g}")
        status = "PASS" if self.passed else "FAIL"
        lines.append(
            f"{status} {self.target} [{self.family}]: {len(self.instances)} instances, "
            f"{len(self.failures)} mismatches, max diff {self.max_diff:.3g} (tolerance {self.tolerance:g})"
        )
        return "\n".join(lines)


@lru_cache(maxsize=256)
def _table(spec: str) -> PayoffTable:
    return build_payoff_table(generate(spec))


def _optimum(spec: str, kind: CriterionKind, alpha: float = 0.5) -> float:
    return decide(_table(spec), Criterion(kind, alpha=alpha)).optimum


def _random_graph(rng: random.Random, n: int) -> Graph:
    edges = [e for e in itertools.combinations(range(1, n + 1), 2) if rng.random() < 0.5]
    return Graph.from_edges(n, edges)


def join_instance(seed: int, max_n: int = 8) -> tuple[float, float]:
    """Two seeded random graphs joined at random vertices: (formula, brute force)."""
    rng = random.Random(seed)
    g1 = _random_graph(rng, rng.randint(1, max_n))
    g2 = _random_graph(rng, rng.randint(1, max_n))
    p, q = rng.randint(1, g1.n), rng.randint(1, g2.n)
    shifted = [(u + g1.n, v + g1.n) for u, v in g2.edges]
    joined = Graph.from_edges(g1.n + g2.n, list(g1.edges) + shifted + [(p, g1.n + q)])
    analytic = cf.join_closeness(closeness(g1), closeness(g2), vertex_closeness(g1, p), vertex_closeness(g2, q))
    return analytic, closeness(joined)


@dataclass(frozen=True)
class Target:
    name: str
    family: str
    params: tuple
    defaults: dict
    evaluate: Callable[..., tuple[float, float]]
    ordered: bool = False  # sweep only k >= m
    description: str = ""

    def spec(self, values: dict) -> Optional[FamilySpec]:
        if self.family == "random":
            return None
        if self.family == "cycletails" and self.params == ("n", "p"):
            return FamilySpec("cycletails", (values["n"], values["p"], 0))
        return FamilySpec(self.family, tuple(values[p] for p in self.params))


def _cliques(k, m):
    return f"cliques:{k},{m}"


TARGETS = {
    t.name: t
    for t in [
        Target("path", "path", ("n",), {"n": (1, 20)},
               lambda n: (cf.path_closeness(n), closeness(generate(f"path:{n}"))),
               description="path closeness"),
        Target("cycle", "cycle", ("n",), {"n": (3, 20)},
               lambda n: (cf.cycle_closeness(n), closeness(generate(f"cycle:{n}"))),
               description="cycle closeness"),
        Target("join", "random", ("seed",), {"seed": (0, 99)}, join_instance,
               description="closeness of two graphs joined by a link"),
        Target("linked-cliques", "cliques", ("k", "m"), {"k": (3, 10), "m": (3, 10)},
               lambda k, m: (cf.linked_cliques_closeness(k, m), closeness(generate(_cliques(k, m)))),
               description="closeness of two cliques joined by a bridge"),
        Target("cycle-tails", "cycletails", ("n", "p", "q"), {"n": (3, 10), "p": (0, 6), "q": (0, 6)},
               lambda n, p, q: (cf.cycle_tails_closeness(n, p, q), closeness(generate(f"cycletails:{n},{p},{q}"))),
               description="cycle with two tails at adjacent vertices"),
        Target("one-tail", "cycletails", ("n", "p"), {"n": (3, 16), "p": (0, 8)},
               lambda n, p: (cf.cycle_one_tail_closeness(n, p), closeness(generate(f"cycletails:{n},{p},0"))),
               description="cycle with one tail"),
        Target("tail-min", "cycletails", ("n", "p"), {"n": (3, 16), "p": (0, 8)},
               lambda n, p: (cf.cycle_tail_min(n, p), closeness(generate(f"cycletails:{n},{p},0"))),
               description="cycle with one tail, parity-specific form"),
        Target("cliques-maximax", "cliques", ("k", "m"), {"k": (3, 8), "m": (3, 8)},
               lambda k, m: (cf.linked_cliques_decision(k, m).mx, _optimum(_cliques(k, m), CriterionKind.OPTIMISTIC)),
               ordered=True, description="optimistic optimum on linked cliques"),
        Target("cliques-maximin", "cliques", ("k", "m"), {"k": (3, 8), "m": (3, 8)},
               lambda k, m: (cf.linked_cliques_decision(k, m).mn, _optimum(_cliques(k, m), CriterionKind.PESSIMISTIC)),
               ordered=True, description="pessimistic optimum on linked cliques"),
        Target("cliques-hurwicz", "cliques", ("k", "m"), {"k": (3, 8), "m": (3, 8)},
               lambda k, m: (cf.linked_cliques_decision(k, m).mx_plus_mn,
                             2 * _optimum(_cliques(k, m), CriterionKind.HURWICZ, 0.5)),
               ordered=True, description="max + min (twice the Hurwicz 0.5 optimum) on linked cliques"),
        Target("cliques-regret", "cliques", ("k", "m"), {"k": (3, 8), "m": (3, 8)},
               lambda k, m: (cf.linked_cliques_decision(k, m).reg, -_optimum(_cliques(k, m), CriterionKind.PAPER_REGRET)),
               ordered=True, description="minimum column spread, published three-branch formula"),
        Target("cliques-regret-exact", "cliques", ("k", "m"), {"k": (3, 8), "m": (3, 8)},
               lambda k, m: (cf.linked_cliques_regret_exact(k, m)[0], -_optimum(_cliques(k, m), CriterionKind.PAPER_REGRET)),
               ordered=True, description="minimum column spread over all three link types"),
        Target("cliques-average", "cliques", ("k", "m"), {"k": (3, 8), "m": (3, 8)},
               lambda k, m: (cf.linked_cliques_decision(k, m).av, _optimum(_cliques(k, m), CriterionKind.EQUAL_LIKELIHOOD)),
               ordered=True, description="equal-likelihood optimum on linked cliques"),
        Target("cliques-additional", "cliques", ("k", "m"), {"k": (3, 8), "m": (3, 8)},
               lambda k, m: (cf.linked_cliques_additional(k, m), additional_closeness(generate(_cliques(k, m)))[0]),
               ordered=True, description="additional closeness of linked cliques"),
        Target("lollipop-maximax", "lollipop", ("n", "m"), {"n": (3, 6), "m": (1, 4)},
               lambda n, m: (cf.lollipop_maximax(n, m)[0], _optimum(f"lollipop:{n},{m}", CriterionKind.OPTIMISTIC)),
               description="optimistic optimum on lollipops as additional closeness - 1/2"),
        Target("cycle-maximin", "cycle", ("m",), {"m": (8, 24)},
               lambda m: (cf.cycle_maximin(m)[0], _optimum(f"cycle:{m}", CriterionKind.PESSIMISTIC)),
               description="pessimistic optimum on cycles"),
    ]
}

# Short names used in the published text, kept as CLI aliases.
ALIASES = {
    "eq2": "path", "eq3": "cycle", "eq4": "join", "lemma1": "linked-cliques",
    "lemma2": "cycle-tails", "eq5": "cycle-tails", "eq6": "one-tail", "eq7": "tail-min", "eq8": "tail-min",
    "theorem1": "cliques-maximax", "theorem2": "cliques-maximin", "corollary1": "cliques-hurwicz",
    "theorem3": "cliques-regret", "theorem4": "cliques-average", "theorem5": "cycle-maximin",
    "lollipop": "lollipop-maximax",
}


def resolve_target(name: str) -> Target:
    key = ALIASES.get(name.lower(), name.lower())
    try:
        return TARGETS[key]
    except KeyError:
        raise DomainError(f"unknown target {name!r}; expected one of {', '.join(sorted(TARGETS))}") from None


def sweep(target: str, ranges: Optional[dict] = None, tolerance: float = DEFAULT_TOLERANCE) -> SweepReport:
    """Compare a closed form against the brute-force oracle over a parameter grid.

    ``ranges`` maps parameter names to inclusive ``(lo, hi)`` bounds;
    unspecified parameters use the target's defaults.
    """
    t = resolve_target(target)
    if not tolerance > 0:
        raise DomainError(f"tolerance must be positive, got {tolerance}")
    ranges = dict(ranges or {})
    unknown = set(ranges) - set(t.params)
    if unknown:
        raise DomainError(f"{t.name} has no parameter(s) {sorted(unknown)}; expected {list(t.params)}")
    bounds = {p: tuple(ranges.get(p, t.defaults[p])) for p in t.params}
    for p, (lo, hi) in bounds.items():
        if lo > hi:
            raise DomainError(f"empty range for {p}: {lo}..{hi}")
    grid = [dict(zip(t.params, vals)) for vals in itertools.product(*(range(lo, hi + 1) for lo, hi in bounds.values()))]
    if t.ordered:
        grid = [v for v in grid if v["k"] >= v["m"]]
    for values in grid:
        t.spec(values)  # raises DomainError on out-of-range parameters
    report = SweepReport(t.name, t.family, bounds, tolerance)
    for values in grid:
        analytic, oracle = t.evaluate(**values)
        report.instances.append(Instance(values, float(analytic), float(oracle)))
    return report


def fixture_check() -> SweepReport:
    """Check every published number for the small examples against the engine."""
    report = SweepReport("fixtures", "published examples", {}, 0.0)
    add = lambda name, expected, got, tol=None: report.instances.append(  # noqa: E731
        Instance({"fixture": name}, float(expected), float(got), tol)
    )

    table = build_payoff_table(generate("path:4"))
    add("table1.rows", 1.0, float(table.rows == fx.TABLE1_ROWS))
    add("table1.cols", 1.0, float(table.cols == fx.TABLE1_COLS))
    for r, e in enumerate(fx.TABLE1_ROWS):
        for c, a in enumerate(fx.TABLE1_COLS):
            add(f"table1[{e}][{a}]", fx.TABLE1[r][c], table.cells[r, c])
    row, col, value = fx.TABLE1_SADDLE
    add("table1.saddle", 1.0, float((row, col) in find_saddle_points(table)))
    add("table1.saddle_value", value, table.cells[table.rows.index(row), table.cols.index(col)])
    p4 = decide(table, Criterion(CriterionKind.PESSIMISTIC))
    add("P4.pessimistic", 4.25, p4.optimum)
    add("P4.pessimistic_best", 1.0, float(p4.best_actions == [(1, 4)]))

    for name, (g, c, r, a, nr, na) in fx.FIGURE_VALUES.items():
        rep = metric_report(g)
        add(f"{name}.C", c, rep.closeness)
        add(f"{name}.R", r, rep.residual)
        add(f"{name}.A", a, rep.additional)
        add(f"{name}.NR", nr, rep.nr, fx.RATIO_TOL)
        add(f"{name}.NA", na, rep.na, fx.RATIO_TOL)

    c6 = generate("cycle:6")
    rep = metric_report(c6)
    for label, expected, got in zip("CRA", fx.C6_METRICS, (rep.closeness, rep.residual, rep.additional)):
        add(f"C6.{label}", expected, got)
    add("C6.R_all_edges", 1.0, float(rep.residual_edges == c6.edge_list()))
    table = _table("cycle:6")
    for label, (chord, values) in (("opposite", fx.C6_OPPOSITE), ("short", fx.C6_SHORT)):
        col = table.column(chord)
        got = (col.max(), col.min(), col.max() + col.min(), col.mean(), col.max() - col.min())
        for key, expected, value in zip(("Mx", "Mn", "Mx+Mn", "mean", "reg"), values, got):
            add(f"C6.{label}{chord}.{key}", expected, value, fx.C6_MEAN_TOL if key == "mean" else None)
    winners = {
        CriterionKind.PESSIMISTIC: fx.C6_OPPOSITE_CHORDS,
        CriterionKind.EQUAL_LIKELIHOOD: fx.C6_OPPOSITE_CHORDS,
        CriterionKind.HURWICZ: fx.C6_OPPOSITE_CHORDS,
        CriterionKind.PAPER_REGRET: fx.C6_OPPOSITE_CHORDS,
        CriterionKind.OPTIMISTIC: fx.C6_SHORT_CHORDS,
    }
    for kind, expected in winners.items():
        got = decide(table, Criterion(kind, alpha=0.5)).best_actions
        add(f"C6.{kind.value}.best", 1.0, float(got == expected))
    return report
