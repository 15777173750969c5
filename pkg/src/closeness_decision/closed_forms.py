"""Analytic closeness values for paths, cycles, linked cliques, lollipops and
cycles with tails, plus the decision-criterion optima derived from them.

All formulas are dyadic; powers of two are evaluated with ``ldexp`` so
results are exact in double precision at the sizes used here.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import ldexp

from .exceptions import DomainError
from .graph import Edge, generate
from .metrics import additional_closeness


def _pow2(e: int) -> float:
    return ldexp(1.0, e)


def _require(cond: bool, msg: str):
    if not cond:
        raise DomainError(msg)


def path_closeness(n: int) -> float:
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return 2 * n - 4 + _pow2(2 - n)


def cycle_closeness(n: int) -> float:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    k, odd = divmod(n, 2)
    if odd:
        return 2 * n * (1 - _pow2(-k))
    return 4 * k * (1 - 3 * _pow2(-k - 1))


def join_closeness(c1: float, c2: float, cp: float, cq: float) -> float:
    """Closeness of two graphs joined by one link between ``p`` and ``q``.

    Args:
        c1, c2: closeness of the two graphs.
        cp, cq: vertex closeness of ``p`` in the first and ``q`` in the second.
    """
    return c1 + c2 + (1 + cp) * (1 + cq)


def linked_cliques_closeness(k: int, m: int) -> float:
    _require(k >= 2 and m >= 2, f"linked cliques need k, m >= 2, got {k}, {m}")
    return (2 * k * k + 2 * m * m + k * m - k - m + 1) / 4


class Case(str, enum.Enum):
    """Delete/add combinations on ``cliques(k, m)`` (bridge ``(1, k+m)``).

    A-D build the far link ``(k, k+1)``; E-F build ``(1, k+1)`` from the
    bridge endpoint. A deletes the bridge, B a link away from ``1, k, k+1,
    k+m``, C a link touching exactly one of them, D ``(1, k)`` or
    ``(k+1, k+m)``, E a link avoiding vertex 1, F a link at vertex 1.
    """

    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"
    F = "F"


def case_multiplicity(case: Case | str, k: int, m: int) -> int:
    """Number of deletable links falling into ``case``."""
    case = Case(case)
    return {
        Case.A: 1,
        Case.B: (k - 2) * (k - 3) // 2 + (m - 2) * (m - 3) // 2,
        Case.C: 2 * k + 2 * m - 8,
        Case.D: 2,
        Case.E: (k - 1) * (k - 2) // 2 + m * (m - 1) // 2,
        Case.F: k - 1,
    }[case]


def case_example(case: Case | str, k: int, m: int) -> tuple[Edge, Edge]:
    """A representative ``(deleted, added)`` pair for ``case`` on ``cliques(k, m)``."""
    case = Case(case)
    far, near = (k, k + 1), (1, k + 1)
    if case is Case.B:
        _require(k >= 4 or m >= 4, "case B needs k >= 4 or m >= 4")
        deleted = (2, 3) if k >= 4 else (k + 2, k + 3)
        return deleted, far
    return {
        Case.A: ((1, k + m), far),
        Case.C: ((1, 2), far),
        Case.D: ((1, k), far),
        Case.E: ((2, 3), near),
        Case.F: ((1, 2), near),
    }[case]


def linked_cliques_delta(case: Case | str, k: int, m: int) -> float:
    """Closeness change relative to ``cliques(k, m)`` for one delete/add case."""
    case = Case(case)
    _require(k >= 3 and m >= 3, f"cases need k, m >= 3, got {k}, {m}")
    if case is Case.B:
        _require(k >= 4 or m >= 4, "case B is impossible when k = m = 3")
    return {
        Case.A: 0.0,
        Case.B: (k + m - 3) / 4,
        Case.C: (k + m - 4) / 4,
        Case.D: (k + m - 3) / 4,
        Case.E: (k - 1) / 4,
        Case.F: (2 * k - m - 4) / 8,
    }[case]


@dataclass(frozen=True)
class CliquesCriteria:
    """Optimal criterion values for building one link on ``cliques(k, m)``, ``k >= m``.

    ``reg`` follows the published three-branch minimum-regret formula;
    ``regret_strategy`` is ``"far-far"`` when its third branch applies and
    ``"bridge-endpoint"`` otherwise. Every other optimum is reached by the
    far-far link ``(k, k+1)``.
    """

    k: int
    m: int
    closeness: float
    mx: float
    mn: float
    mx_plus_mn: float
    reg: float
    av: float
    regret_strategy: str
    strategy: str = "far-far"


def _regret_branch(k: int, m: int) -> tuple[float, str]:
    if 2 * k >= 2 * m >= k + 4:
        return (k - 1) / 4, "bridge-endpoint"
    if k >= m and k + 8 <= 4 * m <= 2 * k + 8:
        return (3 * k + 2 - 2 * m) / 8, "bridge-endpoint"
    return (k + m - 3) / 4, "far-far"


def linked_cliques_decision(k: int, m: int) -> CliquesCriteria:
    _require(k >= 3 and m >= 3, f"linked cliques decisions need k, m >= 3, got {k}, {m}")
    if k < m:
        k, m = m, k
    c = linked_cliques_closeness(k, m)
    gain = (k + m - 3) / 4
    reg, tag = _regret_branch(k, m)
    av = c + gain + (11 - 3 * k - 3 * m) / (2 * (k * k - k + m * m - m + 2))
    return CliquesCriteria(
        k=k, m=m, closeness=c, mx=c + gain, mn=c, mx_plus_mn=2 * c + gain,
        reg=reg, av=av, regret_strategy=tag,
    )


def linked_cliques_regret_exact(k: int, m: int) -> tuple[float, str]:
    """Smallest column spread over all buildable links of ``cliques(k, m)``.

    Three link types are candidates (``k >= m``): far-far, bridge endpoint
    of the larger clique to the smaller one, and bridge endpoint of the
    smaller clique to the larger one. The three-branch formula used by
    `linked_cliques_decision` leaves out the last type, which beats the
    second whenever ``k > m``.
    """
    _require(k >= 3 and m >= 3, f"need k, m >= 3, got {k}, {m}")
    if k < m:
        k, m = m, k
    options = {
        "far-far": (k + m - 3) / 4,
        "bridge-endpoint": max((k - 1) / 4, (3 * k + 2 - 2 * m) / 8),
        "small-bridge-endpoint": max((m - 1) / 4, (k + 2) / 8),
    }
    tag = min(options, key=lambda t: (options[t], t != "far-far"))
    return options[tag], tag


def linked_cliques_additional(k: int, m: int) -> float:
    _require(k >= 3 and m >= 3, f"need k, m >= 3, got {k}, {m}")
    return linked_cliques_closeness(k, m) + (k + m - 1) / 4


def lollipop_maximax(n: int, m: int) -> tuple[float, Edge]:
    """Optimistic optimum on ``lollipop(n, m)``: additional closeness minus 1/2.

    The additional closeness is found by brute force. The returned link is
    the lexicographically first pair realizing it.
    """
    _require(n >= 3 and m >= 1, f"lollipop needs n >= 3, m >= 1, got {n}, {m}")
    a, pairs = additional_closeness(generate(f"lollipop:{n},{m}"))
    return a - 0.5, pairs[0]


def cycle_tails_closeness(n: int, p: int, q: int) -> float:
    """Closeness of a cycle ``C_n`` with tails of ``p`` and ``q`` vertices at adjacent vertices."""
    _require(n >= 3 and p >= 0 and q >= 0, f"need n >= 3, p, q >= 0, got {n}, {p}, {q}")
    c = cycle_closeness(n)
    return (
        c * (1 + (4 - _pow2(1 - p) - _pow2(1 - q)) / n)
        + 2 * p + 2 * q - 3 + _pow2(-p) + _pow2(-q) + _pow2(-p - q)
    )


def cycle_one_tail_closeness(n: int, p: int) -> float:
    """Closeness of ``C_n`` with a single tail of ``p`` vertices."""
    _require(n >= 3 and p >= 0, f"need n >= 3, p >= 0, got {n}, {p}")
    return cycle_closeness(n) * (1 + (2 - _pow2(1 - p)) / n) + 2 * p - 2 + _pow2(1 - p)


def cycle_tail_min(n: int, p: int) -> float:
    """Single-tail closeness via the parity-specific closed forms in ``k = n // 2``."""
    _require(n >= 3 and p >= 0, f"need n >= 3, p >= 0, got {n}, {p}")
    k, odd = divmod(n, 2)
    if odd:
        return 4 * k + 2 * p + 4 - (2 * k + 3) * _pow2(1 - k) - _pow2(1 - p) + _pow2(2 - k - p)
    return 4 * k + 2 * p + 2 - 6 * (k + 1) * _pow2(-k) - _pow2(1 - p) + 3 * _pow2(1 - k - p)


def cycle_maximin(m: int) -> tuple[float, Edge]:
    """Pessimistic optimum on ``C_m`` and a chord achieving it."""
    _require(m >= 4, f"cycle needs a chord: m >= 4, got {m}")
    q, r = divmod(m, 4)
    if r == 0:
        value = 8 * q + 2 - (2 * q + 3) * _pow2(1 - q) - _pow2(2 - 2 * q) + _pow2(3 - 3 * q)
        chord = (1, 2 * q + 1)
    elif r == 1:
        value = 8 * q + 4 - (2 * q + 3) * _pow2(1 - q) - _pow2(1 - 2 * q) + _pow2(2 - 3 * q)
        chord = (1, 2 * q + 1)
    elif r == 2:
        value = 8 * q + 6 - 3 * (q + 2) * _pow2(-q) - _pow2(1 - 2 * q) + 3 * _pow2(-3 * q)
        chord = (1, 2 * q + 2)
    else:
        value = 8 * q + 8 - 3 * (q + 2) * _pow2(-q) - _pow2(-2 * q) + 3 * _pow2(-1 - 3 * q)
        chord = (1, 2 * q + 2)
    return value, chord
