"""Simple undirected graphs with 1-based vertices.

Graphs are immutable values. Edits (`mutate_copy`) return new graphs so a
single base graph can be evaluated under many single-link variants.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional, Tuple

import numpy as np

from .exceptions import DomainError, GraphParseError

Edge = Tuple[int, int]

#: Distance-matrix entry for vertex pairs in different components.
UNREACHABLE = -1

FAMILIES = ("path", "cycle", "complete", "cliques", "lollipop", "cycletails")


def normalize_edge(u: int, v: int) -> Edge:
    u, v = int(u), int(v)
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``1..n``.

    Attributes:
        n: vertex count.
        edges: unordered pairs stored as ``(u, v)`` with ``u < v``.
    """

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if int(self.n) < 0:
            raise DomainError(f"vertex count must be nonnegative, got {self.n}")
        object.__setattr__(self, "n", int(self.n))
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise DomainError(f"self-loop on vertex {u}")
            for x in (u, v):
                if not 1 <= x <= self.n:
                    raise DomainError(f"vertex {x} out of range 1..{self.n}")
            normalized.add(normalize_edge(u, v))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        return cls(n, frozenset(edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edge_list()})"

    def edge_list(self) -> list[Edge]:
        """Edges in lexicographic order."""
        return sorted(self.edges)

    def non_edges(self) -> list[Edge]:
        """Non-adjacent vertex pairs in lexicographic order."""
        return [
            e for e in combinations(range(1, self.n + 1), 2) if e not in self.edges
        ]

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges

    def is_complete(self) -> bool:
        return len(self.edges) == self.n * (self.n - 1) // 2

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    @cached_property
    def adjacency(self) -> np.ndarray:
        """Boolean ``n x n`` adjacency matrix (0-based indices)."""
        a = np.zeros((self.n, self.n), dtype=bool)
        if self.edges:
            idx = np.array(sorted(self.edges)) - 1
            a[idx[:, 0], idx[:, 1]] = True
            a[idx[:, 1], idx[:, 0]] = True
        return a

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v - 1]``."""
        perm = list(perm)
        if sorted(perm) != list(range(1, self.n + 1)):
            raise DomainError("relabeling must be a permutation of 1..n")
        return Graph(self.n, frozenset((perm[u - 1], perm[v - 1]) for u, v in self.edges))


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family with its integer parameters."""

    family: str
    params: Tuple[int, ...]

    _ARITY = {"path": 1, "cycle": 1, "complete": 1, "cliques": 2, "lollipop": 2, "cycletails": 3}

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        params = tuple(int(p) for p in self.params)
        object.__setattr__(self, "params", params)
        if len(params) != self._ARITY[self.family]:
            raise DomainError(
                f"{self.family} takes {self._ARITY[self.family]} parameter(s), got {len(params)}"
            )
        self._check_ranges()

    def _check_ranges(self):
        f, p = self.family, self.params
        ok = {
            "path": lambda: p[0] >= 1,
            "cycle": lambda: p[0] >= 3,
            "complete": lambda: p[0] >= 1,
            "cliques": lambda: p[0] >= 2 and p[1] >= 2,
            "lollipop": lambda: p[0] >= 3 and p[1] >= 1,
            "cycletails": lambda: p[0] >= 3 and p[1] >= 0 and p[2] >= 0,
        }[f]()
        if not ok:
            raise DomainError(f"invalid parameters for {f}: {p}")

    def __str__(self):
        return f"{self.family}:{','.join(map(str, self.params))}"

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse ``"family:p1,p2,..."``."""
        family, sep, rest = text.strip().partition(":")
        if not sep:
            raise DomainError(f"not a generator spec: {text!r}")
        try:
            params = tuple(int(x) for x in rest.split(","))
        except ValueError:
            raise DomainError(f"non-integer parameter in {text!r}") from None
        return cls(family, params)


def _path_edges(vertices: list[int]) -> list[Edge]:
    return list(zip(vertices, vertices[1:]))


def generate(spec: FamilySpec | str) -> Graph:
    """Build the graph described by a family spec.

    Conventions: ``cliques(k, m)`` bridges vertex 1 of ``K_k`` to vertex
    ``k+m`` of ``K_m``; ``lollipop(n, m)`` hangs the path off clique vertex
    ``n``; ``cycletails(n, p, q)`` roots the tails at cycle vertices 1 and 2.
    """
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    f, p = spec.family, spec.params
    if f == "path":
        (n,) = p
        return Graph(n, frozenset(_path_edges(list(range(1, n + 1)))))
    if f == "cycle":
        (n,) = p
        return Graph(n, frozenset(_path_edges(list(range(1, n + 1))) + [(1, n)]))
    if f == "complete":
        (n,) = p
        return Graph(n, frozenset(combinations(range(1, n + 1), 2)))
    if f == "cliques":
        k, m = p
        edges = list(combinations(range(1, k + 1), 2))
        edges += combinations(range(k + 1, k + m + 1), 2)
        edges.append((1, k + m))
        return Graph(k + m, frozenset(edges))
    if f == "lollipop":
        n, m = p
        edges = list(combinations(range(1, n + 1), 2))
        edges += _path_edges(list(range(n, n + m + 1)))
        return Graph(n + m, frozenset(edges))
    n, tp, tq = p
    edges = _path_edges(list(range(1, n + 1))) + [(1, n)]
    edges += _path_edges([1] + list(range(n + 1, n + tp + 1)))
    edges += _path_edges([2] + list(range(n + tp + 1, n + tp + tq + 1)))
    return Graph(n + tp + tq, frozenset(edges))


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document.

    The format is an optional run of ``#`` comment lines, a header
    ``n <count>`` and one ``u v`` pair per line. Blank lines are ignored and
    duplicate edges collapse.
    """
    n: Optional[int] = None
    edges: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise GraphParseError(f"line {lineno}: expected header 'n <count>', got {line!r}")
            try:
                n = int(parts[1])
            except ValueError:
                raise GraphParseError(f"line {lineno}: bad vertex count {parts[1]!r}") from None
            if n < 1:
                raise GraphParseError(f"line {lineno}: vertex count must be positive")
            continue
        if len(parts) != 2:
            raise GraphParseError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"line {lineno}: non-integer vertex in {line!r}") from None
        if u == v:
            raise GraphParseError(f"line {lineno}: self-loop on vertex {u}")
        for x in (u, v):
            if not 1 <= x <= n:
                raise GraphParseError(f"line {lineno}: vertex {x} out of range 1..{n}")
        edges.add(normalize_edge(u, v))
    if n is None:
        raise GraphParseError("missing header line 'n <count>'")
    return Graph(n, frozenset(edges))


def format_graph(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edge_list()]
    return "\n".join(lines) + "\n"


def load_graph(arg: str) -> Graph:
    """Resolve a CLI graph argument: a file path or a ``family:params`` spec."""
    if os.path.exists(arg):
        with open(arg, encoding="utf-8") as fh:
            return parse_graph(fh.read())
    if ":" in arg and arg.split(":", 1)[0] in FAMILIES:
        return generate(FamilySpec.parse(arg))
    raise GraphParseError(f"{arg!r} is neither a readable file nor a generator spec")


def all_pairs_distances(g: Graph) -> np.ndarray:
    """Hop counts between all vertex pairs.

    Level-synchronous BFS from every source at once. Entry ``[i-1, j-1]``
    is ``d(i, j)``; pairs in different components hold `UNREACHABLE`.
    """
    n = g.n
    dist = np.full((n, n), UNREACHABLE, dtype=np.int64)
    if n == 0:
        return dist
    np.fill_diagonal(dist, 0)
    adj = g.adjacency.astype(np.int64)
    reached = np.eye(n, dtype=bool)
    frontier = reached.copy()
    level = 0
    while frontier.any():
        level += 1
        frontier = ((frontier.astype(np.int64) @ adj) > 0) & ~reached
        dist[frontier] = level
        reached |= frontier
    return dist


def mutate_copy(g: Graph, delete: Optional[Edge] = None, add: Optional[Edge] = None) -> Graph:
    """Return ``g`` with one edge removed and/or one non-edge added."""
    edges = set(g.edges)
    if delete is not None:
        e = normalize_edge(*delete)
        if e not in edges:
            raise DomainError(f"cannot delete {e}: not an edge")
        edges.remove(e)
    if add is not None:
        a = normalize_edge(*add)
        if a[0] == a[1]:
            raise DomainError(f"cannot add self-loop {a}")
        if not (1 <= a[0] and a[1] <= g.n):
            raise DomainError(f"cannot add {a}: vertex out of range 1..{g.n}")
        if a in g.edges:
            raise DomainError(f"cannot add {a}: already an edge")
        edges.add(a)
    return Graph(g.n, frozenset(edges))
