"""Command-line front end.

    closeness-decision metrics GRAPH
    closeness-decision payoff GRAPH [--format csv]
    closeness-decision decide GRAPH --criteria all --alpha 0.5 [--weights FILE]
    closeness-decision verify TARGET [k=3..8 m=3..8] [--tolerance 1e-9]

GRAPH is an edge-list file or a generator spec such as ``cycle:6``.
Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys

from .decision import Criterion, CriterionKind, build_payoff_table, decide, find_saddle_points
from .exceptions import DomainError, GraphParseError
from .graph import load_graph, normalize_edge
from .metrics import metric_report
from .verify import DEFAULT_TOLERANCE, TARGETS, fixture_check, sweep

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def fmt(x) -> str:
    """Up to 10 significant digits, trailing zeros trimmed."""
    if x is None:
        return "undefined"
    return format(float(x), ".10g")


def fmt_edge(e) -> str:
    return f"({e[0]},{e[1]})"


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def cmd_metrics(args) -> tuple[str, int]:
    rep = metric_report(load_graph(args.graph))
    if args.format == "json":
        return json.dumps(rep.to_dict(), indent=2), EXIT_OK
    edges = lambda es: " ".join(fmt_edge(e) for e in es)  # noqa: E731
    fields = [
        ("C", fmt(rep.closeness), ""),
        ("R", fmt(rep.residual), edges(rep.residual_edges)),
        ("A", fmt(rep.additional), edges(rep.additional_pairs)),
        ("NR", fmt(rep.nr), ""),
        ("NA", fmt(rep.na), ""),
    ]
    if args.format == "csv":
        return _csv([("metric", "value", "links")] + fields).rstrip("\n"), EXIT_OK
    lines = [f"{name:<3}= {value}" + (f"  via {links}" if links else "") for name, value, links in fields]
    return "\n".join(lines), EXIT_OK


def cmd_payoff(args) -> tuple[str, int]:
    table = build_payoff_table(load_graph(args.graph))
    saddles = find_saddle_points(table)
    if args.format == "json":
        doc = table.to_dict()
        doc["saddle_points"] = [
            {"delete": list(r), "add": list(c), "value": float(table.cells[table.rows.index(r), table.cols.index(c)])}
            for r, c in saddles
        ]
        return json.dumps(doc, indent=2), EXIT_OK
    rows = [["Del-Add"] + [fmt_edge(a) for a in table.cols]]
    rows += [[fmt_edge(e)] + [fmt(v) for v in table.cells[i]] for i, e in enumerate(table.rows)]
    if args.format == "csv":
        return _csv(rows).rstrip("\n"), EXIT_OK
    widths = [max(len(r[j]) for r in rows) for j in range(len(rows[0]))]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(r, widths)) for r in rows]
    if saddles:
        lines.append("saddle points: " + ", ".join(f"delete {fmt_edge(r)} / add {fmt_edge(c)}" for r, c in saddles))
    else:
        lines.append("saddle points: none")
    return "\n".join(lines), EXIT_OK


def read_weights(path: str) -> dict:
    """Read ``u v p`` lines (``#`` comments allowed) into an edge -> probability map."""
    weights = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 3:
                raise GraphParseError(f"{path}:{lineno}: expected 'u v p', got {line!r}")
            try:
                e = normalize_edge(int(parts[0]), int(parts[1]))
                weights[e] = float(parts[2])
            except ValueError:
                raise GraphParseError(f"{path}:{lineno}: bad number in {line!r}") from None
    return weights


def _criteria(names: str, alpha: float, weights) -> list[Criterion]:
    requested = [n.strip() for n in names.split(",") if n.strip()]
    if requested == ["all"]:
        kinds = [k for k in CriterionKind if k is not CriterionKind.WEIGHTED or weights is not None]
        return [Criterion(k, alpha=alpha, weights=weights) for k in kinds]
    return [Criterion.parse(n, alpha=alpha, weights=weights) for n in requested]


def cmd_decide(args) -> tuple[str, int]:
    weights = read_weights(args.weights) if args.weights else None
    criteria = _criteria(args.criteria, args.alpha, weights)
    table = build_payoff_table(load_graph(args.graph))
    reports = [decide(table, c) for c in criteria]
    if args.format == "json":
        return json.dumps([r.to_dict() for r in reports], indent=2), EXIT_OK
    if args.format == "csv":
        rows = [("criterion", "value", "best_actions")]
        rows += [(r.criterion.name, fmt(r.value), " ".join(fmt_edge(a) for a in r.best_actions)) for r in reports]
        return _csv(rows).rstrip("\n"), EXIT_OK
    lines = []
    for r in reports:
        label = "regret" if r.criterion.kind.is_regret else "value"
        shown = f"{label}={fmt(r.value)}"
        lines.append(f"{r.criterion.name:<18} {shown:<20} best: {' '.join(fmt_edge(a) for a in r.best_actions)}")
    return "\n".join(lines), EXIT_OK


_RANGE = re.compile(r"^([a-z]+)=(-?\d+)(?:\.\.(-?\d+))?$")


def parse_ranges(items) -> dict:
    ranges = {}
    for item in items:
        m = _RANGE.match(item.strip())
        if not m:
            raise UsageError(f"bad range {item!r}; expected name=lo..hi or name=value")
        lo = int(m.group(2))
        hi = int(m.group(3)) if m.group(3) is not None else lo
        ranges[m.group(1)] = (lo, hi)
    return ranges


def cmd_verify(args) -> tuple[str, int]:
    if args.target == "fixtures":
        if args.ranges:
            raise UsageError("fixtures take no ranges")
        report = fixture_check()
    else:
        if not args.tolerance > 0:
            raise UsageError("tolerance must be positive")
        report = sweep(args.target, parse_ranges(args.ranges), args.tolerance)
    text = json.dumps(report.to_dict(), indent=2) if args.format == "json" else report.to_text()
    return text, EXIT_OK if report.passed else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="closeness-decision",
        description="Closeness metrics and one-link-lost/one-link-built decisions for undirected graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name, help_, func):
        p = sub.add_parser(name, help=help_)
        p.add_argument("graph", help="edge-list file or generator spec, e.g. cycle:6")
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.set_defaults(func=func)
        return p

    graph_cmd("metrics", "closeness, residual and additional closeness", cmd_metrics)
    graph_cmd("payoff", "payoff table over (deleted link) x (added link)", cmd_payoff)
    d = graph_cmd("decide", "best link to build under decision criteria", cmd_decide)
    d.add_argument("--criteria", default="all",
                   help="comma-separated criteria or 'all': " + ", ".join(k.value for k in CriterionKind))
    d.add_argument("--alpha", type=float, default=0.5, help="Hurwicz optimism weight in [0, 1]")
    d.add_argument("--weights", help="file of 'u v p' lines giving the deletion probability of each link")

    v = sub.add_parser("verify", help="check closed forms against brute force")
    v.add_argument("target", help="'fixtures' or one of: " + ", ".join(sorted(TARGETS)))
    v.add_argument("ranges", nargs="*", help="parameter ranges such as n=1..20")
    v.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out, code = args.func(args)
    except (UsageError, DomainError, GraphParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
