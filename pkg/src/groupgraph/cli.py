"""Command line entry point.

    groupgraph build      --group C6 --graph power --format dot
    groupgraph invariants --group C12 --graph power --format json
    groupgraph verify     --group S3 --theorems all --format json
    groupgraph catalog    --max-order 32 --format csv

Exit codes: 0 success, 1 at least one theorem failed, 2 usage or parse error.
Nothing is written when a command fails.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass, field

from .catalog import CSV_COLUMNS, catalog_rows
from .classify import THEOREMS, resolve_theorems, verify_theorems
from .emit import (
    directed_json,
    directed_to_dot,
    graph_json,
    graph_to_dot,
    group_json,
    to_csv,
    to_json,
)
from .errors import GroupGraphError
from .graphs import build_graph, difference_graph, directed_power_graph, prime_graph
from .groups import build_group
from .invariants import PerfectnessParams, invariant_report, power_omega_chi_formula
from .parser import parse_group_spec

DEFAULT_MAX_ORDER = 2000
MAX_ORDER_ENV = "GROUPGRAPH_MAX_ORDER"

GRAPH_CHOICES = ("power", "enhanced", "commuting", "prime", "directed",
                 "commuting-power", "enhanced-power", "commuting-enhanced")


class UsageError(GroupGraphError):
    pass


def max_order_limit() -> int:
    raw = os.environ.get(MAX_ORDER_ENV)
    if raw is None:
        return DEFAULT_MAX_ORDER
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{MAX_ORDER_ENV} must be an integer, got {raw!r}") from None


@dataclass
class RunConfig:
    command: str
    group: str | None = None
    graphs: list[str] = field(default_factory=lambda: ["power"])
    identity_policy: str = "include"
    fmt: str = "json"
    theorems: str = "all"
    perfectness: PerfectnessParams = field(default_factory=PerfectnessParams)
    probe_perfectness: bool = True
    max_order: int = 32
    jobs: int = 1
    output: str | None = None


def _load_group(cfg: RunConfig):
    if not cfg.group:
        raise UsageError(f"{cfg.command} needs --group")
    spec = parse_group_spec(cfg.group)
    limit = max_order_limit()
    if spec.order > limit:
        raise UsageError(f"group {spec.label} has order {spec.order} > limit {limit} (set {MAX_ORDER_ENV})")
    return build_group(spec)


def _make_graph(G, kind: str, policy: str):
    if kind == "prime":
        return prime_graph(G)
    if kind == "directed":
        return directed_power_graph(G)
    if "-" in kind:
        big, small = kind.split("-")
        return difference_graph(build_graph(G, big, policy), build_graph(G, small, policy))
    return build_graph(G, kind, policy)


def _build(cfg: RunConfig) -> tuple[str, int]:
    G = _load_group(cfg)
    graphs = [_make_graph(G, k, cfg.identity_policy) for k in cfg.graphs]
    if cfg.fmt == "dot":
        return "".join(directed_to_dot(g) if kind == "directed" else graph_to_dot(g)
                       for kind, g in zip(cfg.graphs, graphs)), 0
    if cfg.fmt == "json":
        items = [directed_json(g) if kind == "directed" else graph_json(g) for kind, g in zip(cfg.graphs, graphs)]
        payload = {"group": group_json(G)}
        if len(items) == 1:
            payload["graph"] = items[0]
        else:
            payload["graphs"] = items
        return to_json(payload), 0
    rows = []
    for kind, g in zip(cfg.graphs, graphs):
        pairs = g.arc_list() if kind == "directed" else g.edges()
        rows += [{"group": G.label, "kind": kind, "u": u, "v": v} for u, v in pairs]
    return to_csv(rows, ("group", "kind", "u", "v")), 0


def _invariants(cfg: RunConfig) -> tuple[str, int]:
    if cfg.fmt == "dot":
        raise UsageError("invariants supports --format json or csv")
    G = _load_group(cfg)
    formula = power_omega_chi_formula(G)
    chain = {"exponent": formula.exponent, "best_chain": list(formula.best_chain), "value": formula.value}
    entries = []
    for kind in cfg.graphs:
        if kind == "directed":
            raise UsageError("invariants are defined for undirected graphs only")
        g = _make_graph(G, kind, cfg.identity_policy)
        report = invariant_report(g, G, cfg.perfectness, cfg.probe_perfectness)
        entries.append((kind, g, report))
    if cfg.fmt == "json":
        payload = {"group": group_json(G)}
        if len(entries) == 1:
            kind, g, report = entries[0]
            payload["graph"] = graph_json(g)
            payload["invariants"] = report.as_dict()
        else:
            payload["graphs"] = [graph_json(g) for _, g, _ in entries]
            payload["invariants"] = [r.as_dict() for _, _, r in entries]
        payload["chain_formula"] = chain
        return to_json(payload), 0
    columns = ("group", "kind", "identity_policy", "omega", "chi", "alpha", "gamma", "gamma_exact", "diameter",
               "components", "perfectness", "chain_value", "chain")
    rows = []
    for kind, g, report in entries:
        d = report.as_dict()
        rows.append({
            "group": G.label, "kind": kind, "identity_policy": g.identity_policy,
            "omega": d["omega"], "chi": d["chi"], "alpha": d["alpha"], "gamma": d["gamma"],
            "gamma_exact": str(d["gamma_exact"]).lower(), "diameter": d["diameter"], "components": d["components"],
            "perfectness": report.perfect.label if report.perfect else "",
            "chain_value": formula.value, "chain": " ".join(map(str, formula.best_chain)),
        })
    return to_csv(rows, columns), 0


def _verify(cfg: RunConfig) -> tuple[str, int]:
    if cfg.fmt == "dot":
        raise UsageError("verify supports --format json or csv")
    try:
        selection = resolve_theorems(cfg.theorems)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    G = _load_group(cfg)
    reports = verify_theorems(G, selection, cfg.perfectness)
    code = 0 if all(r.passed for r in reports) else 1
    if cfg.fmt == "json":
        return to_json({"group": group_json(G), "theorems": [r.as_dict() for r in reports]}), code
    rows = [{"group": r.group, "theorem": r.theorem, "status": r.status, "flagged": str(r.flagged).lower()}
            for r in reports]
    return to_csv(rows, ("group", "theorem", "status", "flagged")), code


def _catalog(cfg: RunConfig) -> tuple[str, int]:
    limit = max_order_limit()
    if not 1 <= cfg.max_order <= limit:
        raise UsageError(f"--max-order must be in 1..{limit}")
    if cfg.fmt == "dot":
        raise UsageError("catalog supports --format csv or json")
    rows = catalog_rows(cfg.max_order, cfg.jobs)
    if cfg.fmt == "csv":
        return to_csv(rows, CSV_COLUMNS), 0
    return to_json({"catalog": {"max_order": cfg.max_order, "rows": rows}}), 0


COMMANDS = {"build": _build, "invariants": _invariants, "verify": _verify, "catalog": _catalog}


def run(cfg: RunConfig, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        text, code = COMMANDS[cfg.command](cfg)
    except GroupGraphError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="groupgraph", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats, default_format):
        p.add_argument("--format", dest="fmt", choices=formats, default=default_format)
        p.add_argument("--output", "-o", help="write here instead of standard output")

    def perfect_opts(p):
        p.add_argument("--samples", type=int, default=200)
        p.add_argument("--max-induced-size", type=_positive, default=12)
        p.add_argument("--max-hole-length", type=_positive, default=9)
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("build", help="emit graphs of a group")
    p.add_argument("--group", required=True, help="group spec, e.g. C6, D8, Q16, S4, E2^3, C2xC4, C7:C3")
    p.add_argument("--graph", action="append", choices=GRAPH_CHOICES)
    p.add_argument("--identity", choices=("include", "exclude"), default="include")
    common(p, ("dot", "json", "csv"), "dot")

    p = sub.add_parser("invariants", help="exact invariants of a graph of a group")
    p.add_argument("--group", required=True)
    p.add_argument("--graph", action="append", choices=[c for c in GRAPH_CHOICES if c != "directed"])
    p.add_argument("--identity", choices=("include", "exclude"), default="include")
    p.add_argument("--no-perfectness", action="store_true", help="skip the perfectness probe")
    perfect_opts(p)
    common(p, ("json", "csv"), "json")

    p = sub.add_parser("verify", help="check the theorems on a group")
    p.add_argument("--group", required=True)
    p.add_argument("--theorems", default="all", help="comma-separated ids or 'all': " + ", ".join(THEOREMS))
    perfect_opts(p)
    common(p, ("json", "csv"), "json")

    p = sub.add_parser("catalog", help="sweep the built-in catalog")
    p.add_argument("--max-order", type=_positive, default=32)
    p.add_argument("--jobs", type=_positive, default=1)
    common(p, ("csv", "json"), "csv")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command, fmt=args.fmt, output=args.output)
    cfg.group = getattr(args, "group", None)
    if getattr(args, "graph", None):
        cfg.graphs = args.graph
    cfg.identity_policy = getattr(args, "identity", "include")
    cfg.theorems = getattr(args, "theorems", "all")
    if hasattr(args, "samples"):
        cfg.perfectness = PerfectnessParams(args.samples, args.max_induced_size, args.max_hole_length, args.seed)
    cfg.probe_perfectness = not getattr(args, "no_perfectness", False)
    cfg.max_order = getattr(args, "max_order", cfg.max_order)
    cfg.jobs = getattr(args, "jobs", 1)
    return cfg


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return run(config_from_args(args))


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
