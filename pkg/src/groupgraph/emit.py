"""Deterministic DOT / JSON / CSV rendering."""

from __future__ import annotations

import csv
import io
import json

from . import __version__
from .graphs import DirectedPowerGraph, Graph
from .groups import FiniteGroup, exponent, order_spectrum


def graph_to_dot(g: Graph, name: str | None = None) -> str:
    name = name or f"{g.detail or g.kind}({g.group_label})"
    lines = [f'graph "{name}" {{']
    lines += [f"  {v};" for v in g.labels]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def directed_to_dot(D: DirectedPowerGraph) -> str:
    lines = [f'digraph "directed-power({D.group_label})" {{']
    lines += [f"  {v};" for v in range(D.vertex_count)]
    lines += [f"  {u} -> {v};" for u, v in D.arc_list()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def group_json(G: FiniteGroup) -> dict:
    return {
        "label": G.label,
        "order": G.order,
        "exponent": exponent(G),
        "order_spectrum": {str(k): v for k, v in order_spectrum(G).items()},
    }


def graph_json(g: Graph) -> dict:
    return {
        "kind": g.detail if g.kind == "difference" else g.kind,
        "identity_policy": g.identity_policy,
        "n": g.vertex_count,
        "vertices": list(g.labels),
        "edges": [list(e) for e in g.edges()],
    }


def directed_json(D: DirectedPowerGraph) -> dict:
    return {"kind": "directed-power", "identity_policy": "include", "n": D.vertex_count,
            "arcs": [list(a) for a in D.arc_list()]}


def to_json(payload: dict) -> str:
    return json.dumps({"tool_version": __version__, **payload}, indent=2) + "\n"


def to_csv(rows: list[dict], columns) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(columns))
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()
