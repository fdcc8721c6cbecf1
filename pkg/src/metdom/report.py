"""Run reports: one record per analysed graph, rendered as text or one-line JSON."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .bounds import BoundEntry
from .graph import Graph, diameter, girth, laplacian_max_eigenvalue, max_degree, min_degree

OK = "Ok"
TIMEOUT = "Timeout"
ERROR = "Error"

# Field order of the JSON object; absent values are omitted.
FIELDS = ("graph_id", "n", "m", "diam", "girth", "delta", "Delta", "mu_max",
          "beta", "basis", "gamma", "dominating_set", "resolving_set", "trace",
          "bounds", "tightest", "classification", "classification_params",
          "status", "upper_bound", "message")

_int = {"type": "integer", "minimum": 0}
_ints = {"type": "array", "items": _int}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "additionalProperties": False,
    "required": ["status"],
    "properties": {
        "graph_id": {"type": "string"},
        "n": {"type": "integer", "minimum": 1},
        "m": _int,
        "diam": _int,
        "girth": {"oneOf": [{"type": "integer", "minimum": 3}, {"const": "acyclic"}]},
        "delta": _int,
        "Delta": _int,
        "mu_max": {"type": ["number", "null"]},
        "beta": _int,
        "basis": _ints,
        "gamma": _int,
        "dominating_set": _ints,
        "resolving_set": _ints,
        "trace": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["removed", "inserted", "reason"],
                "properties": {
                    "removed": _int,
                    "inserted": _int,
                    "reason": {"enum": ["false-twin", "single-vertex"]},
                },
            },
        },
        "bounds": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["name", "condition", "applicable", "value"],
                "properties": {
                    "name": {"type": "string"},
                    "condition": {"type": "string"},
                    "applicable": {"type": "boolean"},
                    "value": {"type": ["integer", "null"]},
                    "real_value": {"type": "number"},
                },
            },
        },
        "tightest": {"type": ["string", "null"]},
        "classification": {"enum": ["CompleteGraph", "CompleteBipartite", "StrictInequality"]},
        "classification_params": _ints,
        "status": {"enum": [OK, TIMEOUT, ERROR]},
        "upper_bound": _int,
        "message": {"type": "string"},
    },
}


@dataclass
class RunReport:
    graph_id: str
    values: dict = field(default_factory=dict)
    status: str = OK

    def set(self, **kw):
        self.values.update(kw)
        return self

    def as_dict(self) -> dict:
        data = dict(self.values, graph_id=self.graph_id, status=self.status)
        return {k: data[k] for k in FIELDS if data.get(k) is not None or k == "mu_max" and k in data}


def invariants(G: Graph) -> dict:
    """Structural fields shared by every report. ``mu_max`` is None when n = 1."""
    g = girth(G)
    return {
        "n": G.n,
        "m": G.m,
        "diam": diameter(G),
        "girth": "acyclic" if g == math.inf else g,
        "delta": min_degree(G),
        "Delta": max_degree(G),
        "mu_max": laplacian_max_eigenvalue(G) if G.n >= 2 else None,
    }


def bound_dict(e: BoundEntry) -> dict:
    d = {"name": e.name, "condition": e.condition, "applicable": e.applicable, "value": e.value}
    if e.real_value is not None:
        d["real_value"] = e.real_value
    return d


def emit_report(report: RunReport, as_json: bool = False) -> str:
    data = report.as_dict()
    if as_json:
        return json.dumps(data, separators=(",", ":"))
    lines = []
    for key, value in data.items():
        if key == "bounds":
            lines.append("bounds:")
            for b in value:
                shown = b["value"] if b["applicable"] else "n/a"
                extra = f" (real {b['real_value']:.6g})" if "real_value" in b else ""
                lines.append(f"  {b['name']:<18} {str(shown):>6}{extra}   [{b['condition']}]")
        elif key == "trace":
            lines.append(f"trace: {len(value)} swap(s)")
            for s in value:
                lines.append(f"  {s['removed']} -> {s['inserted']}  ({s['reason']})")
        elif key == "classification_params":
            continue
        elif key == "classification":
            params = data.get("classification_params")
            text = f"{value}({', '.join(map(str, params))})" if params else value
            lines.append(f"classification: {text}")
        elif key == "mu_max" and value is not None:
            lines.append(f"mu_max: {value:.10g}")
        elif isinstance(value, (list, tuple)):
            lines.append(f"{key}: {{{', '.join(map(str, value))}}}")
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)
