"""Byte-deterministic DOT and JSON writers.

Floats are always written with exactly six decimals so outputs compare equal
across platforms; object keys are emitted in lexicographic order.
"""
from __future__ import annotations

import json
import math

from kosnet.graphs import WeightedGraph


def _dot_id(node: str) -> str:
    return '"' + node.replace("\\", "\\\\").replace('"', '\\"') + '"'


def graph_to_dot(g: WeightedGraph) -> str:
    lines = ["graph G {"]
    lines.extend(f"  {_dot_id(n)};" for n in g.nodes)
    lines.extend(f"  {_dot_id(a)} -- {_dot_id(b)} [weight={w}];" for a, b, w in sorted(g.iter_edges()))
    lines.append("}")
    return "\n".join(lines) + "\n"


def _encode(value, indent: int, level: int) -> str:
    if value is None or isinstance(value, (bool, str)):
        return json.dumps(value, ensure_ascii=False)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"cannot encode non-finite float {value!r}")
        text = f"{value:.6f}"
        return "0.000000" if text == "-0.000000" else text
    pad = "\n" + " " * (indent * (level + 1))
    close = "\n" + " " * (indent * level)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = []
        for key in sorted(value):
            if not isinstance(key, str):
                raise TypeError(f"JSON object keys must be strings, got {key!r}")
            items.append(json.dumps(key, ensure_ascii=False) + ": " + _encode(value[key], indent, level + 1))
        return "{" + pad + ("," + pad).join(items) + close + "}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        return "[" + pad + ("," + pad).join(_encode(v, indent, level + 1) for v in value) + close + "]"
    raise TypeError(f"cannot encode {type(value).__name__}")


def canonical_json(value, indent: int = 2) -> str:
    """Serialize with sorted keys and fixed six-decimal floats, newline-terminated."""
    return _encode(value, indent, 0) + "\n"


def graph_to_json(g: WeightedGraph) -> str:
    return canonical_json({
        "nodes": list(g.nodes),
        "edges": [{"a": a, "b": b, "w": w} for a, b, w in sorted(g.iter_edges())],
    })


def export_graph(g: WeightedGraph, format: str = "dot") -> str:
    if format == "dot":
        return graph_to_dot(g)
    if format == "json":
        return graph_to_json(g)
    raise ValueError(f"unknown export format {format!r}")
