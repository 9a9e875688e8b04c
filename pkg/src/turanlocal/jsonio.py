"""Deterministic JSON emission.

The standard library prints floats with ``repr`` (shortest round-trip); the
report format instead fixes 17 significant digits so that output is
byte-identical across runs regardless of how a value was produced.  Keys are
emitted in insertion order; callers build dicts already sorted except where a
format pins a field order (the graph file format puts "n" before "edges").
"""

from __future__ import annotations

import json
import math
from typing import Any


def format_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"non-finite value not representable in JSON: {x!r}")
    return format(float(x), ".17g")


def dumps(obj: Any, indent: int | None = None) -> str:
    out: list[str] = []
    _write(obj, out, indent, 0)
    return "".join(out)


def sorted_dict(d: dict) -> dict:
    """Shallow copy of d with keys in sorted order (values untouched)."""
    return {k: d[k] for k in sorted(d)}


def _write(obj: Any, out: list[str], indent: int | None, depth: int) -> None:
    if obj is None or isinstance(obj, (bool, str, int)) and not isinstance(obj, float):
        out.append(json.dumps(obj))
    elif isinstance(obj, float):
        out.append(format_float(obj))
    elif isinstance(obj, dict):
        _write_items(
            ((json.dumps(str(k)) + ": ", v) for k, v in obj.items()),
            len(obj), "{}", out, indent, depth,
        )
    elif isinstance(obj, (list, tuple)):
        _write_items((("", v) for v in obj), len(obj), "[]", out, indent, depth)
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def _write_items(items, count, braces, out, indent, depth) -> None:
    if count == 0:
        out.append(braces)
        return
    out.append(braces[0])
    pad = "" if indent is None else "\n" + " " * (indent * (depth + 1))
    sep = ", " if indent is None else ","
    first = True
    for prefix, value in items:
        if not first:
            out.append(sep)
        first = False
        out.append(pad)
        out.append(prefix)
        _write(value, out, indent, depth + 1)
    if indent is not None:
        out.append("\n" + " " * (indent * depth))
    out.append(braces[1])
