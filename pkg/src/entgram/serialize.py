"""Deterministic text output: JSON and CSV with 12-significant-digit floats.

Byte-identical reruns are a contract of the command-line tools, so floats are
formatted through one function and dictionaries keep insertion order.  The
stdlib ``json`` module cannot format floats, hence the small dumper here.
"""

from __future__ import annotations

import math

__all__ = ["format_float", "dumps_json", "dump_json"]

SIG_DIGITS = 12


def format_float(x: float) -> str:
    """Render a float with 12 significant digits (JSON-compatible)."""
    if math.isnan(x) or math.isinf(x):
        raise ValueError(f"non-finite value {x!r} cannot be serialized")
    if x == 0.0:
        return "0"  # avoid the "-0" spelling
    return f"{x:.{SIG_DIGITS}g}"


def _dumps(obj, indent: int, level: int) -> str:
    pad = " " * (indent * level)
    pad_in = " " * (indent * (level + 1))
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return format_float(obj)
    if isinstance(obj, str):
        out = obj.replace("\\", "\\\\").replace('"', '\\"')
        out = out.replace("\n", "\\n").replace("\r", "\\r").replace("\t", "\\t")
        return f'"{out}"'
    if isinstance(obj, (list, tuple)):
        if len(obj) == 0:
            return "[]"
        items = [_dumps(v, indent, level + 1) for v in obj]
        # Keep innermost numeric lists on one line for readability.
        if all(not isinstance(v, (list, tuple, dict)) for v in obj):
            return "[" + ", ".join(items) + "]"
        body = (",\n" + pad_in).join(items)
        return "[\n" + pad_in + body + "\n" + pad + "]"
    if isinstance(obj, dict):
        if len(obj) == 0:
            return "{}"
        items = [
            f'"{key}": ' + _dumps(value, indent, level + 1)
            for key, value in obj.items()
        ]
        body = (",\n" + pad_in).join(items)
        return "{\n" + pad_in + body + "\n" + pad + "}"
    raise TypeError(f"cannot serialize object of type {type(obj).__name__}")


def dumps_json(obj, indent: int = 2) -> str:
    """Deterministic JSON text (no trailing newline)."""
    return _dumps(obj, indent, 0)


def dump_json(obj, path, indent: int = 2) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps_json(obj, indent))
        fh.write("\n")
