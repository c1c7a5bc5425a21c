"""Load and validate scan CSV files.

The two accepted layouts are exactly the headers the scan tool emits:

* surface data: ``p,sigma,feasible,entropy,deviation``
* family data:  ``family,p,sigma1,sigma2,sigma3,feasible,entropy,deviation``

``feasible`` is the literal ``true``/``false``; ``entropy`` is empty exactly
on infeasible rows.  Loading sorts rows by their grid coordinates, so the
plotted data does not depend on row order in the file.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

SURFACE_HEADER = ("p", "sigma", "feasible", "entropy", "deviation")
LINE_HEADER = (
    "family",
    "p",
    "sigma1",
    "sigma2",
    "sigma3",
    "feasible",
    "entropy",
    "deviation",
)


class HeaderMismatch(Exception):
    """Input CSV header differs from the expected layout."""

    def __init__(self, expected: tuple[str, ...], found: tuple[str, ...]):
        self.expected = expected
        self.found = found
        super().__init__(
            f"header mismatch: expected {','.join(expected)!r}, "
            f"found {','.join(found)!r}"
        )


class BadRow(Exception):
    """A data row that cannot be parsed, with its line number."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"row {line}: {message}")


@dataclass(frozen=True)
class SurfaceRow:
    p: float
    sigma: float
    feasible: bool
    entropy: float | None
    deviation: float


@dataclass(frozen=True)
class LineRow:
    family: str
    p: float
    sigma1: float
    sigma2: float
    sigma3: float
    feasible: bool
    entropy: float | None
    deviation: float


def _float(text: str, line: int, column: str) -> float:
    try:
        return float(text)
    except ValueError as exc:
        raise BadRow(line, f"column {column!r}: not a number: {text!r}") from exc


def _flag(text: str, line: int) -> bool:
    if text == "true":
        return True
    if text == "false":
        return False
    raise BadRow(line, f"column 'feasible': expected true/false, got {text!r}")


def _entropy(text: str, feasible: bool, line: int) -> float | None:
    if text == "":
        if feasible:
            raise BadRow(line, "feasible row with empty entropy")
        return None
    if not feasible:
        raise BadRow(line, "infeasible row with non-empty entropy")
    return _float(text, line, "entropy")


def _read(path, expected: tuple[str, ...]):
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = tuple(next(reader))
        except StopIteration:
            raise HeaderMismatch(expected, ()) from None
        if header != expected:
            raise HeaderMismatch(expected, header)
        for line, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(expected):
                raise BadRow(line, f"expected {len(expected)} fields, got {len(row)}")
            yield line, row


def load_surface(path) -> list[SurfaceRow]:
    """Rows of a two-parameter surface CSV, sorted by (p, sigma)."""
    rows = []
    for line, raw in _read(path, SURFACE_HEADER):
        feasible = _flag(raw[2], line)
        rows.append(
            SurfaceRow(
                p=_float(raw[0], line, "p"),
                sigma=_float(raw[1], line, "sigma"),
                feasible=feasible,
                entropy=_entropy(raw[3], feasible, line),
                deviation=_float(raw[4], line, "deviation"),
            )
        )
    rows.sort(key=lambda r: (r.p, r.sigma))
    return rows


def load_line(path) -> list[LineRow]:
    """Rows of a family CSV, sorted by (sigma1, sigma2, sigma3)."""
    rows = []
    for line, raw in _read(path, LINE_HEADER):
        feasible = _flag(raw[5], line)
        rows.append(
            LineRow(
                family=raw[0],
                p=_float(raw[1], line, "p"),
                sigma1=_float(raw[2], line, "sigma1"),
                sigma2=_float(raw[3], line, "sigma2"),
                sigma3=_float(raw[4], line, "sigma3"),
                feasible=feasible,
                entropy=_entropy(raw[6], feasible, line),
                deviation=_float(raw[7], line, "deviation"),
            )
        )
    rows.sort(key=lambda r: (r.sigma1, r.sigma2, r.sigma3))
    return rows
