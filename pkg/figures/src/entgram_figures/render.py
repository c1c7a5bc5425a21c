"""Turn scan CSV files into annotated entropy figures.

Two kinds:

* ``surface2d`` — heatmap of entropy over (p, sigma) with the infeasible
  region left blank and the maximum annotated;
* ``line-family`` — entropy curves over each swept sigma parameter, the other
  swept parameters held at their values in the best row, maxima annotated.

The color/value scale is pinned to [0, log d] (d = 2 for surfaces, 4 for
family curves) so different runs are visually comparable.  The CSV does not
record the entropy log base, so the caller declares it (default: natural).
Rendering sorts by grid coordinates first: shuffling the input rows changes
nothing in the plotted data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .csvdata import LineRow, SurfaceRow, load_line, load_surface

KINDS = ("surface2d", "line-family")
FORMATS = ("png", "svg")
_SWEEP_NAMES = ("sigma1", "sigma2", "sigma3")


class BadSpec(Exception):
    """Figure description with an unusable field."""


@dataclass(frozen=True)
class FigureSpec:
    in_path: str
    kind: str
    out_path: str
    format: str = "png"
    log_base: str = "e"
    title: str | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise BadSpec(f"kind must be one of {KINDS}, got {self.kind!r}")
        if self.format not in FORMATS:
            raise BadSpec(f"format must be one of {FORMATS}, got {self.format!r}")
        if self.log_base not in ("e", "2"):
            raise BadSpec(f"log base must be 'e' or '2', got {self.log_base!r}")


@dataclass(frozen=True)
class Curve:
    """One plotted line: entropy over a swept parameter, others held."""

    swept: str
    held: dict
    x: tuple[float, ...]
    y: tuple[float | None, ...]
    peak_x: float
    peak_y: float


@dataclass(frozen=True)
class RenderResult:
    kind: str
    out_path: str
    max_entropy: float
    max_params: dict
    points_total: int
    points_masked: int
    curves: tuple[Curve, ...] = ()
    grid: tuple = ()


def _bound(d: int, log_base: str) -> float:
    return math.log(d) / (math.log(2.0) if log_base == "2" else 1.0)


def _entropy_label(log_base: str) -> str:
    return "entropy (bits)" if log_base == "2" else "entropy (nats)"


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def _save(fig, spec: FigureSpec) -> None:
    metadata = {"Date": None} if spec.format == "svg" else None
    fig.savefig(spec.out_path, format=spec.format, dpi=150, metadata=metadata)
    plt.close(fig)


def _render_surface(spec: FigureSpec, rows: list[SurfaceRow]) -> RenderResult:
    if not rows:
        raise BadSpec("no data rows to plot")
    p_values = sorted({r.p for r in rows})
    s_values = sorted({r.sigma for r in rows})
    p_index = {v: i for i, v in enumerate(p_values)}
    s_index = {v: j for j, v in enumerate(s_values)}
    grid = np.full((len(p_values), len(s_values)), np.nan)
    for r in rows:
        if r.entropy is not None:
            grid[p_index[r.p], s_index[r.sigma]] = r.entropy
    masked = np.ma.masked_invalid(grid)
    if masked.count() == 0:
        raise BadSpec("every row is infeasible; nothing to plot")

    flat = int(np.nanargmax(grid))
    bi, bj = np.unravel_index(flat, grid.shape)
    best_p, best_s = p_values[bi], s_values[bj]
    best_entropy = float(grid[bi, bj])

    vmax = _bound(2, spec.log_base)
    fig, ax = plt.subplots(figsize=(7.0, 5.0))
    cmap = plt.get_cmap("viridis").copy()
    cmap.set_bad(alpha=0.0)
    mesh = ax.pcolormesh(
        np.asarray(p_values),
        np.asarray(s_values),
        masked.T,
        cmap=cmap,
        vmin=0.0,
        vmax=vmax,
        shading="nearest",
    )
    fig.colorbar(mesh, ax=ax, label=_entropy_label(spec.log_base))
    ax.plot([best_p], [best_s], marker="*", markersize=14, color="red")
    ax.annotate(
        f"max ({_fmt(best_p)}, {_fmt(best_s)})",
        xy=(best_p, best_s),
        xytext=(8, 8),
        textcoords="offset points",
        color="red",
        fontsize=10,
    )
    ax.set_xlabel("p")
    ax.set_ylabel("|sigma|")
    ax.set_title(spec.title or "Entropy over the two-parameter family")
    _save(fig, spec)

    return RenderResult(
        kind=spec.kind,
        out_path=str(spec.out_path),
        max_entropy=best_entropy,
        max_params={"p": best_p, "sigma": best_s},
        points_total=len(rows),
        points_masked=int(np.sum(np.isnan(grid))),
        grid=tuple(map(tuple, grid.tolist())),
    )


def _swept_names(rows: list[LineRow]) -> list[str]:
    return [
        name
        for name in _SWEEP_NAMES
        if len({getattr(r, name) for r in rows}) > 1
    ]


def _render_line(spec: FigureSpec, rows: list[LineRow]) -> RenderResult:
    if not rows:
        raise BadSpec("no data rows to plot")
    swept = _swept_names(rows)
    if not swept:
        raise BadSpec("no swept sigma column (all values constant)")

    feasible = [r for r in rows if r.entropy is not None]
    if not feasible:
        raise BadSpec("every row is infeasible; nothing to plot")
    best_row = max(feasible, key=lambda r: r.entropy)

    vmax = _bound(4, spec.log_base)
    fig, ax = plt.subplots(figsize=(7.0, 5.0))
    curves = []
    for name in swept:
        held = {
            other: getattr(best_row, other) for other in swept if other != name
        }
        slice_rows = [
            r
            for r in rows
            if all(getattr(r, k) == v for k, v in held.items())
        ]
        slice_rows.sort(key=lambda r: getattr(r, name))
        xs = tuple(getattr(r, name) for r in slice_rows)
        ys = tuple(r.entropy for r in slice_rows)
        present = [(x, y) for x, y in zip(xs, ys) if y is not None]
        if not present:
            continue
        peak_x, peak_y = max(present, key=lambda t: t[1])
        label = name
        if held:
            label += " (" + ", ".join(f"{k}={_fmt(v)}" for k, v in held.items()) + ")"
        y_plot = np.array([np.nan if y is None else y for y in ys])
        line = ax.plot(xs, y_plot, marker=".", label=label)[0]
        ax.plot([peak_x], [peak_y], marker="*", markersize=12, color=line.get_color())
        ax.annotate(
            f"max at {_fmt(peak_x)}",
            xy=(peak_x, peak_y),
            xytext=(6, 6),
            textcoords="offset points",
            fontsize=9,
            color=line.get_color(),
        )
        curves.append(
            Curve(swept=name, held=held, x=xs, y=ys, peak_x=peak_x, peak_y=peak_y)
        )

    families = sorted({r.family for r in rows})
    ax.set_xlabel("swept sigma")
    ax.set_ylabel(_entropy_label(spec.log_base))
    ax.set_ylim(0.0, vmax * 1.05)
    ax.axhline(vmax, linestyle=":", linewidth=1.0, color="gray")
    ax.legend()
    ax.set_title(spec.title or f"Entropy along family {', '.join(families)}")
    _save(fig, spec)

    masked = sum(1 for r in rows if r.entropy is None)
    best_params = {name: getattr(best_row, name) for name in swept}
    return RenderResult(
        kind=spec.kind,
        out_path=str(spec.out_path),
        max_entropy=float(best_row.entropy),
        max_params=best_params,
        points_total=len(rows),
        points_masked=masked,
        curves=tuple(curves),
    )


def render(spec: FigureSpec) -> RenderResult:
    """Render one figure and report what was annotated."""
    if spec.kind == "surface2d":
        return _render_surface(spec, load_surface(spec.in_path))
    return _render_line(spec, load_line(spec.in_path))
