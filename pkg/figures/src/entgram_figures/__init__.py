"""Figure rendering for scan CSV files: entropy heatmaps and family curves."""

from .csvdata import (
    BadRow,
    HeaderMismatch,
    LineRow,
    SurfaceRow,
    load_line,
    load_surface,
)
from .render import BadSpec, Curve, FigureSpec, RenderResult, render

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "BadRow",
    "BadSpec",
    "Curve",
    "FigureSpec",
    "HeaderMismatch",
    "LineRow",
    "RenderResult",
    "SurfaceRow",
    "load_line",
    "load_surface",
    "render",
]
