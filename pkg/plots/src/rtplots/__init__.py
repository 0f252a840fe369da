"""Figure generation from the mixing simulator's CSV artifacts."""

from .csvio import MissingColumnError, read_table, require
from .figures import KINDS, FigureSpec, growth_deviation, render

__version__ = "0.1.0"

__all__ = [
    "KINDS",
    "FigureSpec",
    "MissingColumnError",
    "growth_deviation",
    "read_table",
    "render",
    "require",
]
