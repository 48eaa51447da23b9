"""Figure rendering for nslgrad sweep CSVs (pure post-processing)."""

from .render import (DEFAULT_PANEL_BOUNDS_NM, KINDS, FigureJob, SchemaError,
                     read_csv, render)

__version__ = "0.1.0"
