"""spinring-plot: turn spinring preset CSVs into vector figures."""

from .render import EmptyDataError, FigureSpec, SchemaError, load_columns, render

__version__ = "0.1.0"
