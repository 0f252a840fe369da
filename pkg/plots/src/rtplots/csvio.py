"""Readers for the simulator's CSV artifacts.

Every artifact is a plain comma-separated file with a single header row.
Numeric cells are decimal floats; an empty cell means "not recorded for
this run" and comes back as NaN so downstream code can mask it.
"""

import csv

import numpy as np


class MissingColumnError(KeyError):
    """A required column is absent from a CSV header."""

    def __init__(self, column, path, have):
        self.column = column
        self.path = str(path)
        self.have = tuple(have)
        super().__init__(column)

    def __str__(self):
        listing = ", ".join(self.have) if self.have else "nothing"
        return f"{self.path}: missing column {self.column!r} (file has: {listing})"


def read_table(path):
    """Parse a CSV file into {column name: float array}.

    Empty cells become NaN.  Raises ValueError on an empty file or a row
    whose field count disagrees with the header.
    """
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or rows[0] == []:
        raise ValueError(f"{path}: empty file")
    header = rows[0]
    cols = {name: [] for name in header}
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise ValueError(
                f"{path}:{lineno}: expected {len(header)} fields, got {len(row)}"
            )
        for name, cell in zip(header, row):
            cols[name].append(float(cell) if cell != "" else np.nan)
    return {name: np.asarray(vals, dtype=float) for name, vals in cols.items()}


def require(table, path, *columns):
    """Return the named columns, raising MissingColumnError for absent ones."""
    for name in columns:
        if name not in table:
            raise MissingColumnError(name, path, table.keys())
    return tuple(table[name] for name in columns)
