"""Figure construction from the simulator's CSV artifacts.

Five figure kinds, one per artifact family:

  timeseries      columns of timeseries.csv against time (default: linf_amplitude)
  snapshots       interface curves from snapshots/t_*.csv
  growth_overlay  mixing-layer width against the reference parabola delta*Ag*t^2
  spectrum        energy spectra from spectrum/t_*.csv on a log axis
  ensemble        mean width / amplitude with min-max bands from ensemble.csv

Rendering is read-only: input files are parsed once and never written.
Axis ranges are auto-scaled; the numeric comparisons live in the CSVs, not
in pixel placement.
"""

import math
import warnings
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .csvio import MissingColumnError, read_table, require

KINDS = ("timeseries", "snapshots", "growth_overlay", "spectrum", "ensemble")


@dataclass(frozen=True)
class FigureSpec:
    """One figure: a kind, the CSV inputs, and the image path to write.

    delta and ag only matter for growth_overlay, where the reference curve
    is delta*Ag*t^2; ag (the Atwood number times gravity) must be supplied
    by the caller because the CSV artifacts do not carry physics parameters.
    columns selects which timeseries.csv columns to draw for kind
    "timeseries".
    """

    kind: str
    inputs: tuple
    output: str
    delta: float = 0.06
    ag: float = None
    columns: tuple = ("linf_amplitude",)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown figure kind {self.kind!r}; expected one of {KINDS}")
        if not self.output:
            raise ValueError("output image path is empty")
        if not (isinstance(self.delta, (int, float)) and math.isfinite(self.delta)):
            raise ValueError(f"delta must be a finite number, got {self.delta!r}")
        if self.kind == "growth_overlay":
            if self.ag is None or not math.isfinite(self.ag) or self.ag == 0:
                raise ValueError("growth_overlay needs a finite nonzero ag (Atwood * gravity)")
        if self.kind == "timeseries" and not self.columns:
            raise ValueError("timeseries figure needs at least one column")


def growth_deviation(t, width, delta, ag):
    """max over samples of |width(t) - delta*Ag*t^2|, skipping absent widths.

    No smoothing, no interpolation: the value is computed on the sample
    points exactly as stored.
    """
    t = np.asarray(t, dtype=float)
    width = np.asarray(width, dtype=float)
    good = np.isfinite(width)
    if not good.any():
        raise ValueError("no width values to compare")
    ref = delta * ag * t[good] ** 2
    return float(np.max(np.abs(width[good] - ref)))


def _label(path):
    """Legend label for an input file: 't = 0.049' for snapshot/spectrum
    names, otherwise the parent directory (which distinguishes seeds)."""
    p = Path(path)
    if p.stem.startswith("t_"):
        return "t = " + p.stem[2:]
    return f"{p.parent.name}/{p.stem}" if p.parent.name else p.stem


def _render_timeseries(spec, tables):
    fig, ax = plt.subplots()
    for path, table in tables:
        for name in spec.columns:
            (t,) = require(table, path, "t")
            (y,) = require(table, path, name)
            if not np.isfinite(y).any():
                raise ValueError(f"{path}: column {name!r} has no values")
            label = name if len(tables) == 1 else f"{_label(path)} {name}"
            ax.plot(t, y, label=label)
    ax.set_xlabel("t")
    ax.set_ylabel(spec.columns[0] if len(spec.columns) == 1 else "value")
    ax.grid(True, alpha=0.3)
    ax.legend()
    return fig


def _render_snapshots(spec, tables):
    fig, ax = plt.subplots()
    graph_only = True
    for path, table in tables:
        if "z1" in table:
            x, y = require(table, path, "z1", "z2")
            graph_only = False
        else:
            x, y = require(table, path, "alpha", "h")
        ax.plot(x, y, label=_label(path))
    ax.set_xlabel("alpha" if graph_only else "z1")
    ax.set_ylabel("h" if graph_only else "z2")
    ax.grid(True, alpha=0.3)
    ax.legend()
    return fig


def _render_growth_overlay(spec, tables):
    fig, ax = plt.subplots()
    t_max = 0.0
    for path, table in tables:
        (t,) = require(table, path, "t")
        if "width_mean" in table:  # ensemble.csv: overlay the mean curve
            (width,) = require(table, path, "width_mean")
            lo, hi = require(table, path, "width_min", "width_max")
            ax.fill_between(t, lo, hi, alpha=0.25)
        else:
            (width,) = require(table, path, "width")
        dev = growth_deviation(t, width, spec.delta, spec.ag)
        print(f"{path}: max|width - {spec.delta:g}*Ag*t^2| = {dev:.17g}")
        ax.plot(t, width, label=_label(path))
        t_max = max(t_max, float(t[-1]))
    tt = np.linspace(0.0, t_max, 200)
    ax.plot(tt, spec.delta * spec.ag * tt**2, "k--", label=f"{spec.delta:g} Ag t^2")
    ax.set_xlabel("t")
    ax.set_ylabel("mixing-layer width")
    ax.grid(True, alpha=0.3)
    ax.legend()
    return fig


def _render_spectrum(spec, tables):
    fig, ax = plt.subplots()
    for path, table in tables:
        k, ek = require(table, path, "k", "E_k")
        # h-model spectra can dip negative (gravity term); plot magnitudes
        ax.plot(k, np.abs(ek), label=_label(path))
    ax.set_yscale("log")
    ax.set_xlabel("k")
    ax.set_ylabel("|E(k)|")
    ax.grid(True, alpha=0.3)
    ax.legend()
    return fig


def _render_ensemble(spec, tables):
    fig, (ax_w, ax_a) = plt.subplots(2, 1, sharex=True)
    for path, table in tables:
        (t,) = require(table, path, "t")
        wm, wlo, whi = require(table, path, "width_mean", "width_min", "width_max")
        am, alo, ahi = require(table, path, "linf_mean", "linf_min", "linf_max")
        ax_w.fill_between(t, wlo, whi, alpha=0.25)
        ax_w.plot(t, wm, label=_label(path))
        ax_a.fill_between(t, alo, ahi, alpha=0.25)
        ax_a.plot(t, am, label=_label(path))
    ax_w.set_ylabel("width")
    ax_a.set_ylabel("linf amplitude")
    ax_a.set_xlabel("t")
    for ax in (ax_w, ax_a):
        ax.grid(True, alpha=0.3)
    ax_w.legend()
    return fig


_RENDERERS = {
    "timeseries": _render_timeseries,
    "snapshots": _render_snapshots,
    "growth_overlay": _render_growth_overlay,
    "spectrum": _render_spectrum,
    "ensemble": _render_ensemble,
}


def render(spec):
    """Draw the figure described by spec and write it to spec.output.

    Returns the output path, or None when the input list is empty (a
    warning is issued and nothing is written).  The image format follows
    the output extension.  growth_overlay additionally prints, per input,
    the exact max deviation of the width column from delta*Ag*t^2.
    """
    if not spec.inputs:
        warnings.warn("no input files; nothing to draw", stacklevel=2)
        return None
    tables = [(path, read_table(path)) for path in spec.inputs]
    fig = _RENDERERS[spec.kind](spec, tables)
    out = Path(spec.output)
    if out.parent != Path(""):
        out.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out)
    plt.close(fig)
    return str(out)
