"""Command line front end: one subcommand per figure kind.

Examples:

  rtmix-plots timeseries out/timeseries.csv -o amplitude.png
  rtmix-plots timeseries out/timeseries.csv -o gaps.pdf -c gap_h -c gap_ht
  rtmix-plots snapshots out/snapshots/t_*.csv -o interfaces.png
  rtmix-plots growth_overlay out/seed_3/timeseries.csv --ag 99.0033 -o growth.png
  rtmix-plots spectrum out/spectrum/t_0.6.csv -o spectrum.png
  rtmix-plots ensemble out/ensemble.csv -o band.png
"""

import argparse
import sys

from .csvio import MissingColumnError
from .figures import KINDS, FigureSpec, render

_HELP = {
    "timeseries": "plot timeseries.csv columns against time",
    "snapshots": "plot interface snapshots (alpha,h or alpha,z1,z2 files)",
    "growth_overlay": "plot width(t) against the reference delta*Ag*t^2",
    "spectrum": "plot k,E_k spectra on a log axis",
    "ensemble": "plot ensemble.csv mean curves with min-max bands",
}


def build_parser():
    ap = argparse.ArgumentParser(
        prog="rtmix-plots",
        description="regenerate figures from simulator CSV artifacts",
    )
    subs = ap.add_subparsers(dest="kind", required=True, metavar="kind")
    for kind in KINDS:
        p = subs.add_parser(kind, help=_HELP[kind])
        p.add_argument("inputs", nargs="*", help="input CSV files, drawn in order")
        p.add_argument("-o", "--output", required=True, help="image file to write")
        if kind == "growth_overlay":
            p.add_argument("--delta", type=float, default=0.06,
                           help="reference growth coefficient (default 0.06)")
            p.add_argument("--ag", type=float, required=True,
                           help="Atwood number times gravity for the reference curve")
        if kind == "timeseries":
            p.add_argument("-c", "--column", action="append", dest="columns",
                           metavar="NAME", help="column to plot; repeatable "
                           "(default: linf_amplitude)")
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    extra = {}
    if args.kind == "growth_overlay":
        extra = {"delta": args.delta, "ag": args.ag}
    elif args.kind == "timeseries" and args.columns:
        extra = {"columns": tuple(args.columns)}
    try:
        spec = FigureSpec(kind=args.kind, inputs=tuple(args.inputs),
                          output=args.output, **extra)
        out = render(spec)
    except (OSError, ValueError, MissingColumnError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if out is not None:
        print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
