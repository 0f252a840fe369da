"""Command-line interface.

Subcommands
-----------
run <preset-or-config>       integrate one experiment, write artifacts
ensemble <preset-or-config>  run every seed, write per-seed artifacts + aggregates
check <preset-or-config>     evaluate the stability/smallness report, print it
presets                      list the built-in experiment catalog

Configs are YAML files with the documented key tree (see README); any
preset name can be used in place of a file.  `--override key=value`
edits the loaded tree before validation (dotted paths, YAML-parsed
values), e.g. `--override visc.epsilon=0.008`.

Artifacts (in --out, default $RTMIX_OUT or ./rtmix_out):
  timeseries.csv            one row per sample time, fixed column order
  snapshots/t_<t>.csv       interface position at each snapshot time
  spectrum/t_<t>.csv        energy spectrum at snapshot times (when requested)
  manifest.json             config echo, statuses, file inventory + sha256

Exit status: 0 on success (a reported blow-up is a result, not a
failure), 1 on configuration errors, 2 on runtime model failures
(degenerate parameterization or an unexpected stepper error); the
manifest is still written in the latter case.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from dataclasses import replace
from pathlib import Path

import numpy as np
import yaml

from . import __version__
from .experiments import (
    ConfigError,
    PRESET_NAMES,
    config_from_dict,
    config_to_dict,
    preset,
    run,
    run_ensemble,
)
from .diagnostics import stability_report
from .experiments import _initial_fields
from .models import ZState, z_rhs
from .spectral import PeriodicGrid, RealField, hilbert_arr

TIMESERIES_COLUMNS = (
    "t", "linf_amplitude", "width", "e1", "e2", "e3",
    "d1", "d2", "d3", "lambda_min", "gap_h", "gap_ht",
)


def _fmt(x) -> str:
    """17-significant-digit decimal; empty for inapplicable fields."""
    return "" if x is None else "%.17g" % x


def _tlabel(t: float) -> str:
    return "t_%g" % t


# --------------------------------------------------------------------------
# config loading


def _parse_seed_list(text: str):
    text = text.strip()
    if ".." in text:
        a, b = text.split("..", 1)
        return list(range(int(a), int(b) + 1))
    return [int(s) for s in text.split(",") if s.strip()]


def _apply_override(tree: dict, item: str):
    if "=" not in item:
        raise ConfigError("--override", f"expected key=value, got {item!r}")
    key, _, raw = item.partition("=")
    try:
        value = yaml.safe_load(raw)
    except yaml.YAMLError as exc:
        raise ConfigError(key, f"unparseable value {raw!r}: {exc}") from None
    if key == "seeds" and isinstance(value, str):
        value = _parse_seed_list(value)
    node = tree
    parts = key.split(".")
    for part in parts[:-1]:
        nxt = node.get(part)
        if not isinstance(nxt, dict):
            nxt = {}
            node[part] = nxt
        node = nxt
    node[parts[-1]] = value


def _load_config(source: str, overrides):
    """Resolve a preset name or YAML path into a validated config."""
    if source in PRESET_NAMES:
        tree = config_to_dict(preset(source))
        label = source
    else:
        path = Path(source)
        if not path.is_file():
            raise ConfigError("config", f"{source!r} is neither a preset ({', '.join(PRESET_NAMES)}) nor a file")
        try:
            tree = yaml.safe_load(path.read_text())
        except yaml.YAMLError as exc:
            raise ConfigError(str(path), f"YAML parse error: {exc}") from None
        label = str(path)
    for item in overrides or ():
        _apply_override(tree, item)
    return config_from_dict(tree), label


# --------------------------------------------------------------------------
# artifact writers


def _write(path: Path, text: str) -> bytes:
    path.parent.mkdir(parents=True, exist_ok=True)
    data = text.encode()
    path.write_bytes(data)
    return data


def _record(root: Path, path: Path, data: bytes, inventory: dict):
    inventory[path.relative_to(root).as_posix()] = {
        "bytes": len(data),
        "sha256": hashlib.sha256(data).hexdigest(),
    }


def _emit(root: Path, rel: str, text: str, inventory: dict):
    path = root / rel
    data = _write(path, text)
    _record(root, path, data, inventory)


def _timeseries_csv(rows) -> str:
    lines = [",".join(TIMESERIES_COLUMNS)]
    for row in rows:
        lines.append(",".join(_fmt(row[c]) for c in TIMESERIES_COLUMNS))
    return "\n".join(lines) + "\n"


def _timeseries_json(rows) -> str:
    return json.dumps([{c: row[c] for c in TIMESERIES_COLUMNS} for row in rows], indent=1) + "\n"


def _snapshot_indices(result):
    """Map reached snapshot times to sample indices."""
    out = []
    for t in result.config.snapshot_times:
        dist = [abs(s - t) for s in result.times]
        i = int(np.argmin(dist)) if dist else 0
        if dist and dist[i] <= 1e-9:
            out.append((t, i))
    return out


def _snapshot_table(result, grid, i):
    alpha = grid.nodes
    if result.config.model == "z_system":
        z1 = alpha + result.fields["dz1"][i]
        return ("alpha", "z1", "z2"), (alpha, z1, result.fields["z2"][i])
    return ("alpha", "h"), (alpha, result.fields["h"][i])


def _write_run_artifacts(result, root: Path, fmt: str, inventory: dict):
    rows = result.rows
    if fmt == "json":
        _emit(root, "timeseries.json", _timeseries_json(rows), inventory)
    else:
        _emit(root, "timeseries.csv", _timeseries_csv(rows), inventory)

    grid = PeriodicGrid(result.config.grid_n)
    for t, i in _snapshot_indices(result):
        names, cols = _snapshot_table(result, grid, i)
        if fmt == "json":
            body = json.dumps({n: list(map(float, c)) for n, c in zip(names, cols)}) + "\n"
            _emit(root, f"snapshots/{_tlabel(t)}.json", body, inventory)
        else:
            lines = [",".join(names)]
            for vals in zip(*cols):
                lines.append(",".join(_fmt(v) for v in vals))
            _emit(root, f"snapshots/{_tlabel(t)}.csv", "\n".join(lines) + "\n", inventory)

    if result.spectra:
        for t, i in _snapshot_indices(result):
            spec = result.spectra[i]
            ks = range(len(spec))
            if fmt == "json":
                body = json.dumps({"k": list(ks), "E_k": [float(v) for v in spec]}) + "\n"
                _emit(root, f"spectrum/{_tlabel(t)}.json", body, inventory)
            else:
                lines = ["k,E_k"] + [f"{k},{_fmt(v)}" for k, v in zip(ks, spec)]
                _emit(root, f"spectrum/{_tlabel(t)}.csv", "\n".join(lines) + "\n", inventory)


def _manifest(root: Path, payload: dict):
    path = root / "manifest.json"
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, indent=1, sort_keys=False) + "\n")


# --------------------------------------------------------------------------
# subcommands


def _out_dir(args) -> Path:
    return Path(args.out or os.environ.get("RTMIX_OUT", "rtmix_out"))


def _cmd_run(args) -> int:
    config, label = _load_config(args.config, args.override)
    root = _out_dir(args)
    started = time.time()
    inventory = {}
    result = run(config)
    _write_run_artifacts(result, root, args.format, inventory)
    _manifest(root, {
        "artifact_version": __version__,
        "command": "run",
        "source": label,
        "config": config_to_dict(config),
        "seed": result.seed,
        "status": result.status,
        "status_detail": result.status_detail,
        "accepted_steps": result.accepted,
        "rejected_steps": result.rejected,
        "duration_seconds": time.time() - started,
        "files": inventory,
    })
    print(f"{label}: {result.status} ({len(result.times)} samples, "
          f"{result.accepted} steps) -> {root}")
    if result.status_detail:
        print(f"  {result.status_detail}")
    return 0 if result.status in ("completed", "blow_up") else 2


def _cmd_ensemble(args) -> int:
    config, label = _load_config(args.config, args.override)
    if args.seeds:
        config = replace(config, seeds=tuple(_parse_seed_list(args.seeds)))
    root = _out_dir(args)
    started = time.time()
    inventory = {}
    ens = run_ensemble(config)
    for res in ens.results:
        _write_run_artifacts(res, root / f"seed_{res.seed}", args.format, {})
    # re-walk per-seed trees so the inventory covers every emitted file
    for path in sorted(root.rglob("*")):
        if path.is_file() and path.name != "manifest.json":
            _record(root, path, path.read_bytes(), inventory)
    if len(ens.times):
        lines = ["t,width_mean,width_min,width_max,linf_mean,linf_min,linf_max"]
        for i, t in enumerate(ens.times):
            vals = (t, ens.width_mean[i], ens.width_min[i], ens.width_max[i],
                    ens.linf_mean[i], ens.linf_min[i], ens.linf_max[i])
            lines.append(",".join(_fmt(v) for v in vals))
        _emit(root, "ensemble.csv", "\n".join(lines) + "\n", inventory)
    statuses = {str(r.seed): r.status for r in ens.results}
    _manifest(root, {
        "artifact_version": __version__,
        "command": "ensemble",
        "source": label,
        "config": config_to_dict(config),
        "statuses": statuses,
        "duration_seconds": time.time() - started,
        "files": inventory,
    })
    done = sum(1 for s in statuses.values() if s == "completed")
    print(f"{label}: {done}/{len(statuses)} seeds completed -> {root}")
    bad = [s for s in statuses.values() if s not in ("completed", "blow_up")]
    return 2 if bad else 0


def _check_fields(config):
    """Initial (h0, h1) pair feeding the stability report."""
    fields = _initial_fields(config, int(config.seeds[0]))
    grid = PeriodicGrid(config.grid_n)
    if config.model == "h_wave":
        return fields["h"], fields["ht"]
    if config.model in ("h_system", "h_linear"):
        h1 = RealField(grid, 0.5 * hilbert_arr(grid, fields["omega"].values))
        return fields["h"], h1
    state = ZState(fields["dz1"], fields["z2"], fields["omega"])
    _, dz2, _ = z_rhs(state, config.phys, config.visc)
    return fields["z2"], dz2


def _bool(x) -> str:
    return "true" if x else "false"


def _cmd_check(args) -> int:
    config, label = _load_config(args.config, args.override)
    h0, h1 = _check_fields(config)
    report = stability_report(h0, h1, config.phys)
    print(f"config = {label}")
    print(f"model = {config.model}")
    print(f"atwood = {config.phys.atwood!r}")
    print(f"lambda_min = {report.lambda_min!r}")
    print(f"stable = {_bool(report.is_stable)}")
    print(f"smallness_lhs = {report.smallness_lhs!r}")
    print(f"smallness_rhs = {report.smallness_rhs!r}")
    print(f"satisfies_thm2 = {_bool(report.satisfies_thm2)}")
    return 0


def _cmd_presets(args) -> int:
    width = max(len(n) for n in PRESET_NAMES)
    for name in PRESET_NAMES:
        cfg = preset(name)
        print(f"{name:<{width}}  {cfg.model:<9} N={cfg.grid_n:<4} eps={cfg.visc.epsilon:<6g} "
              f"s={cfg.visc.order_s:g} t_end={cfg.t_end:g} seeds={len(cfg.seeds)}")
    return 0


def _common(sub):
    sub.add_argument("config", help="preset name or YAML config path")
    sub.add_argument("--override", action="append", metavar="KEY=VALUE",
                     help="edit a config entry (dotted path); repeatable")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rtmix", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--version", action="version", version=f"rtmix {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    p_run = subs.add_parser("run", help="run one experiment")
    _common(p_run)
    p_run.add_argument("--out", help="output directory (default $RTMIX_OUT or ./rtmix_out)")
    p_run.add_argument("--format", choices=("csv", "json"), default="csv")
    p_run.set_defaults(func=_cmd_run)

    p_ens = subs.add_parser("ensemble", help="run every seed and aggregate")
    _common(p_ens)
    p_ens.add_argument("--seeds", help="seed list: '1..10' or '1,4,9'")
    p_ens.add_argument("--out", help="output directory (default $RTMIX_OUT or ./rtmix_out)")
    p_ens.add_argument("--format", choices=("csv", "json"), default="csv")
    p_ens.set_defaults(func=_cmd_ensemble)

    p_check = subs.add_parser("check", help="print the stability/smallness report")
    _common(p_check)
    p_check.set_defaults(func=_cmd_check)

    p_list = subs.add_parser("presets", help="list built-in experiments")
    p_list.set_defaults(func=_cmd_presets)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # runtime model failure: report, manifest if possible
        print(f"runtime error: {exc}", file=sys.stderr)
        out = getattr(args, "out", None)
        if out is not None or args.command in ("run", "ensemble"):
            try:
                _manifest(_out_dir(args), {
                    "artifact_version": __version__,
                    "command": args.command,
                    "status": "error",
                    "status_detail": str(exc),
                    "files": {},
                })
            except OSError:
                pass
        return 2


if __name__ == "__main__":
    sys.exit(main())
