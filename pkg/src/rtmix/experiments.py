"""Experiment catalog and runners.

An ExperimentConfig fully determines a run: model, grid, physics, viscosity,
initial data, time window, sample times, seeds, and requested diagnostics.
`preset` returns the catalog entries (sim1..sim7 plus variants); `run`
integrates one seed; `run_ensemble` runs every seed and aggregates.

Configs serialize to a plain key-tree (config_to_dict / config_from_dict)
used verbatim by the YAML config files of the command-line interface.
Unknown keys anywhere in the tree are rejected.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from .diagnostics import asymptotic_gap, amplitude_and_width, energy_record, z_spectrum
from .initcond import RandomTrigSpec, random_trig, sine_mode, tilted_interface
from .models import (
    DegenerateParameterization,
    HState,
    NonFiniteState,
    PhysParams,
    ViscosityConfig,
    ZState,
    h_rhs,
    h_wave_rhs,
    linear_rhs,
    z_rhs,
)
from .spectral import PeriodicGrid, RealField, hilbert, hilbert_arr
from .timestepper import RhsFailure, StepController, StepSizeUnderflow, integrate

__all__ = [
    "ConfigError",
    "ExperimentConfig",
    "ExperimentResult",
    "EnsembleResult",
    "MODELS",
    "FIELDS_BY_MODEL",
    "PRESET_NAMES",
    "preset",
    "run",
    "run_ensemble",
    "build_field",
    "config_to_dict",
    "config_from_dict",
]

MODELS = ("h_system", "h_wave", "h_linear", "z_system")

FIELDS_BY_MODEL = {
    "h_system": ("h", "omega"),
    "h_wave": ("h", "ht"),
    "h_linear": ("h", "omega"),
    "z_system": ("dz1", "z2", "omega"),
}

OUTPUT_KINDS = ("amplitude", "energy", "gaps", "spectrum")


class ConfigError(Exception):
    """Invalid configuration; carries the offending field path."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


@dataclass(frozen=True)
class ExperimentConfig:
    model: str
    grid_n: int
    phys: PhysParams
    visc: ViscosityConfig
    init: dict
    t_end: float
    sample_times: tuple = ()
    snapshot_times: tuple = ()
    seeds: tuple = (1,)
    outputs: tuple = ("amplitude",)
    ctrl: StepController = StepController()

    def __post_init__(self):
        if self.model not in MODELS:
            raise ConfigError("model", f"unknown model {self.model!r}")
        n = self.grid_n
        if n < 4 or (n & (n - 1)) != 0:
            raise ConfigError("grid_n", f"{n} is not a power of two >= 4")
        if not self.t_end > 0:
            raise ConfigError("t_end", "must be positive")
        for name, times in (("sample_times", self.sample_times), ("snapshot_times", self.snapshot_times)):
            for t in times:
                if not 0.0 <= t <= self.t_end:
                    raise ConfigError(name, f"time {t} outside [0, {self.t_end}]")
        if not self.seeds:
            raise ConfigError("seeds", "need at least one seed")
        for o in self.outputs:
            if o not in OUTPUT_KINDS:
                raise ConfigError("outputs", f"unknown diagnostic {o!r}")
        want = FIELDS_BY_MODEL[self.model]
        if set(self.init.keys()) != set(want):  # order-free: YAML mappings may sort
            raise ConfigError("init", f"model {self.model} needs fields {want}, got {tuple(self.init)}")


@dataclass
class ExperimentResult:
    config: ExperimentConfig
    seed: int
    times: list
    fields: dict  # field name -> list of sample arrays
    rows: list  # per-sample diagnostics dicts (flat CSV schema)
    spectra: list  # per-sample spectrum arrays when requested, else []
    status: str  # completed | blow_up | degeneracy
    status_detail: str
    accepted: int
    rejected: int

    @property
    def height_name(self) -> str:
        return "z2" if self.config.model == "z_system" else "h"


@dataclass
class EnsembleResult:
    results: list
    times: list
    width_mean: np.ndarray
    width_min: np.ndarray
    width_max: np.ndarray
    linf_mean: np.ndarray
    linf_min: np.ndarray
    linf_max: np.ndarray


# --------------------------------------------------------------------------
# initial data


def build_field(grid: PeriodicGrid, spec: dict, seed: int, draw_index: int) -> RealField:
    """Construct one initial field from its config spec."""
    kind = spec.get("kind")
    known = {
        "zero": ("kind",),
        "sine": ("kind", "k", "amp", "offset"),
        "cosine": ("kind", "k", "amp", "offset"),
        "hilbert_sine": ("kind", "k", "amp"),
        "random_trig": ("kind", "n_modes_used", "target_l2"),
        "tilted": ("kind", "theta_deg"),
        "tilted_random": ("kind", "theta_deg", "n_modes_used", "target_l2"),
        "samples": ("kind", "path"),
    }
    if kind not in known:
        raise ConfigError("init.kind", f"unknown initial-data kind {kind!r}")
    for key in spec:
        if key not in known[kind]:
            raise ConfigError(f"init.{key}", f"unknown key for kind {kind!r}")

    if kind == "zero":
        return RealField(grid, np.zeros(grid.n_modes))
    if kind in ("sine", "cosine"):
        f = sine_mode(grid, int(spec["k"]), float(spec["amp"]), "sin" if kind == "sine" else "cos")
        off = float(spec.get("offset", 0.0))
        return RealField(grid, f.values + off) if off else f
    if kind == "hilbert_sine":
        return hilbert(sine_mode(grid, int(spec["k"]), float(spec["amp"]), "sin"))
    if kind == "random_trig":
        rspec = RandomTrigSpec(int(spec["n_modes_used"]), float(spec["target_l2"]), seed)
        return random_trig(grid, rspec, draw_index)
    if kind == "tilted":
        return tilted_interface(grid, math.radians(float(spec["theta_deg"])))
    if kind == "tilted_random":
        base = tilted_interface(grid, math.radians(float(spec["theta_deg"])))
        rspec = RandomTrigSpec(int(spec["n_modes_used"]), float(spec["target_l2"]), seed)
        pert = random_trig(grid, rspec, draw_index)
        return RealField(grid, base.values + pert.values)
    data = np.loadtxt(spec["path"], delimiter=",", ndmin=1)
    if data.shape != (grid.n_modes,):
        raise ConfigError("init.path", f"{spec['path']} holds {data.shape} values, need {grid.n_modes}")
    return RealField(grid, data)


def _initial_fields(config: ExperimentConfig, seed: int) -> dict:
    grid = PeriodicGrid(config.grid_n)
    out = {}
    draw = 0
    for name in FIELDS_BY_MODEL[config.model]:
        spec = config.init[name]
        out[name] = build_field(grid, spec, seed, draw)
        if spec.get("kind") in ("random_trig", "tilted_random"):
            draw += 1
    return out


# --------------------------------------------------------------------------
# single run


def _pack(fields: dict, names) -> np.ndarray:
    return np.concatenate([fields[n].values for n in names])


def run(config: ExperimentConfig) -> ExperimentResult:
    """Integrate the configured model for seeds[0] and collect diagnostics."""
    seed = int(config.seeds[0])
    names = FIELDS_BY_MODEL[config.model]
    init = _initial_fields(config, seed)
    grid = init[names[0]].grid
    n = grid.n_modes
    phys, visc = config.phys, config.visc

    if config.model in ("h_system", "h_linear"):
        omega0_mean = float(np.sum(init["omega"].values) * grid.spacing)

        def rhs(t, y):
            if not np.all(np.isfinite(y)):
                raise NonFiniteState("state")
            st = HState(RealField(grid, y[:n]), RealField(grid, y[n:]), omega0_mean)
            if config.model == "h_linear":
                dh, dw = linear_rhs(st, phys)
            else:
                dh, dw = h_rhs(st, phys, visc)
            return np.concatenate([dh.values, dw.values])

        ht0 = 0.5 * hilbert_arr(grid, init["omega"].values)
    elif config.model == "h_wave":
        omega0_mean = 0.0

        def rhs(t, y):
            if not np.all(np.isfinite(y)):
                raise NonFiniteState("state")
            htt = h_wave_rhs(RealField(grid, y[:n]), RealField(grid, y[n:]), phys, visc)
            return np.concatenate([y[n:], htt.values])

        ht0 = init["ht"].values
    else:  # z_system

        def rhs(t, y):
            if not np.all(np.isfinite(y)):
                raise NonFiniteState("state")
            st = ZState(RealField(grid, y[:n]), RealField(grid, y[n : 2 * n]), RealField(grid, y[2 * n :]))
            d1, d2, d3 = z_rhs(st, phys, visc)
            return np.concatenate([d1.values, d2.values, d3.values])

        ht0 = None

    y0 = _pack(init, names)
    samples = sorted(set(config.sample_times) | set(config.snapshot_times))
    status, detail = "completed", ""
    try:
        traj = integrate(rhs, y0, 0.0, config.t_end, config.ctrl, samples)
    except StepSizeUnderflow as exc:
        traj, status, detail = exc.partial, "blow_up", str(exc)
    except RhsFailure as exc:
        traj = exc.partial
        if isinstance(exc.cause, DegenerateParameterization):
            status, detail = "degeneracy", str(exc.cause)
        elif isinstance(exc.cause, NonFiniteState):
            status, detail = "blow_up", str(exc.cause)
        else:
            raise

    fields = {name: [] for name in names}
    for y in traj.states:
        for i, name in enumerate(names):
            fields[name].append(y[i * n : (i + 1) * n])

    height = "z2" if config.model == "z_system" else "h"
    hidx = names.index(height)
    ref = RealField(grid, traj.states[0][hidx * n : (hidx + 1) * n])

    lambda_min = None
    if config.model != "z_system" and ht0 is not None:
        lambda_min = float(np.min(phys.atwood * ht0))
    h0_mean = float(np.mean(traj.states[0][hidx * n : (hidx + 1) * n]))
    h1_mean = float(np.mean(ht0)) if ht0 is not None else 0.0

    want_energy = "energy" in config.outputs and config.model != "z_system"
    want_gaps = "gaps" in config.outputs and config.model != "z_system"
    want_spectrum = "spectrum" in config.outputs

    rows, spectra = [], []
    for t, y in zip(traj.times, traj.states):
        hcur = RealField(grid, y[hidx * n : (hidx + 1) * n])
        linf, width = amplitude_and_width(hcur, ref)
        row = {
            "t": t,
            "linf_amplitude": linf,
            "width": width,
            "e1": None, "e2": None, "e3": None,
            "d1": None, "d2": None, "d3": None,
            "lambda_min": lambda_min,
            "gap_h": None, "gap_ht": None,
        }
        ht_cur = None
        if config.model in ("h_system", "h_linear"):
            ht_cur = RealField(grid, 0.5 * hilbert_arr(grid, y[n:]))
        elif config.model == "h_wave":
            ht_cur = RealField(grid, y[n:])
        if want_energy:
            rec = energy_record(hcur, ht_cur, phys, t)
            row.update(e1=rec.e1, e2=rec.e2, e3=rec.e3, d1=rec.d1, d2=rec.d2, d3=rec.d3)
            if want_spectrum:
                spectra.append(rec.spectrum)
        elif want_spectrum:
            if config.model == "z_system":
                spectra.append(z_spectrum(RealField(grid, y[:n]), RealField(grid, y[n : 2 * n])))
            else:
                spectra.append(energy_record(hcur, ht_cur, phys, t).spectrum)
        if want_gaps:
            gh, ght = asymptotic_gap(hcur, ht_cur, h0_mean, h1_mean, t)
            row.update(gap_h=gh, gap_ht=ght)
        rows.append(row)

    return ExperimentResult(
        config=config,
        seed=seed,
        times=list(traj.times),
        fields=fields,
        rows=rows,
        spectra=spectra,
        status=status,
        status_detail=detail,
        accepted=traj.accepted,
        rejected=traj.rejected,
    )


def run_ensemble(config: ExperimentConfig) -> EnsembleResult:
    """Run every seed in config.seeds; aggregate width/amplitude statistics.

    Members run concurrently; results and aggregates are ordered by seed.
    Aggregation uses the runs that completed (failed members keep their
    partial results but do not enter the statistics).
    """
    singles = [replace(config, seeds=(int(s),)) for s in config.seeds]
    if len(singles) == 1:
        results = [run(singles[0])]
    else:
        with ThreadPoolExecutor(max_workers=min(8, len(singles))) as pool:
            results = list(pool.map(run, singles))

    done = [r for r in results if r.status == "completed"]
    if done:
        times = done[0].times
        widths = np.array([[row["width"] for row in r.rows] for r in done])
        linfs = np.array([[row["linf_amplitude"] for row in r.rows] for r in done])
        agg = EnsembleResult(
            results=results,
            times=list(times),
            width_mean=widths.mean(axis=0),
            width_min=widths.min(axis=0),
            width_max=widths.max(axis=0),
            linf_mean=linfs.mean(axis=0),
            linf_min=linfs.min(axis=0),
            linf_max=linfs.max(axis=0),
        )
    else:
        agg = EnsembleResult(results, [], *(np.array([]) for _ in range(6)))
    return agg


# --------------------------------------------------------------------------
# serialization

_TOP_KEYS = (
    "model", "grid_n", "phys", "visc", "init", "t_end",
    "sample_times", "snapshot_times", "seeds", "outputs", "ctrl",
)


def config_to_dict(config: ExperimentConfig) -> dict:
    return {
        "model": config.model,
        "grid_n": config.grid_n,
        "phys": {
            "g": config.phys.g,
            "sigma": config.phys.sigma,
            "rho_plus": config.phys.rho_plus,
            "rho_minus": config.phys.rho_minus,
        },
        "visc": {"epsilon": config.visc.epsilon, "order_s": config.visc.order_s},
        "init": {name: dict(spec) for name, spec in config.init.items()},
        "t_end": config.t_end,
        "sample_times": list(config.sample_times),
        "snapshot_times": list(config.snapshot_times),
        "seeds": list(config.seeds),
        "outputs": list(config.outputs),
        "ctrl": {
            "abs_tol": config.ctrl.abs_tol,
            "rel_tol": config.ctrl.rel_tol,
            "dt_init": config.ctrl.dt_init,
            "dt_min": config.ctrl.dt_min,
            "dt_max": config.ctrl.dt_max,
            "safety": config.ctrl.safety,
        },
    }


def _require_keys(d: dict, allowed, path: str):
    for key in d:
        if key not in allowed:
            raise ConfigError(f"{path}{key}", "unknown config key")


def config_from_dict(data: dict) -> ExperimentConfig:
    if not isinstance(data, dict):
        raise ConfigError("<root>", "config must be a mapping")
    _require_keys(data, _TOP_KEYS, "")
    for key in ("model", "grid_n", "phys", "visc", "init", "t_end"):
        if key not in data:
            raise ConfigError(key, "missing required key")

    def sub(name, allowed, required, cls):
        d = data.get(name, {})
        if not isinstance(d, dict):
            raise ConfigError(name, "must be a mapping")
        _require_keys(d, allowed, f"{name}.")
        for r in required:
            if r not in d:
                raise ConfigError(f"{name}.{r}", "missing required key")
        try:
            return cls(**{k: float(v) for k, v in d.items()})
        except (ValueError, TypeError) as exc:
            raise ConfigError(name, str(exc)) from None

    phys = sub("phys", ("g", "sigma", "rho_plus", "rho_minus"), ("g", "sigma", "rho_plus", "rho_minus"), PhysParams)
    visc = sub("visc", ("epsilon", "order_s"), ("epsilon",), ViscosityConfig)
    ctrl = sub("ctrl", ("abs_tol", "rel_tol", "dt_init", "dt_min", "dt_max", "safety"), (), StepController)

    init = data["init"]
    if not isinstance(init, dict):
        raise ConfigError("init", "must be a mapping of field name -> spec")
    init = {str(k): dict(v) for k, v in init.items()}

    try:
        return ExperimentConfig(
            model=str(data["model"]),
            grid_n=int(data["grid_n"]),
            phys=phys,
            visc=visc,
            init=init,
            t_end=float(data["t_end"]),
            sample_times=tuple(float(t) for t in data.get("sample_times", ())),
            snapshot_times=tuple(float(t) for t in data.get("snapshot_times", ())),
            seeds=tuple(int(s) for s in data.get("seeds", (1,))),
            outputs=tuple(str(o) for o in data.get("outputs", ("amplitude",))),
            ctrl=ctrl,
        )
    except (ValueError, TypeError) as exc:
        raise ConfigError("<config>", str(exc)) from None


# --------------------------------------------------------------------------
# preset catalog


def _times(stop: float, step: float, extra=()) -> tuple:
    base = np.arange(0.0, stop + step / 2, step)
    allt = sorted(set(np.round(base, 12).tolist()) | set(float(t) for t in extra))
    return tuple(t for t in allt if t <= stop)

_ROCKET_G = -9.8 * 2.0 * math.pi / 0.3  # upward acceleration of the rig
_NAI = {"rho_plus": 0.66, "rho_minus": 1.89}  # hexane over sodium-iodide solution

_SINGLE_MODE_INIT = {
    "h": {"kind": "sine", "k": 3, "amp": 1.0},
    "omega": {"kind": "hilbert_sine", "k": 2, "amp": 2.0},
}


def _sim1(n, eps, s):
    return ExperimentConfig(
        model="h_system",
        grid_n=n,
        phys=PhysParams(g=9.8, sigma=0.0, rho_plus=1.0, rho_minus=1.5),
        visc=ViscosityConfig(epsilon=eps, order_s=s),
        init=dict(_SINGLE_MODE_INIT),
        t_end=2.64,
        sample_times=_times(2.64, 0.01, (1.95, 2.4)),
        snapshot_times=(0.0, 1.95, 2.4),
        outputs=("amplitude", "energy"),
    )


def _catalog() -> dict:
    cat = {}
    cat["sim1"] = _sim1(128, 0.01, 3.0)
    cat["sim1b"] = _sim1(128, 0.008, 3.0)
    cat["sim1c"] = _sim1(256, 0.008, 3.0)
    cat["sim1d"] = _sim1(128, 0.04, 2.0)

    cat["sim2"] = ExperimentConfig(
        model="h_system",
        grid_n=128,
        phys=PhysParams(g=9.8, sigma=0.0, rho_plus=1.23, rho_minus=1027.0),
        visc=ViscosityConfig(epsilon=0.05, order_s=3.0),
        init=dict(_SINGLE_MODE_INIT),
        t_end=0.77,
        sample_times=_times(0.77, 0.005, (0.2, 0.45, 0.7)),
        snapshot_times=(0.0, 0.2, 0.45, 0.7),
        outputs=("amplitude", "energy", "spectrum"),
    )
    cat["sim2_linear"] = replace(cat["sim2"], model="h_linear", outputs=("amplitude",))

    cat["sim3"] = ExperimentConfig(
        model="h_system",
        grid_n=128,
        phys=PhysParams(g=9.8, sigma=0.0, rho_plus=10.0, rho_minus=1.0),
        visc=ViscosityConfig(epsilon=0.05, order_s=3.0),
        init=dict(_SINGLE_MODE_INIT),
        t_end=0.5,
        sample_times=_times(0.5, 0.0025, (0.05, 0.1, 0.15, 0.2)),
        snapshot_times=(0.0, 0.05, 0.1, 0.15, 0.2),
        outputs=("amplitude", "energy"),
    )

    cat["sim4"] = ExperimentConfig(
        model="h_wave",
        grid_n=128,
        phys=PhysParams(g=9.8, sigma=0.0, rho_plus=0.0, rho_minus=1.0),
        visc=ViscosityConfig(epsilon=0.0, order_s=3.0),
        init={
            "h": {"kind": "cosine", "k": 1, "amp": 0.1},
            "ht": {"kind": "sine", "k": 1, "amp": 0.1, "offset": -1.0},
        },
        t_end=20.0,
        sample_times=_times(20.0, 0.05),
        snapshot_times=(0.0, 1.0, 5.0, 10.0, 20.0),
        outputs=("amplitude", "energy", "gaps"),
    )

    rocket = PhysParams(g=_ROCKET_G, sigma=0.0, **_NAI)
    cat["sim5_h"] = ExperimentConfig(
        model="h_system",
        grid_n=128,
        phys=rocket,
        visc=ViscosityConfig(epsilon=0.05, order_s=2.0),
        init={
            "h": {"kind": "random_trig", "n_modes_used": 50, "target_l2": math.pi / 100},
            "omega": {"kind": "zero"},
        },
        t_end=0.165,
        sample_times=_times(0.165, 0.0015, (0.02, 0.04, 0.06, 0.08)),
        snapshot_times=(0.0, 0.02, 0.04, 0.06, 0.08),
        seeds=tuple(range(1, 11)),
    )
    cat["sim5_h_novisc"] = replace(
        cat["sim5_h"],
        phys=PhysParams(g=_ROCKET_G, sigma=0.005, **_NAI),
        visc=ViscosityConfig(epsilon=0.0, order_s=2.0),
        init={
            "h": {"kind": "random_trig", "n_modes_used": 30, "target_l2": math.pi / 1000},
            "omega": {"kind": "zero"},
        },
        t_end=0.066,
        sample_times=_times(0.066, 0.0015),
        snapshot_times=(0.0,),
    )
    cat["sim5_z"] = ExperimentConfig(
        model="z_system",
        grid_n=512,
        phys=rocket,
        visc=ViscosityConfig(epsilon=0.01, order_s=2.0),
        init={
            "dz1": {"kind": "zero"},
            "z2": {"kind": "random_trig", "n_modes_used": 30, "target_l2": math.pi / 1000},
            "omega": {"kind": "zero"},
        },
        t_end=0.167,
        sample_times=_times(0.167, 0.0015, (0.049, 0.099, 0.149)),
        snapshot_times=(0.0, 0.049, 0.099, 0.149),
        seeds=tuple(range(1, 11)),
    )
    cat["sim5_hz"] = ExperimentConfig(
        model="h_system",
        grid_n=512,
        phys=rocket,
        visc=ViscosityConfig(epsilon=0.05, order_s=2.0),
        init={
            "h": {"kind": "random_trig", "n_modes_used": 30, "target_l2": math.pi / 1000},
            "omega": {"kind": "zero"},
        },
        t_end=0.165,
        sample_times=_times(0.165, 0.0015),
        snapshot_times=(0.0,),
        seeds=tuple(range(1, 11)),
    )

    tilted_h = {
        "h": {"kind": "tilted_random", "theta_deg": 5.7, "n_modes_used": 30, "target_l2": math.pi / 1000},
        "omega": {"kind": "zero"},
    }
    cat["sim6_h"] = ExperimentConfig(
        model="h_system",
        grid_n=512,
        phys=rocket,
        visc=ViscosityConfig(epsilon=0.25, order_s=2.0),
        init=tilted_h,
        t_end=0.315,
        sample_times=_times(0.315, 0.0035, (0.069, 0.139, 0.209, 0.22, 0.286)),
        snapshot_times=(0.0, 0.069, 0.139, 0.209, 0.22, 0.286),
        seeds=tuple(range(1, 11)),
    )
    cat["sim6_z"] = ExperimentConfig(
        model="z_system",
        grid_n=512,
        phys=rocket,
        visc=ViscosityConfig(epsilon=0.05, order_s=2.0),
        init={
            "dz1": {"kind": "zero"},
            "z2": {"kind": "tilted_random", "theta_deg": 5.7, "n_modes_used": 30, "target_l2": math.pi / 1000},
            "omega": {"kind": "zero"},
        },
        t_end=0.315,
        sample_times=_times(0.315, 0.0035, (0.069, 0.139, 0.209, 0.22, 0.286)),
        snapshot_times=(0.0, 0.069, 0.139, 0.209, 0.22, 0.286),
        seeds=tuple(range(1, 11)),
    )

    cat["sim7"] = ExperimentConfig(
        model="z_system",
        grid_n=256,
        phys=PhysParams(g=9.8, sigma=0.0, rho_plus=1.0, rho_minus=1.0),
        visc=ViscosityConfig(epsilon=0.01, order_s=2.0),
        init={
            "dz1": {"kind": "sine", "k": 1, "amp": -1.0},
            "z2": {"kind": "sine", "k": 1, "amp": 0.5},
            "omega": {"kind": "cosine", "k": 1, "amp": 10.0},
        },
        t_end=0.66,
        sample_times=_times(0.66, 0.005, (0.2, 0.4, 0.6)),
        snapshot_times=(0.0, 0.2, 0.4, 0.6),
        outputs=("amplitude", "spectrum"),
    )
    cat["sim7_novisc"] = replace(cat["sim7"], visc=ViscosityConfig(epsilon=0.0, order_s=2.0))
    return cat


PRESET_NAMES = tuple(_catalog().keys())


def preset(name: str) -> ExperimentConfig:
    """Catalog lookup; unknown names raise ConfigError."""
    cat = _catalog()
    if name not in cat:
        raise ConfigError("preset", f"unknown preset {name!r} (known: {', '.join(cat)})")
    return cat[name]
