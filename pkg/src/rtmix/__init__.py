"""rtmix: pseudo-spectral interface dynamics on the periodic circle.

Two reduced models of Rayleigh-Taylor / Kelvin-Helmholtz mixing:

* the h-model, evolving the interface height graph h(alpha, t) together
  with the vorticity amplitude, and
* the z-model, evolving a general parameterization (alpha + dz1, z2)
  that is allowed to turn over.

Subpackages: spectral operators, model right-hand sides, an adaptive
RKF45 stepper, seeded initial data, diagnostics, and an experiment
catalog mirroring the reference simulations.
"""

from .diagnostics import (
    EnergyRecord,
    StabilityReport,
    amplitude_and_width,
    asymptotic_gap,
    carlson_check,
    dissipations,
    energy_record,
    sobolev_norm,
    stability_report,
    z_spectrum,
)
from .experiments import (
    ConfigError,
    EnsembleResult,
    ExperimentConfig,
    ExperimentResult,
    PRESET_NAMES,
    config_from_dict,
    config_to_dict,
    preset,
    run,
    run_ensemble,
)
from .initcond import DegenerateDraw, RandomTrigSpec, random_trig, sine_mode, tilted_interface
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
from .spectral import PeriodicGrid, RealField, SpectralCoeffs, dft, hilbert, idft, lambda_pow
from .timestepper import RhsFailure, StepController, StepSizeUnderflow, Trajectory, integrate

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "PeriodicGrid", "RealField", "SpectralCoeffs", "dft", "idft", "hilbert", "lambda_pow",
    "PhysParams", "ViscosityConfig", "HState", "ZState",
    "h_rhs", "h_wave_rhs", "linear_rhs", "z_rhs",
    "NonFiniteState", "DegenerateParameterization",
    "StepController", "Trajectory", "integrate", "StepSizeUnderflow", "RhsFailure",
    "RandomTrigSpec", "random_trig", "sine_mode", "tilted_interface", "DegenerateDraw",
    "EnergyRecord", "StabilityReport", "sobolev_norm", "energy_record", "dissipations",
    "stability_report", "amplitude_and_width", "asymptotic_gap", "carlson_check", "z_spectrum",
    "ExperimentConfig", "ExperimentResult", "EnsembleResult", "ConfigError",
    "PRESET_NAMES", "preset", "run", "run_ensemble", "config_to_dict", "config_from_dict",
]
