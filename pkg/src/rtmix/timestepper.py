"""Adaptive Runge-Kutta-Fehlberg 4(5) integration.

Classical 6-stage Fehlberg tableau.  The embedded pair gives a per-step error
estimate (difference of the 4th- and 5th-order solutions); the 4th-order
solution is propagated.  Error control uses the mixed-tolerance max norm

    err = max_i |e_i| / (abs_tol + rel_tol*|y_i|),

a step is accepted iff err <= 1, and the step size update is
dt <- safety * dt * err^(-1/5), clamped to [dt_min, dt_max].  Steps are
clipped so every requested sample time is hit exactly (no interpolation).

Blow-up shows up as the controller driving dt below dt_min; that raises
StepSizeUnderflow carrying the partial trajectory, which callers treat as a
first-class outcome rather than a crash.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = ["StepController", "Trajectory", "StepSizeUnderflow", "RhsFailure", "integrate"]

# Fehlberg nodes (c), stage coefficients (a), and 4th/5th-order weights.
_C = (0.0, 1.0 / 4.0, 3.0 / 8.0, 12.0 / 13.0, 1.0, 1.0 / 2.0)
_A = (
    (),
    (1.0 / 4.0,),
    (3.0 / 32.0, 9.0 / 32.0),
    (1932.0 / 2197.0, -7200.0 / 2197.0, 7296.0 / 2197.0),
    (439.0 / 216.0, -8.0, 3680.0 / 513.0, -845.0 / 4104.0),
    (-8.0 / 27.0, 2.0, -3544.0 / 2565.0, 1859.0 / 4104.0, -11.0 / 40.0),
)
_B4 = (25.0 / 216.0, 0.0, 1408.0 / 2565.0, 2197.0 / 4104.0, -1.0 / 5.0, 0.0)
_B5 = (16.0 / 135.0, 0.0, 6656.0 / 12825.0, 28561.0 / 56430.0, -9.0 / 50.0, 2.0 / 55.0)
_E = tuple(b5 - b4 for b4, b5 in zip(_B4, _B5))


class StepSizeUnderflow(Exception):
    """The controller pushed dt below dt_min (typically finite-time blow-up)."""

    def __init__(self, t: float, dt: float, partial: "Trajectory"):
        self.t = t
        self.dt = dt
        self.partial = partial
        super().__init__(f"step size underflow at t = {t:.6g} (dt = {dt:.3e})")


class RhsFailure(Exception):
    """The model RHS raised during a stage evaluation."""

    def __init__(self, t: float, cause: Exception, partial: "Trajectory"):
        self.t = t
        self.cause = cause
        self.partial = partial
        super().__init__(f"rhs failed at t = {t:.6g}: {cause}")


@dataclass(frozen=True)
class StepController:
    abs_tol: float = 1e-8
    rel_tol: float = 1e-8
    dt_init: float = 1e-4
    dt_min: float = 1e-12
    dt_max: float = 1e-2
    safety: float = 0.9

    def __post_init__(self):
        if min(self.abs_tol, self.rel_tol, self.dt_init, self.dt_min, self.dt_max) <= 0:
            raise ValueError("tolerances and step bounds must be positive")
        if not self.dt_min <= self.dt_init <= self.dt_max:
            raise ValueError("need dt_min <= dt_init <= dt_max")
        if not 0.0 < self.safety < 1.0:
            raise ValueError("safety must lie in (0,1)")


@dataclass
class Trajectory:
    times: list[float] = field(default_factory=list)
    states: list[np.ndarray] = field(default_factory=list)
    accepted: int = 0
    rejected: int = 0
    final_dt: float = 0.0


def integrate(rhs, y0, t0, t_end, ctrl: StepController, sample_times) -> Trajectory:
    """Integrate y' = rhs(t, y) from t0 to t_end, recording the sample times.

    sample_times must lie in [t0, t_end]; t0 and t_end are always recorded.
    Raises StepSizeUnderflow / RhsFailure with the partial trajectory attached.
    """
    if not t_end > t0:
        raise ValueError("t_end must exceed t0")
    samples = np.unique(np.concatenate(([t0, t_end], np.asarray(sample_times, dtype=float))))
    if samples[0] < t0 or samples[-1] > t_end:
        raise ValueError("sample times must lie within [t0, t_end]")

    traj = Trajectory()
    y = np.array(y0, dtype=np.float64)
    t = t0
    traj.times.append(t)
    traj.states.append(y.copy())
    next_sample = 1  # samples[0] == t0 is already recorded

    dt = ctrl.dt_init
    k = [None] * 6
    while next_sample < len(samples):
        target = samples[next_sample]
        clipped = t + dt >= target
        dt_step = min(dt, target - t) if clipped else dt

        try:
            for i in range(6):
                yi = y
                if i:
                    acc = _A[i][0] * k[0]
                    for j in range(1, i):
                        if _A[i][j] != 0.0:
                            acc = acc + _A[i][j] * k[j]
                    yi = y + dt_step * acc
                k[i] = rhs(t + _C[i] * dt_step, yi)
        except Exception as exc:  # model-level failures carry context up
            traj.final_dt = dt_step
            raise RhsFailure(t, exc, traj) from exc

        err_vec = dt_step * sum(e * ki for e, ki in zip(_E, k) if e != 0.0)
        scale = ctrl.abs_tol + ctrl.rel_tol * np.abs(y)
        err = float(np.max(np.abs(err_vec) / scale))

        if err <= 1.0:
            y = y + dt_step * (
                _B4[0] * k[0] + _B4[2] * k[2] + _B4[3] * k[3] + _B4[4] * k[4]
            )
            t = target if clipped else t + dt_step
            traj.accepted += 1
            if clipped:
                traj.times.append(t)
                traj.states.append(y.copy())
                next_sample += 1
        else:
            traj.rejected += 1

        # Fehlberg controller; err = 0 means the estimate vanished -> dt_max.
        dt = ctrl.dt_max if err == 0.0 else ctrl.safety * dt * err ** (-0.2)
        dt = min(max(dt, ctrl.dt_min), ctrl.dt_max)
        if err > 1.0 and dt <= ctrl.dt_min:
            traj.final_dt = dt
            raise StepSizeUnderflow(t, dt, traj)

    traj.final_dt = dt
    return traj
