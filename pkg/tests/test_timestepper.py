"""Adaptive RKF45: accuracy, order, sampling, and failure handling."""

import numpy as np
import pytest

from rtmix.timestepper import (
    RhsFailure,
    StepController,
    StepSizeUnderflow,
    Trajectory,
    integrate,
)

TIGHT = StepController(abs_tol=1e-10, rel_tol=1e-10)


def test_controller_validation():
    with pytest.raises(ValueError):
        StepController(abs_tol=0.0)
    with pytest.raises(ValueError):
        StepController(dt_init=1.0, dt_max=0.5)
    with pytest.raises(ValueError):
        StepController(dt_min=1e-3, dt_init=1e-4)
    with pytest.raises(ValueError):
        StepController(safety=1.0)


def test_time_interval_validation():
    rhs = lambda t, y: y
    with pytest.raises(ValueError):
        integrate(rhs, [1.0], 1.0, 1.0, TIGHT, [])
    with pytest.raises(ValueError):
        integrate(rhs, [1.0], 0.0, 1.0, TIGHT, [2.0])
    with pytest.raises(ValueError):
        integrate(rhs, [1.0], 0.0, 1.0, TIGHT, [-0.5])


def test_exponential():
    traj = integrate(lambda t, y: y, [1.0], 0.0, 1.0, TIGHT, [])
    assert traj.times == [0.0, 1.0]
    assert traj.states[-1][0] == pytest.approx(np.e, abs=1e-8)
    assert traj.accepted > 0
    assert traj.final_dt > 0


def test_harmonic_oscillator_full_period():
    def rhs(t, y):
        return np.array([y[1], -y[0]])

    traj = integrate(rhs, [1.0, 0.0], 0.0, 2 * np.pi, TIGHT, [np.pi])
    mid = traj.states[traj.times.index(np.pi)]
    assert mid[0] == pytest.approx(-1.0, abs=1e-7)
    np.testing.assert_allclose(traj.states[-1], [1.0, 0.0], atol=1e-7)


def test_sample_times_recorded_exactly():
    samples = [0.1, 0.25, 0.5, 0.75]
    traj = integrate(lambda t, y: -y, [1.0], 0.0, 1.0, TIGHT, samples)
    assert traj.times == [0.0] + samples + [1.0]
    for t, y in zip(traj.times, traj.states):
        assert y[0] == pytest.approx(np.exp(-t), abs=1e-9)


def test_duplicate_samples_collapse():
    traj = integrate(lambda t, y: y, [1.0], 0.0, 1.0, TIGHT, [0.5, 0.5, 1.0])
    assert traj.times == [0.0, 0.5, 1.0]


def test_determinism():
    def rhs(t, y):
        return np.sin(y) + t

    a = integrate(rhs, [0.3], 0.0, 2.0, TIGHT, [0.5, 1.5])
    b = integrate(rhs, [0.3], 0.0, 2.0, TIGHT, [0.5, 1.5])
    assert a.times == b.times
    assert a.accepted == b.accepted and a.rejected == b.rejected
    for ya, yb in zip(a.states, b.states):
        assert np.array_equal(ya, yb)


def test_convergence_order():
    """Propagated solution is 4th order: error ~ h^4 as tolerances tighten.

    dt_max must not bind, or every run would use the same step size.
    """
    errs, steps = [], []
    for tol in (1e-5, 1e-6, 1e-7, 1e-8, 1e-9):
        ctrl = StepController(abs_tol=tol, rel_tol=tol, dt_init=1e-3, dt_max=1.0)
        traj = integrate(lambda t, y: y, [1.0], 0.0, 2.0, ctrl, [])
        errs.append(abs(traj.states[-1][0] - np.exp(2.0)))
        steps.append(2.0 / traj.accepted)
    order = np.polyfit(np.log(steps), np.log(errs), 1)[0]
    assert order >= 4.0, f"observed order {order:.2f}"


def test_rejected_steps_counted():
    # a kick at t = 1 forces error-control rejections
    def rhs(t, y):
        return np.array([100.0 / (1e-4 + abs(t - 1.0))])

    ctrl = StepController(abs_tol=1e-6, rel_tol=1e-6, dt_init=1e-2, dt_max=0.5)
    traj = integrate(rhs, [0.0], 0.0, 2.0, ctrl, [])
    assert traj.rejected > 0


def test_blow_up_raises_underflow_with_partial():
    # y' = y^2 from y(0) = 1 blows up at t = 1
    with pytest.raises(StepSizeUnderflow) as err:
        integrate(lambda t, y: y * y, [1.0], 0.0, 2.0, StepController(), [0.5])
    exc = err.value
    assert 0.9 < exc.t < 1.1
    assert isinstance(exc.partial, Trajectory)
    assert exc.partial.times[0] == 0.0
    assert 0.5 in exc.partial.times  # samples reached before the failure survive
    # exact solution 1/(1-t) at the last recorded sample
    assert exc.partial.states[-1][0] == pytest.approx(2.0, abs=1e-6)


def test_rhs_failure_carries_cause_and_partial():
    class Boom(Exception):
        pass

    def rhs(t, y):
        if t > 0.5:
            raise Boom("bad state")
        return -y

    with pytest.raises(RhsFailure) as err:
        integrate(rhs, [1.0], 0.0, 1.0, TIGHT, [0.25])
    exc = err.value
    assert isinstance(exc.cause, Boom)
    assert exc.t <= 0.6
    assert 0.25 in exc.partial.times


def test_vector_state_shape_preserved():
    y0 = np.arange(6, dtype=float)
    traj = integrate(lambda t, y: np.zeros_like(y), y0, 0.0, 1.0, TIGHT, [])
    assert traj.states[-1].shape == (6,)
    np.testing.assert_array_equal(traj.states[-1], y0)
