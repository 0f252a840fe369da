"""Initial data constructors.

Three families cover every experiment: exact trigonometric samples, seeded
random trigonometric polynomials with exact L2 normalization, and the tilted
piecewise-linear interface.

Reproducibility contract for random draws (stable across platforms and
versions; changing it invalidates recorded ensembles):

* stream: splitmix64 with state update  s += 0x9E3779B97F4A7C15  and output
  mix  z ^= z>>30; z *= 0xBF58476D1CE4E5B9; z ^= z>>27;
  z *= 0x94D049BB133111EB; z ^= z>>31  (all mod 2^64);
* the stream for draw index i of a seed uses initial state (seed + i) mod 2^64;
* uniforms u = (z >> 11 + 1) * 2^-53 in (0, 1];
* normals via Box-Muller, r = sqrt(-2 ln u1), theta = 2 pi u2, giving the
  pair (r cos theta, r sin theta);
* random_trig draws one Box-Muller pair per mode j = 1..n, in order, with
  a_j = r cos theta and b_j = r sin theta.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .spectral import PeriodicGrid, RealField

__all__ = [
    "RandomTrigSpec",
    "DegenerateDraw",
    "sine_mode",
    "random_trig",
    "tilted_interface",
    "normal_stream",
]

_GOLDEN = 0x9E3779B97F4A7C15
_MASK = (1 << 64) - 1


class DegenerateDraw(Exception):
    """All random coefficients were zero; normalization is impossible."""


@dataclass(frozen=True)
class RandomTrigSpec:
    """Random trig polynomial: n modes, target discrete L2 norm, seed."""

    n_modes_used: int
    target_l2: float
    seed: int

    def __post_init__(self):
        if self.n_modes_used < 1:
            raise ValueError("n_modes_used must be positive")
        if self.target_l2 <= 0:
            raise ValueError("target_l2 must be positive")


def _splitmix64(seed: int):
    """Infinite stream of 64-bit outputs (generator)."""
    s = seed & _MASK
    while True:
        s = (s + _GOLDEN) & _MASK
        z = s
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        yield z ^ (z >> 31)


def normal_stream(seed: int, draw_index: int = 0):
    """Infinite stream of standard normals (Box-Muller pairs, documented order)."""
    bits = _splitmix64((seed + draw_index) & _MASK)
    while True:
        u1 = ((next(bits) >> 11) + 1) * 2.0**-53
        u2 = ((next(bits) >> 11) + 1) * 2.0**-53
        r = math.sqrt(-2.0 * math.log(u1))
        theta = 2.0 * math.pi * u2
        yield r * math.cos(theta)
        yield r * math.sin(theta)


def sine_mode(grid: PeriodicGrid, k: int, amp: float, phase: str = "sin") -> RealField:
    """Exact samples of amp*sin(k alpha) or amp*cos(k alpha)."""
    if abs(k) > grid.n_modes // 2:
        raise ValueError(f"mode {k} outside grid band (N={grid.n_modes})")
    if phase == "sin":
        return RealField(grid, amp * np.sin(k * grid.nodes))
    if phase == "cos":
        return RealField(grid, amp * np.cos(k * grid.nodes))
    raise ValueError(f"phase must be 'sin' or 'cos', got {phase!r}")


def random_trig(grid: PeriodicGrid, spec: RandomTrigSpec, draw_index: int = 0) -> RealField:
    """S * sum_{j=1..n} (a_j cos(j alpha) + b_j sin(j alpha)), Gaussian a_j, b_j.

    S is chosen so the discrete L2 norm sqrt(sum f_j^2 * 2pi/N) equals
    target_l2 exactly; the result has zero mean and spectrum in 1 <= |k| <= n.
    """
    n = spec.n_modes_used
    if n > grid.n_modes // 2:
        raise ValueError(f"n={n} exceeds grid band N/2={grid.n_modes // 2}")
    gauss = normal_stream(spec.seed, draw_index)
    f = np.zeros(grid.n_modes)
    for j in range(1, n + 1):
        a_j = next(gauss)
        b_j = next(gauss)
        f += a_j * np.cos(j * grid.nodes) + b_j * np.sin(j * grid.nodes)
    nrm = math.sqrt(np.sum(f * f) * grid.spacing)
    if nrm == 0.0:
        raise DegenerateDraw(f"zero draw for seed {spec.seed}")
    return RealField(grid, (spec.target_l2 / nrm) * f)


def tilted_interface(grid: PeriodicGrid, theta: float) -> RealField:
    """Piecewise-linear tilted interface with slope angle theta (radians).

        tan(theta)(x + pi)   on -pi <= x < -pi/2
        -tan(theta) x        on |x| <= pi/2
        tan(theta)(x - pi)   on pi/2 < x <= pi

    Continuous, periodic, odd, and mean-free.
    """
    if not abs(theta) < math.pi / 2:
        raise ValueError("need |theta| < pi/2")
    x = grid.nodes
    t = math.tan(theta)
    f = np.where(x < -np.pi / 2, t * (x + np.pi), np.where(x <= np.pi / 2, -t * x, t * (x - np.pi)))
    return RealField(grid, f)
