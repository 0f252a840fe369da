"""Measured quantities: norms, energies, dissipations, stability checks.

Sobolev norms use the homogeneous spectral form ||f||_s^2 = 2 pi sum_k
|k|^(2s) |fhat(k)|^2 for s > 0 (the mean is excluded); s = 0 is the full
discrete L2 norm including the mean.  Space integrals are grid trapezoid
sums, which are spectrally accurate for periodic integrands.

The three energy laws tracked for the h-model wave form read

    e1 = ||h_t||_0^2     + sigma' ||h||_1.5^2 - A g ||h||_0.5^2
    e2 = ||h_t||_0.5^2   + sigma' ||h||_2^2   - A g ||h||_1^2
    e3 = ||h_t - <h1>||_{-0.5}^2 + sigma' ||h||_1^2 - A g ||h||_0^2

each dissipated at rate d1, d2, d3 (for e1: e1(t) + int_0^t d1 ds = e1(0)),

    d1 = A int Lambda(h_t) h_t^2,   d2 = A int h_t ((Lambda h_t)^2 + (h_t_a)^2),
    d3 = 2 A int h_t |H h_t|^2,

and the per-mode energy spectrum is E(k) = |hhat_t(k)|^2 - A g |k| |hhat(k)|^2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .models import PhysParams
from .spectral import (
    RealField,
    derivative_arr,
    dft,
    hilbert_arr,
    lambda_arr,
)

__all__ = [
    "StabilityReport",
    "EnergyRecord",
    "sobolev_norm",
    "dissipations",
    "energy_record",
    "z_spectrum",
    "stability_report",
    "amplitude_and_width",
    "asymptotic_gap",
    "carlson_check",
]


@dataclass(frozen=True)
class StabilityReport:
    lambda_min: float
    is_stable: bool
    smallness_lhs: float
    smallness_rhs: float
    satisfies_thm2: bool


@dataclass(frozen=True)
class EnergyRecord:
    t: float
    e1: float
    e2: float
    e3: float
    d1: float
    d2: float
    d3: float
    spectrum: np.ndarray


def sobolev_norm(f: RealField, s: float) -> float:
    """||f||_s; homogeneous for s > 0, plain discrete L2 (with mean) for s = 0."""
    if s < 0:
        raise ValueError("sobolev_norm requires s >= 0")
    if s == 0:
        return float(np.sqrt(np.sum(f.values**2) * f.grid.spacing))
    return _homogeneous_norm(f, s)


def _homogeneous_norm(f: RealField, s: float) -> float:
    """sqrt(2 pi sum_{k != 0} |k|^(2s) |fhat(k)|^2); accepts negative s."""
    c = dft(f).coeffs
    k = np.abs(f.grid.wavenumbers).astype(np.float64)
    nz = k > 0
    return float(np.sqrt(2.0 * np.pi * np.sum(k[nz] ** (2.0 * s) * np.abs(c[nz]) ** 2)))


def _integral(grid, values: np.ndarray) -> float:
    return float(np.sum(values) * grid.spacing)


def dissipations(h_t: RealField, atwood: float):
    """Instantaneous dissipation rates (d1, d2, d3) of the three energy laws."""
    g = h_t.grid
    v = h_t.values
    lam = lambda_arr(g, v, 1)
    dv = derivative_arr(g, v)
    hv = hilbert_arr(g, v)
    d1 = atwood * _integral(g, lam * v * v)
    d2 = atwood * _integral(g, v * (lam * lam + dv * dv))
    d3 = 2.0 * atwood * _integral(g, v * hv * hv)
    return d1, d2, d3


def energy_record(h: RealField, h_t: RealField, p: PhysParams, t: float) -> EnergyRecord:
    """Energies, dissipation rates, and per-mode spectrum at one instant."""
    if h.grid != h_t.grid:
        raise ValueError("h and h_t must share a grid")
    A, sp = p.atwood, p.sigma_prime
    ag = A * p.g
    e1 = sobolev_norm(h_t, 0) ** 2 + sp * _homogeneous_norm(h, 1.5) ** 2 - ag * _homogeneous_norm(h, 0.5) ** 2
    e2 = _homogeneous_norm(h_t, 0.5) ** 2 + sp * _homogeneous_norm(h, 2) ** 2 - ag * _homogeneous_norm(h, 1) ** 2
    e3 = _homogeneous_norm(h_t, -0.5) ** 2 + sp * _homogeneous_norm(h, 1) ** 2 - ag * sobolev_norm(h, 0) ** 2
    d1, d2, d3 = dissipations(h_t, A)

    n_half = h.grid.n_modes // 2
    ch = dft(h).coeffs[: n_half + 1]
    ct = dft(h_t).coeffs[: n_half + 1]
    k = np.arange(n_half + 1, dtype=np.float64)
    spectrum = np.abs(ct) ** 2 - ag * k * np.abs(ch) ** 2
    return EnergyRecord(t, e1, e2, e3, d1, d2, d3, spectrum)


def z_spectrum(dz1: RealField, z2: RealField) -> np.ndarray:
    """Curve energy spectrum E(k) = |dz1hat(k)|^2 + |z2hat(k)|^2, k = 0..N/2."""
    n_half = dz1.grid.n_modes // 2
    c1 = dft(dz1).coeffs[: n_half + 1]
    c2 = dft(z2).coeffs[: n_half + 1]
    return np.abs(c1) ** 2 + np.abs(c2) ** 2


def stability_report(h0: RealField, h1: RealField, p: PhysParams) -> StabilityReport:
    """Sign condition lambda = min A h1 and the smallness condition.

    The smallness comparison builds h2 = Lambda h0 + sigma Lambda^3 h0
    - d_alpha(H h1 h1) with the zero-mean part of h1 in the quadratic term
    (the constant mode of h1 belongs to the homogeneous background state,
    not the fluctuation) and checks

        ||h2||_0.5^2 + ||h1||_1^2 + sigma ||h1||_2^2 < (mean(h1)/5)^2.
    """
    if h0.grid != h1.grid:
        raise ValueError("h0 and h1 must share a grid")
    g = h0.grid
    A = p.atwood
    lambda_min = float(np.min(A * h1.values))

    h1_mean = h1.mean()
    h1f = h1.values - h1_mean
    h2 = lambda_arr(g, h0.values, 1)
    if p.sigma != 0.0:
        h2 = h2 + p.sigma * lambda_arr(g, h0.values, 3)
    h2 = h2 - derivative_arr(g, hilbert_arr(g, h1f) * h1f)
    h2f = RealField(g, h2)

    lhs = _homogeneous_norm(h2f, 0.5) ** 2 + _homogeneous_norm(h1, 1) ** 2
    if p.sigma != 0.0:
        lhs += p.sigma * _homogeneous_norm(h1, 2) ** 2
    rhs = (h1_mean / 5.0) ** 2
    stable = lambda_min > 0.0
    return StabilityReport(lambda_min, stable, lhs, rhs, stable and lhs < rhs)


def amplitude_and_width(state: RealField, reference_state: RealField):
    """(max |f|, max f(t) - max f(0)) for the height-like field f."""
    linf = float(np.max(np.abs(state.values)))
    width = float(np.max(state.values) - np.max(reference_state.values))
    return linf, width


def asymptotic_gap(h: RealField, h_t: RealField, h0_mean: float, h1_mean: float, t: float):
    """Sup-distance from (h, h_t) to the homogeneous state (h0m + h1m t, h1m)."""
    gap_h = float(np.max(np.abs(h.values - (h0_mean + h1_mean * t))))
    gap_ht = float(np.max(np.abs(h_t.values - h1_mean)))
    return gap_h, gap_ht


def carlson_check(w: RealField):
    """Both sides of ||w||_Linf^2 <= ||w||_0 ||w||_1 - (1/pi)||w||_0^2.

    Requires mean(w) = 0 (the inequality is for mean-free functions).
    """
    if abs(w.mean()) > 1e-12 * (1.0 + float(np.max(np.abs(w.values)))):
        raise ValueError("carlson_check requires a zero-mean field")
    lhs = float(np.max(np.abs(w.values))) ** 2
    n0 = sobolev_norm(w, 0)
    n1 = _homogeneous_norm(w, 1)
    rhs = n0 * n1 - n0 * n0 / np.pi
    return lhs, rhs
