"""Norms, energies, dissipations, stability and embedding checks."""

import numpy as np
import pytest

from rtmix.diagnostics import (
    amplitude_and_width,
    asymptotic_gap,
    carlson_check,
    dissipations,
    energy_record,
    sobolev_norm,
    stability_report,
    z_spectrum,
)
from rtmix.models import PhysParams
from rtmix.spectral import PeriodicGrid, RealField


def field(grid, values):
    return RealField(grid, np.asarray(values, dtype=float))


# ---------------------------------------------------------------------------
# norms


def test_sobolev_norm_rejects_negative_order():
    f = field(PeriodicGrid(8), np.zeros(8))
    with pytest.raises(ValueError):
        sobolev_norm(f, -0.5)


def test_l2_norm_closed_form():
    g = PeriodicGrid(64)
    # ||a sin(k x)||_0 = a sqrt(pi), constants contribute c sqrt(2 pi)
    f = field(g, 2.0 * np.sin(3 * g.nodes))
    assert sobolev_norm(f, 0) == pytest.approx(2.0 * np.sqrt(np.pi), rel=1e-13)
    c = field(g, np.full(64, 1.5))
    assert sobolev_norm(c, 0) == pytest.approx(1.5 * np.sqrt(2 * np.pi), rel=1e-13)


@pytest.mark.parametrize("s", [0.5, 1.0, 1.5, 2.0])
def test_homogeneous_norm_closed_form(s):
    g = PeriodicGrid(64)
    # ||a sin(k x)||_s = a k^s sqrt(pi); the mean never contributes for s > 0
    for k, a in ((1, 1.0), (3, 2.0), (7, 0.25)):
        f = field(g, a * np.sin(k * g.nodes) + 5.0)
        assert sobolev_norm(f, s) == pytest.approx(a * k**s * np.sqrt(np.pi), rel=1e-12)


def test_norm_pythagoras_across_modes():
    g = PeriodicGrid(64)
    f = field(g, np.sin(g.nodes) + 0.5 * np.cos(4 * g.nodes))
    want = np.sqrt(np.pi * (1.0 + 0.25 * 4.0**3))
    assert sobolev_norm(f, 1.5) == pytest.approx(want, rel=1e-12)


# ---------------------------------------------------------------------------
# dissipation rates


def test_dissipations_closed_form():
    """v = sin a + cos 2a gives (-2 pi A, -4 pi A, -pi A) by direct integration."""
    g = PeriodicGrid(64)
    v = field(g, np.sin(g.nodes) + np.cos(2 * g.nodes))
    atwood = 0.5
    d1, d2, d3 = dissipations(v, atwood)
    assert d1 == pytest.approx(-2 * np.pi * atwood, rel=1e-12)
    assert d2 == pytest.approx(-4 * np.pi * atwood, rel=1e-12)
    assert d3 == pytest.approx(-np.pi * atwood, rel=1e-12)


def test_dissipations_scale_linearly_in_atwood():
    g = PeriodicGrid(32)
    rng = np.random.default_rng(0)
    v = field(g, rng.standard_normal(32))
    one = dissipations(v, 1.0)
    half = dissipations(v, 0.5)
    for a, b in zip(one, half):
        assert b == pytest.approx(0.5 * a, rel=1e-13)


def oracle_d1(evaluate, n, atwood):
    """Double-sum quadrature of A int Lambda(v) v^2 from the periodic kernel.

        Lambda v(a) = (1/4 pi) pv-int (v(a) - v(b)) / sin^2((a - b)/2) db

    symmetrized over (a, b):

        d1 = (A/8 pi) int int (v(a) - v(b))^2 (v(a) + v(b)) / sin^2((a - b)/2)

    evaluated by a trapezoid double sum with b on a half-shifted lattice so
    the (integrable-after-symmetrization) diagonal is never sampled.  Only
    needs pointwise values of v: no FFT, no shared code with the package.
    """
    da = 2.0 * np.pi / n
    a = -np.pi + da * np.arange(n)
    b = a + da / 2.0
    va = evaluate(a)[:, None]
    vb = evaluate(b)[None, :]
    kern = np.sin((a[:, None] - b[None, :]) / 2.0) ** 2
    integrand = (va - vb) ** 2 * (va + vb) / kern
    return atwood * np.sum(integrand) * da * da / (8.0 * np.pi)


def test_d1_matches_double_sum_oracle():
    n = 256
    rng = np.random.default_rng(1)
    coeffs = [(k, *(rng.standard_normal(2) / k)) for k in range(1, 21)]

    def evaluate(x):
        return sum(ak * np.cos(k * x) + bk * np.sin(k * x) for k, ak, bk in coeffs)

    g = PeriodicGrid(n)
    vf = field(g, evaluate(g.nodes))
    atwood = -0.48
    d1 = dissipations(vf, atwood)[0]
    assert abs(d1 - oracle_d1(evaluate, n, atwood)) < 1e-6


# ---------------------------------------------------------------------------
# energies


def test_energy_record_closed_form():
    g = PeriodicGrid(64)
    a, b, k = 0.3, 0.7, 2
    p = PhysParams(g=9.8, sigma=0.1, rho_plus=1.0, rho_minus=3.0)
    h = field(g, a * np.sin(k * g.nodes))
    ht = field(g, b * np.sin(k * g.nodes))
    rec = energy_record(h, ht, p, 1.25)
    ag, sp = p.atwood * p.g, p.sigma_prime
    pi = np.pi
    assert rec.t == 1.25
    assert rec.e1 == pytest.approx(b**2 * pi + sp * a**2 * k**3 * pi - ag * a**2 * k * pi, rel=1e-12)
    assert rec.e2 == pytest.approx(b**2 * k * pi + sp * a**2 * k**4 * pi - ag * a**2 * k**2 * pi, rel=1e-12)
    assert rec.e3 == pytest.approx(b**2 / k * pi + sp * a**2 * k**2 * pi - ag * a**2 * pi, rel=1e-12)
    # spectrum: |ht_hat|^2 - A g k |h_hat|^2 concentrated at k
    assert rec.spectrum.shape == (33,)
    assert rec.spectrum[k] == pytest.approx(b**2 / 4 - ag * k * a**2 / 4, rel=1e-12)
    others = np.delete(rec.spectrum, k)
    assert np.max(np.abs(others)) < 1e-15


def test_energy_record_grid_mismatch():
    p = PhysParams(g=1.0, sigma=0.0, rho_plus=1.0, rho_minus=2.0)
    h = field(PeriodicGrid(16), np.zeros(16))
    ht = field(PeriodicGrid(32), np.zeros(32))
    with pytest.raises(ValueError):
        energy_record(h, ht, p, 0.0)


def test_e3_uses_fluctuation_of_ht():
    # the constant part of h_t belongs to the drift, not the energy
    g = PeriodicGrid(32)
    p = PhysParams(g=9.8, sigma=0.0, rho_plus=0.0, rho_minus=1.0)
    h = field(g, np.zeros(32))
    a = energy_record(h, field(g, np.sin(g.nodes)), p, 0.0)
    b = energy_record(h, field(g, np.sin(g.nodes) - 1.0), p, 0.0)
    assert a.e3 == pytest.approx(b.e3, rel=1e-12)


def test_z_spectrum():
    g = PeriodicGrid(32)
    dz1 = field(g, np.sin(2 * g.nodes))
    z2 = field(g, 3.0 * np.cos(5 * g.nodes))
    spec = z_spectrum(dz1, z2)
    assert spec.shape == (17,)
    assert spec[2] == pytest.approx(0.25, rel=1e-12)
    assert spec[5] == pytest.approx(2.25, rel=1e-12)
    assert np.max(np.abs(np.delete(spec, [2, 5]))) < 1e-15


# ---------------------------------------------------------------------------
# stability report


def sim4_like_pair(g):
    h0 = field(g, 0.1 * np.cos(g.nodes))
    h1 = field(g, 0.1 * np.sin(g.nodes) - 1.0)
    return h0, h1


def test_stability_report_sign_condition():
    g = PeriodicGrid(128)
    p = PhysParams(g=9.8, sigma=0.0, rho_plus=0.0, rho_minus=1.0)  # A = -1
    h0, h1 = sim4_like_pair(g)
    rep = stability_report(h0, h1, p)
    assert rep.lambda_min == pytest.approx(0.9, abs=1e-12)
    assert rep.is_stable
    # known frozen value for this configuration
    assert rep.smallness_lhs == pytest.approx(0.06346017160251385, rel=1e-12)
    assert rep.smallness_rhs == pytest.approx(0.04, rel=1e-12)
    assert not rep.satisfies_thm2  # stable, but not small enough


def test_stability_report_small_data_passes():
    g = PeriodicGrid(128)
    p = PhysParams(g=9.8, sigma=0.0, rho_plus=0.0, rho_minus=1.0)
    h0 = field(g, 0.001 * np.cos(g.nodes))
    h1 = field(g, 0.001 * np.sin(g.nodes) - 1.0)
    rep = stability_report(h0, h1, p)
    assert rep.is_stable and rep.smallness_lhs < rep.smallness_rhs
    assert rep.satisfies_thm2


def test_stability_report_unstable_sign():
    g = PeriodicGrid(64)
    p = PhysParams(g=9.8, sigma=0.0, rho_plus=0.0, rho_minus=1.0)
    h0 = field(g, np.zeros(64))
    h1 = field(g, np.sin(g.nodes))  # A h1 changes sign
    rep = stability_report(h0, h1, p)
    assert rep.lambda_min < 0
    assert not rep.is_stable and not rep.satisfies_thm2


def test_stability_report_surface_tension_terms():
    g = PeriodicGrid(64)
    h0, h1 = sim4_like_pair(g)
    p0 = PhysParams(g=9.8, sigma=0.0, rho_plus=0.0, rho_minus=1.0)
    p1 = PhysParams(g=9.8, sigma=0.5, rho_plus=0.0, rho_minus=1.0)
    a = stability_report(h0, h1, p0)
    b = stability_report(h0, h1, p1)
    assert b.smallness_lhs > a.smallness_lhs  # tension adds nonnegative terms


# ---------------------------------------------------------------------------
# scalar diagnostics


def test_amplitude_and_width():
    g = PeriodicGrid(32)
    ref = field(g, 0.5 * np.cos(g.nodes))
    cur = field(g, -2.0 * np.cos(g.nodes) + 0.25)
    linf, width = amplitude_and_width(cur, ref)
    assert linf == pytest.approx(2.25)
    assert width == pytest.approx(2.25 - 0.5)


def test_asymptotic_gap():
    g = PeriodicGrid(32)
    h = field(g, 0.01 * np.sin(g.nodes) + 2.0)
    ht = field(g, 0.001 * np.cos(g.nodes) - 1.0)
    gh, ght = asymptotic_gap(h, ht, h0_mean=0.5, h1_mean=-1.0, t=1.5)
    assert gh == pytest.approx(np.max(np.abs(h.values - (0.5 - 1.5))))
    assert ght == pytest.approx(np.max(np.abs(ht.values + 1.0)))


def test_carlson_inequality_holds_on_samples():
    g = PeriodicGrid(128)
    lhs, rhs = carlson_check(field(g, np.sin(g.nodes)))
    assert lhs == pytest.approx(1.0)
    assert rhs == pytest.approx(np.pi - 1.0, rel=1e-12)
    rng = np.random.default_rng(5)
    for _ in range(25):
        v = np.zeros(128)
        for k in range(1, 31):
            ak, bk = rng.standard_normal(2) / k**1.5
            v += ak * np.cos(k * g.nodes) + bk * np.sin(k * g.nodes)
        lhs, rhs = carlson_check(field(g, v))
        assert lhs <= rhs


def test_carlson_requires_zero_mean():
    g = PeriodicGrid(32)
    with pytest.raises(ValueError):
        carlson_check(field(g, np.sin(g.nodes) + 1.0))
