"""Right-hand sides for the reduced interface models.

Two families of models for the motion of an interface separating fluids of
densities rho+ (above) and rho- (below), written on the periodic circle with
H the Hilbert transform, Lambda = H d/dalpha, and A the Atwood number.

h-model (interface as a graph y = h(alpha, t), vorticity amplitude varpi):

    h_t   = 1/2 H varpi
    varpi_t = 2 A g h_a + (2 sigma / (rho+ + rho-)) h_aaa
              - d/da(varpi/(4 pi) h_aa) <varpi0> + A/(4 pi) d/da Lambda varpi <varpi0>
              - A/2 Lambda(varpi H varpi) - eps Lambda^s varpi

with <varpi0> the (conserved) integral of the initial vorticity.  The same
dynamics in second-order wave form:

    h_tt + eps Lambda^s h_t = A g Lambda h - sigma/(rho+ + rho-) Lambda^3 h
              - A d/da(H h_t h_t)
              + Lambda(H h_t/(4 pi) h_aa) <varpi0> + A/(4 pi) d/da Lambda h_t <varpi0>

(an optional cubic term -Lambda(H h_t h_a h_t) is available but excluded by
default, matching the discretized system, which is quadratic).

z-model (interface as a parameterized curve z = (alpha + dz1, z2)):

    dz1_t = -1/2 H varpi z2_a / |z_a|^2 + eps dz1_aa
    z2_t  = +1/2 H varpi (1 + dz1_a) / |z_a|^2 + eps z2_aa
    varpi_t = -d/da[ A/2 H(varpi H varpi) / |z_a|^2 - 2 A g z2 ] + eps varpi_aa

with |z_a|^2 = (1 + dz1_a)^2 + (z2_a)^2.  Zero surface tension is assumed in
the z-model (the pressure jump is dropped).

Nonlinear products are formed pointwise in physical space; multipliers act in
frequency space in the literal order written above.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .spectral import RealField, derivative_arr, hilbert_arr, lambda_arr

__all__ = [
    "PhysParams",
    "ViscosityConfig",
    "HState",
    "ZState",
    "NonFiniteState",
    "DegenerateParameterization",
    "DEGENERACY_FLOOR",
    "h_rhs",
    "h_wave_rhs",
    "linear_rhs",
    "z_rhs",
]

# Reject z-model states whose parameterization has collapsed: the model's
# denominators are meaningless past this point.
DEGENERACY_FLOOR = 1e-8


class NonFiniteState(Exception):
    """A model term evaluated to NaN/inf; carries the offending term name."""

    def __init__(self, term: str):
        self.term = term
        super().__init__(f"non-finite values in term '{term}'")


class DegenerateParameterization(Exception):
    """min |z_alpha|^2 fell below the floor; the z-model broke down."""

    def __init__(self, min_jac: float):
        self.min_jac = min_jac
        super().__init__(
            f"parameterization degenerate: min |z_alpha|^2 = {min_jac:.3e}"
        )


@dataclass(frozen=True)
class PhysParams:
    """Signed acceleration g, surface tension sigma, and the two densities."""

    g: float
    sigma: float
    rho_plus: float
    rho_minus: float

    def __post_init__(self):
        if self.sigma < 0:
            raise ValueError("sigma must be nonnegative")
        if self.rho_plus < 0 or self.rho_minus <= 0:
            raise ValueError("need rho_plus >= 0 and rho_minus > 0")

    @property
    def atwood(self) -> float:
        return (self.rho_plus - self.rho_minus) / (self.rho_plus + self.rho_minus)

    @property
    def sigma_prime(self) -> float:
        """Surface tension over total density, sigma/(rho+ + rho-)."""
        return self.sigma / (self.rho_plus + self.rho_minus)


@dataclass(frozen=True)
class ViscosityConfig:
    """Artificial viscosity eps Lambda^s (eps = 0 disables it)."""

    epsilon: float
    order_s: float = 2.0

    def __post_init__(self):
        if self.epsilon < 0:
            raise ValueError("epsilon must be nonnegative")
        if self.order_s < 2:
            raise ValueError("order_s must be >= 2")


@dataclass(frozen=True)
class HState:
    """h-model state: height h, vorticity amplitude omega, and <varpi0>.

    omega0_mean holds the space integral of the initial vorticity (the
    bracket <varpi0> in the equations); the epsilon = 0 flow conserves the
    integral of omega, which the tests check rather than enforce.
    """

    h: RealField
    omega: RealField
    omega0_mean: float = 0.0

    def __post_init__(self):
        if self.h.grid != self.omega.grid:
            raise ValueError("h and omega must share a grid")


@dataclass(frozen=True)
class ZState:
    """z-model state: curve components (alpha + dz1, z2) and vorticity."""

    dz1: RealField
    z2: RealField
    omega: RealField

    def __post_init__(self):
        if not (self.dz1.grid == self.z2.grid == self.omega.grid):
            raise ValueError("dz1, z2, omega must share a grid")


def _named_terms_check(term_arrays, fallback: str):
    """Failure path: raise NonFiniteState naming the first bad term."""
    for name, arr in term_arrays:
        if not np.all(np.isfinite(arr)):
            raise NonFiniteState(name)
    raise NonFiniteState(fallback)


def h_rhs(state: HState, p: PhysParams, v: ViscosityConfig):
    """Time derivatives (dh, domega) of the regularized h-model system."""
    g = state.h.grid
    A = p.atwood
    h, w = state.h.values, state.omega.values
    m0 = state.omega0_mean
    terms = []

    hw = hilbert_arr(g, w)
    dh = 0.5 * hw
    terms.append(("H(omega)", hw))

    grav = 2.0 * A * p.g * derivative_arr(g, h)
    dw = grav.copy()
    terms.append(("gravity 2Ag d_alpha h", grav))
    if p.sigma != 0.0:
        st = 2.0 * p.sigma_prime * derivative_arr(g, h, 3)
        dw += st
        terms.append(("surface tension d_alpha^3 h", st))
    if m0 != 0.0:
        t1 = -m0 * derivative_arr(g, w / (4.0 * np.pi) * derivative_arr(g, h, 2))
        t2 = (A / (4.0 * np.pi)) * m0 * derivative_arr(g, lambda_arr(g, w, 1))
        dw += t1 + t2
        terms.append(("d_alpha(omega/4pi d_alpha^2 h) <varpi0>", t1))
        terms.append(("A/4pi d_alpha Lambda omega <varpi0>", t2))
    quad = -0.5 * A * lambda_arr(g, w * hw, 1)
    dw += quad
    terms.append(("A/2 Lambda(omega H omega)", quad))
    if v.epsilon != 0.0:
        visc = -v.epsilon * lambda_arr(g, w, v.order_s)
        dw += visc
        terms.append(("viscosity Lambda^s omega", visc))

    if not (np.all(np.isfinite(dh)) and np.all(np.isfinite(dw))):
        _named_terms_check([("omega", w), ("h", h)] + terms, "h_rhs")
    return RealField(g, dh), RealField(g, dw)


def h_wave_rhs(
    h: RealField,
    ht: RealField,
    p: PhysParams,
    v: ViscosityConfig,
    omega0_mean: float = 0.0,
    include_cubic: bool = False,
) -> RealField:
    """Acceleration h_tt of the wave form of the h-model.

    include_cubic adds the cubic term -Lambda(H h_t h_a h_t), which the
    quadratic discretized system drops.
    """
    g = h.grid
    A = p.atwood
    hv, htv = h.values, ht.values
    terms = []

    grav = A * p.g * lambda_arr(g, hv, 1)
    htt = grav.copy()
    terms.append(("gravity Ag Lambda h", grav))
    if p.sigma != 0.0:
        st = -p.sigma_prime * lambda_arr(g, hv, 3)
        htt += st
        terms.append(("surface tension Lambda^3 h", st))
    hw = hilbert_arr(g, htv)
    quad = -A * derivative_arr(g, hw * htv)
    htt += quad
    terms.append(("A d_alpha(H h_t h_t)", quad))
    if omega0_mean != 0.0:
        t1 = omega0_mean * lambda_arr(g, hw / (4.0 * np.pi) * derivative_arr(g, hv, 2), 1)
        t2 = (A / (4.0 * np.pi)) * omega0_mean * derivative_arr(g, lambda_arr(g, htv, 1))
        htt += t1 + t2
        terms.append(("Lambda(H h_t/4pi d_alpha^2 h) <varpi0>", t1))
        terms.append(("A/4pi d_alpha Lambda h_t <varpi0>", t2))
    if include_cubic:
        cubic = -lambda_arr(g, hw * derivative_arr(g, hv) * htv, 1)
        htt += cubic
        terms.append(("Lambda(H h_t d_alpha h h_t)", cubic))
    if v.epsilon != 0.0:
        visc = -v.epsilon * lambda_arr(g, htv, v.order_s)
        htt += visc
        terms.append(("viscosity Lambda^s h_t", visc))

    if not np.all(np.isfinite(htt)):
        _named_terms_check([("h", hv), ("h_t", htv)] + terms, "h_wave_rhs")
    return RealField(g, htt)


def linear_rhs(state: HState, p: PhysParams):
    """Linearized h-model: dh = 1/2 H omega; domega = 2Ag h_a + 2 sigma' h_aaa."""
    g = state.h.grid
    dh = 0.5 * hilbert_arr(g, state.omega.values)
    dw = 2.0 * p.atwood * p.g * derivative_arr(g, state.h.values)
    if p.sigma != 0.0:
        dw = dw + 2.0 * p.sigma_prime * derivative_arr(g, state.h.values, 3)
    return RealField(g, dh), RealField(g, dw)


def z_rhs(state: ZState, p: PhysParams, v: ViscosityConfig):
    """Time derivatives (ddz1, dz2, domega) of the regularized z-model."""
    g = state.dz1.grid
    A = p.atwood
    w = state.omega.values

    one_plus = 1.0 + derivative_arr(g, state.dz1.values)
    z2a = derivative_arr(g, state.z2.values)
    jac = one_plus**2 + z2a**2
    if not np.all(np.isfinite(jac)):
        raise NonFiniteState("|z_alpha|^2")
    min_jac = float(np.min(jac))
    if min_jac < DEGENERACY_FLOOR:
        raise DegenerateParameterization(min_jac)

    hw = hilbert_arr(g, w)
    ddz1 = -0.5 * hw * z2a / jac
    dz2 = 0.5 * hw * one_plus / jac
    if v.epsilon != 0.0:
        ddz1 = ddz1 + v.epsilon * derivative_arr(g, state.dz1.values, 2)
        dz2 = dz2 + v.epsilon * derivative_arr(g, state.z2.values, 2)

    if A != 0.0:
        bracket = 0.5 * A * hilbert_arr(g, w * hw) / jac - 2.0 * A * p.g * state.z2.values
        dw = -derivative_arr(g, bracket)
    else:
        dw = np.zeros(g.n_modes)
    if v.epsilon != 0.0:
        dw = dw + v.epsilon * derivative_arr(g, w, 2)

    for name, arr in (("dz1_t", ddz1), ("z2_t", dz2), ("omega_t", dw)):
        if not np.all(np.isfinite(arr)):
            raise NonFiniteState(name)
    return RealField(g, ddz1), RealField(g, dz2), RealField(g, dw)
