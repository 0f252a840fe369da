"""Fourier collocation on the periodic interval [-pi, pi).

Fields live on the uniform grid alpha_j = -pi + j*(2*pi/N), j = 0..N-1, with N
even.  Spectral coefficients follow the convention

    f(alpha) = sum_k fhat(k) * exp(i*k*alpha),

so the forward transform carries the 1/N factor.  Because the first node sits
at -pi rather than 0, the literal coefficients differ from numpy's FFT output
by the phase (-1)^k; `dft`/`idft` apply it, while diagonal multiplier
operators act on the raw FFT layout where the phase cancels.

Operators are Fourier multipliers m(k):

    hilbert     H      -i*sign(k)         (sign(0) = 0)
    lambda_pow  L^s    |k|^s              (k = 0 annihilated for s > 0)
    derivative  d^n    (i*k)^n
    project     P_c    1 if |k| <= c else 0

The Nyquist mode k = N/2 has an ambiguous sign on the real grid and is zeroed
whenever a derivative, the Hilbert transform, or L^s is applied.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

__all__ = [
    "PeriodicGrid",
    "RealField",
    "SpectralCoeffs",
    "dft",
    "idft",
    "hilbert",
    "lambda_pow",
    "derivative",
    "project",
    "pointwise_product",
]


@dataclass(frozen=True)
class PeriodicGrid:
    """Uniform collocation grid with N nodes on [-pi, pi)."""

    n_modes: int

    def __post_init__(self):
        if self.n_modes < 2 or self.n_modes % 2 != 0:
            raise ValueError(f"n_modes must be even and >= 2, got {self.n_modes}")

    @cached_property
    def nodes(self) -> np.ndarray:
        return -np.pi + self.spacing * np.arange(self.n_modes)

    @cached_property
    def spacing(self) -> float:
        return 2.0 * np.pi / self.n_modes

    @cached_property
    def wavenumbers(self) -> np.ndarray:
        """Integer wavenumbers in FFT layout: 0, 1, .., N/2-1, -N/2, .., -1."""
        return np.fft.fftfreq(self.n_modes, d=1.0 / self.n_modes).astype(np.int64)

    @cached_property
    def _phase(self) -> np.ndarray:
        # exp(i*pi*k) = (-1)^k, mapping FFT coefficients (first node at 0)
        # to coefficients of exp(i*k*alpha) (first node at -pi).
        return np.where(self.wavenumbers % 2 == 0, 1.0, -1.0)

    @cached_property
    def _abs_k(self) -> np.ndarray:
        return np.abs(self.wavenumbers).astype(np.float64)

    @cached_property
    def _ik(self) -> np.ndarray:
        k = self.wavenumbers.astype(np.float64)
        k[self.n_modes // 2] = 0.0  # Nyquist sign is ambiguous; drop the mode
        return 1j * k

    @cached_property
    def _minus_i_sign_k(self) -> np.ndarray:
        m = -1j * np.sign(self.wavenumbers).astype(np.float64)
        m[self.n_modes // 2] = 0.0
        return m


@dataclass(frozen=True)
class RealField:
    """Real-valued grid function (samples at the grid nodes)."""

    grid: PeriodicGrid
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.float64)
        if v.shape != (self.grid.n_modes,):
            raise ValueError(
                f"field has shape {v.shape}, expected ({self.grid.n_modes},)"
            )
        if not np.all(np.isfinite(v)):
            raise ValueError("field contains non-finite samples")
        object.__setattr__(self, "values", v)

    def mean(self) -> float:
        return float(np.mean(self.values))


@dataclass(frozen=True)
class SpectralCoeffs:
    """Coefficients of exp(i*k*alpha) in FFT layout (see grid.wavenumbers)."""

    grid: PeriodicGrid
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=np.complex128)
        if c.shape != (self.grid.n_modes,):
            raise ValueError(
                f"coefficients have shape {c.shape}, expected ({self.grid.n_modes},)"
            )
        object.__setattr__(self, "coeffs", c)

    def __getitem__(self, k: int) -> complex:
        """Coefficient of exp(i*k*alpha) for -N/2 <= k <= N/2-1."""
        n = self.grid.n_modes
        if not -n // 2 <= k < n // 2:
            raise IndexError(f"wavenumber {k} outside grid band")
        return complex(self.coeffs[k % n])


def dft(f: RealField) -> SpectralCoeffs:
    """Forward transform; coeffs[k] is the literal coefficient of exp(i*k*alpha)."""
    raw = np.fft.fft(f.values) / f.grid.n_modes
    return SpectralCoeffs(f.grid, raw * f.grid._phase)


def idft(c: SpectralCoeffs) -> RealField:
    """Inverse transform back to grid samples (imaginary part discarded)."""
    raw = c.coeffs * c.grid._phase * c.grid.n_modes
    return RealField(c.grid, np.fft.ifft(raw).real)


def _apply_multiplier(grid: PeriodicGrid, values: np.ndarray, m: np.ndarray) -> np.ndarray:
    # The (-1)^k phase cancels for diagonal operators, so work on the raw FFT.
    return np.fft.ifft(m * np.fft.fft(values)).real


def hilbert_arr(grid: PeriodicGrid, values: np.ndarray) -> np.ndarray:
    return _apply_multiplier(grid, values, grid._minus_i_sign_k)


def lambda_arr(grid: PeriodicGrid, values: np.ndarray, s: float) -> np.ndarray:
    if s == 0:
        return values
    m = np.zeros(grid.n_modes)
    nz = grid._abs_k > 0
    m[nz] = grid._abs_k[nz] ** s
    m[grid.n_modes // 2] = 0.0
    return _apply_multiplier(grid, values, m)


def derivative_arr(grid: PeriodicGrid, values: np.ndarray, n: int = 1) -> np.ndarray:
    if n == 0:
        return values
    return _apply_multiplier(grid, values, grid._ik ** n)


def hilbert(f: RealField) -> RealField:
    """Periodic Hilbert transform, multiplier -i*sign(k).

    H sin(k alpha) = -cos(k alpha) and H cos(k alpha) = sin(k alpha) for k >= 1;
    constants are annihilated.
    """
    return RealField(f.grid, hilbert_arr(f.grid, f.values))


def lambda_pow(f: RealField, s: float) -> RealField:
    """Fractional operator Lambda^s = (-d^2/dalpha^2)^(s/2), multiplier |k|^s.

    s = 0 is the identity (mean preserved); s > 0 annihilates the mean.
    Satisfies Lambda = H d/dalpha on band-limited fields.
    """
    if s == 0:
        return f
    return RealField(f.grid, lambda_arr(f.grid, f.values, s))


def derivative(f: RealField, n: int = 1) -> RealField:
    """n-th spectral derivative, multiplier (i*k)^n."""
    if n < 0:
        raise ValueError("derivative order must be nonnegative")
    if n == 0:
        return f
    return RealField(f.grid, derivative_arr(f.grid, f.values, n))


def project(f: RealField, cutoff: int) -> RealField:
    """Sharp Fourier truncation keeping modes |k| <= cutoff."""
    if cutoff < 0:
        raise ValueError("cutoff must be nonnegative")
    m = (f.grid._abs_k <= cutoff).astype(np.float64)
    return RealField(f.grid, _apply_multiplier(f.grid, f.values, m))


def pointwise_product(f: RealField, g: RealField, dealias: bool = False) -> RealField:
    """Collocation product f*g, optionally with 2/3-rule dealiasing.

    With dealias=True both inputs are truncated to |k| <= N/3 before the
    nodewise multiply and the result is truncated to the same band, so the
    retained coefficients are free of aliasing error.  (When 3 divides N the
    cutoff is lowered by one mode: a product of two modes at exactly N/3
    would alias back onto the band edge.)
    """
    if f.grid is not g.grid and f.grid != g.grid:
        raise ValueError("operands live on different grids")
    if not dealias:
        return RealField(f.grid, f.values * g.values)
    n = f.grid.n_modes
    cut = n // 3 - 1 if n % 3 == 0 else n // 3
    ff = project(f, cut)
    gg = project(g, cut)
    return project(RealField(f.grid, ff.values * gg.values), cut)
