"""Periodic 1-D Fourier collocation on an odd-sized uniform grid.

Everything here works on the 2N+1 point grid over an interval of length L
with the right endpoint excluded.  Collocation coefficients are stored in
numpy FFT ordering and normalized so that ``coeffs[0]`` is the arithmetic
mean of the nodal values; with that convention the discrete L2 inner
product ``(1/(2N+1)) sum f_i g_i`` and Parseval's identity line up exactly.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import cached_property

import numpy as np

__all__ = [
    "Grid",
    "SymmetryError",
    "forward",
    "inverse",
    "derivative",
    "project",
    "inner_product",
    "norm2",
    "sobolev_norm",
    "evaluate_interpolant",
]

# Imaginary residue above this fraction of the field magnitude means the
# Hermitian symmetry of a supposedly-real field has been corrupted.
_SYMMETRY_TOL = 1e-10


class SymmetryError(ValueError):
    """Raised when a real result is requested from non-Hermitian coefficients."""


@dataclass(frozen=True)
class Grid:
    """Uniform periodic grid with 2N+1 points on (x_left, x_left + length).

    The odd point count keeps the mode set {-N, ..., N} symmetric, so odd
    derivatives have no ambiguous Nyquist mode.  Even sizes are rejected by
    construction: the size is always derived from ``half_modes``.
    """

    half_modes: int
    length: float
    x_left: float = 0.0

    def __post_init__(self):
        if self.half_modes < 1:
            raise ValueError(f"half_modes must be >= 1, got {self.half_modes}")
        if not self.length > 0:
            raise ValueError(f"length must be positive, got {self.length}")

    @property
    def num_points(self) -> int:
        return 2 * self.half_modes + 1

    @property
    def spacing(self) -> float:
        return self.length / self.num_points

    @cached_property
    def nodes(self) -> np.ndarray:
        """Node coordinates x_i = x_left + i*h, right endpoint excluded."""
        return self.x_left + self.spacing * np.arange(self.num_points)

    @cached_property
    def modes(self) -> np.ndarray:
        """Integer mode numbers l in FFT ordering: 0, 1, ..., N, -N, ..., -1."""
        return np.fft.fftfreq(self.num_points, d=1.0 / self.num_points).round().astype(int)

    @cached_property
    def wavenumbers(self) -> np.ndarray:
        """Physical wavenumbers k_l = 2*pi*l/L, FFT ordering."""
        return 2.0 * np.pi * self.modes / self.length


def _check_finite(values: np.ndarray) -> np.ndarray:
    values = np.asarray(values, dtype=float)
    if not np.all(np.isfinite(values)):
        raise ValueError("grid function contains non-finite values")
    return values


def _check_shape(grid: Grid, values: np.ndarray) -> None:
    if values.shape != (grid.num_points,):
        raise ValueError(
            f"expected {grid.num_points} values for this grid, got shape {values.shape}"
        )


def forward(grid: Grid, values: np.ndarray) -> np.ndarray:
    """Collocation coefficients of the trigonometric interpolant through ``values``.

    Returns a complex array in FFT ordering, scaled by 1/(2N+1) so the
    zeroth coefficient equals the mean of the values.
    """
    values = _check_finite(values)
    _check_shape(grid, values)
    return np.fft.fft(values) / grid.num_points


def inverse(grid: Grid, coeffs: np.ndarray, real: bool = True) -> np.ndarray:
    """Nodal values of the trigonometric polynomial with the given coefficients.

    With ``real=True`` the imaginary residue is checked against the field
    magnitude and discarded; a residue above tolerance raises
    :class:`SymmetryError` rather than silently corrupting the data.
    """
    coeffs = np.asarray(coeffs, dtype=complex)
    _check_shape(grid, coeffs)
    values = np.fft.ifft(coeffs * grid.num_points)
    if not real:
        return values
    scale = np.max(np.abs(values))
    if scale > 0 and np.max(np.abs(values.imag)) > _SYMMETRY_TOL * scale:
        raise SymmetryError(
            "imaginary residue exceeds tolerance; coefficients are not Hermitian"
        )
    return values.real.copy()


def derivative(grid: Grid, values: np.ndarray, order: int = 1) -> np.ndarray:
    """Spectral derivative of the given order: multiply coefficients by (i*k)^order.

    Uses the real-input transform, so the result is exactly real; a
    full-spectrum route would amplify round-off asymmetry by k^order and
    trip the symmetry check spuriously at high N and order 4.
    """
    if order < 1:
        raise ValueError(f"derivative order must be >= 1, got {order}")
    values = _check_finite(values)
    _check_shape(grid, values)
    k_half = 2.0 * np.pi * np.arange(grid.half_modes + 1) / grid.length
    half = np.fft.rfft(values) * (1j * k_half) ** order
    return np.fft.irfft(half, n=grid.num_points)


def project(grid: Grid, values: np.ndarray, max_mode: int) -> np.ndarray:
    """Zero out all modes with |l| > max_mode and return nodal values.

    Asking for max_mode >= N cannot remove anything and is a warned no-op.
    """
    if max_mode < 1:
        raise ValueError(f"max_mode must be >= 1, got {max_mode}")
    if max_mode >= grid.half_modes:
        warnings.warn(
            f"projection cutoff {max_mode} >= grid half_modes {grid.half_modes}; no-op",
            stacklevel=2,
        )
        return np.asarray(values, dtype=float).copy()
    coeffs = forward(grid, values)
    coeffs[np.abs(grid.modes) > max_mode] = 0.0
    return inverse(grid, coeffs)


def inner_product(grid: Grid, f: np.ndarray, g: np.ndarray) -> float:
    """Mean-weighted discrete L2 inner product: (1/(2N+1)) sum_i f_i g_i."""
    f = np.asarray(f, dtype=float)
    g = np.asarray(g, dtype=float)
    _check_shape(grid, f)
    _check_shape(grid, g)
    return float(np.dot(f, g) / grid.num_points)


def norm2(grid: Grid, f: np.ndarray) -> float:
    """Discrete L2 norm induced by :func:`inner_product`."""
    return float(np.sqrt(inner_product(grid, f, f)))


def sobolev_norm(grid: Grid, values: np.ndarray, order: int = 0) -> float:
    """Discrete H^k norm via Fourier multipliers 1 + k^2 + ... + k^(2k).

    ``sobolev_norm(grid, f, 0)`` equals ``norm2(grid, f)`` to round-off.
    """
    if order < 0:
        raise ValueError(f"Sobolev order must be >= 0, got {order}")
    coeffs = forward(grid, values)
    k2 = grid.wavenumbers**2
    multiplier = np.ones_like(k2)
    power = np.ones_like(k2)
    for _ in range(order):
        power = power * k2
        multiplier = multiplier + power
    return float(np.sqrt(np.sum(multiplier * np.abs(coeffs) ** 2)))


def evaluate_interpolant(grid: Grid, values: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Evaluate the trigonometric interpolant through ``values`` at arbitrary points.

    Dense O(M*N) evaluation; meant for resampling between non-nested grids
    and for reference computations, not for inner solver loops.
    """
    coeffs = forward(grid, values)
    x = np.atleast_1d(np.asarray(x, dtype=float))
    phase = np.exp(
        2j * np.pi * np.outer((x - grid.x_left) / grid.length, grid.modes)
    )
    out = phase @ coeffs
    return out.real
