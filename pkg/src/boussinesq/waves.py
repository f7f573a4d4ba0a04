"""Good Boussinesq problem setup and exact solitary-wave solutions.

The equation is u_tt = -u_xxxx + u_xx + (u^p)_xx with integer p >= 2.
For p = 2 it admits the traveling trough

    u(x, t) = -A sech^2((P/2)(x - x0 - c0 t)),

with amplitude, shape and speed tied by A = 3 P^2 / 2 and c0 = sqrt(1 - P^2).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .spectral import Grid

__all__ = [
    "SolitaryWaveParams",
    "GBProblem",
    "params_from_amplitude",
    "solitary_wave",
    "solitary_wave_dt",
    "solitary_wave_dtt",
    "nonlinearity",
    "sample_initial",
    "solitary_problem",
]


@dataclass(frozen=True)
class SolitaryWaveParams:
    """Amplitude A, shape P, speed c0 and initial crest location x0."""

    amplitude: float
    shape: float
    speed: float
    center: float = 0.0

    def __post_init__(self):
        if not 0 < self.shape <= 1:
            raise ValueError(f"shape parameter must lie in (0, 1], got {self.shape}")
        if abs(self.amplitude - 1.5 * self.shape**2) > 1e-14:
            raise ValueError("amplitude inconsistent with shape: A != 3P^2/2")
        if abs(self.speed - np.sqrt(1.0 - self.shape**2)) > 1e-14:
            raise ValueError("speed inconsistent with shape: c0 != sqrt(1-P^2)")


@dataclass(frozen=True)
class GBProblem:
    """Nonlinearity power plus initial data (u, u_t) at t = 0 on one grid."""

    power: int
    grid: Grid
    initial_u: np.ndarray
    initial_ut: np.ndarray

    def __post_init__(self):
        if self.power < 2:
            raise ValueError(f"nonlinearity power must be >= 2, got {self.power}")
        n = self.grid.num_points
        if self.initial_u.shape != (n,) or self.initial_ut.shape != (n,):
            raise ValueError("initial data does not match the grid size")


def params_from_amplitude(amplitude: float, center: float = 0.0) -> SolitaryWaveParams:
    """Build consistent solitary-wave parameters from the amplitude alone."""
    if not 0 < amplitude <= 1.5:
        raise ValueError(
            f"amplitude must lie in (0, 3/2] for a real wave speed, got {amplitude}"
        )
    shape = np.sqrt(2.0 * amplitude / 3.0)
    speed = np.sqrt(max(1.0 - shape**2, 0.0))
    return SolitaryWaveParams(amplitude=amplitude, shape=shape, speed=speed, center=center)


def _theta(params: SolitaryWaveParams, x, t):
    return 0.5 * params.shape * (np.asarray(x, dtype=float) - params.center - params.speed * t)


def solitary_wave(params: SolitaryWaveParams, x, t: float = 0.0):
    """Exact traveling trough -A sech^2((P/2)(x - x0 - c0 t))."""
    return -params.amplitude / np.cosh(_theta(params, x, t)) ** 2


def solitary_wave_dt(params: SolitaryWaveParams, x, t: float = 0.0):
    """Exact time derivative of :func:`solitary_wave`."""
    th = _theta(params, x, t)
    sech2 = 1.0 / np.cosh(th) ** 2
    return -params.amplitude * params.shape * params.speed * sech2 * np.tanh(th)


def solitary_wave_dtt(params: SolitaryWaveParams, x, t: float = 0.0):
    """Exact second time derivative of :func:`solitary_wave`."""
    th = _theta(params, x, t)
    sech2 = 1.0 / np.cosh(th) ** 2
    tanh2 = np.tanh(th) ** 2
    # d^2/dtheta^2 of -A sech^2 is 2A sech^2 (sech^2 - 2 tanh^2); each time
    # derivative contributes a factor -c0 P / 2 on theta.
    return (
        0.5 * params.amplitude * (params.speed * params.shape) ** 2
        * sech2 * (sech2 - 2.0 * tanh2)
    )


def nonlinearity(values: np.ndarray, power: int) -> np.ndarray:
    """Pointwise power u_i^p of the nonlinear flux."""
    if power < 2:
        raise ValueError(f"nonlinearity power must be >= 2, got {power}")
    return np.asarray(values, dtype=float) ** power


def sample_initial(params: SolitaryWaveParams, grid: Grid):
    """Sample (u, u_t) at t = 0 on the grid nodes.

    Warns when the wave is not effectively supported inside the domain,
    since periodization error then stops being negligible.
    """
    u0 = solitary_wave(params, grid.nodes, 0.0)
    v0 = solitary_wave_dt(params, grid.nodes, 0.0)
    edge = max(abs(u0[0]), abs(u0[-1]))
    if edge >= 1e-8 * params.amplitude:
        warnings.warn(
            f"solitary wave magnitude {edge:.3e} at the domain boundary; "
            "periodization error may be significant",
            stacklevel=2,
        )
    return u0, v0


def solitary_problem(params: SolitaryWaveParams, grid: Grid, power: int = 2) -> GBProblem:
    """Convenience constructor for the solitary-wave benchmark problem."""
    u0, v0 = sample_initial(params, grid)
    return GBProblem(power=power, grid=grid, initial_u=u0, initial_ut=v0)
