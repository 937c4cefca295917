"""One-particle densities of the open harmonic oscillator.

The reduced density operator lives on the span of the two lowest
eigenstates; its coefficients come from :mod:`oqsinfo.dynamics`.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dynamics import BathParams, DensityMatrix2, density_matrix
from .grid import DensityField, Grid1D
from .hermite import OscillatorParams, eigenfunction_p, eigenfunction_x
from .info import InfoRecord, shannon_1d


@dataclass(frozen=True)
class HOModel:
    osc: OscillatorParams
    bath: BathParams

    @property
    def omega(self) -> float:
        return self.osc.omega

    def rho(self, t: float) -> DensityMatrix2:
        return density_matrix(t, self.omega, self.bath)


def _scalar_or_array(values):
    return values if np.ndim(values) else float(values)


def position_density(x, t: float, model: HOModel):
    """``<x|rho(t)|x>`` for the two-level truncated oscillator."""
    rho = model.rho(t)
    phi0 = eigenfunction_x(0, model.osc, x)
    phi1 = eigenfunction_x(1, model.osc, x)
    n = rho.rho00 * phi0**2 + rho.rho11 * phi1**2 + 2.0 * rho.rho01.real * phi0 * phi1
    return _scalar_or_array(n)


def momentum_density(p, t: float, model: HOModel):
    """``<p|rho(t)|p>``; the cross term is ``2 Re(rho01 phi0(p) conj(phi1(p)))``.

    With ``phi1(p)`` purely imaginary this term is driven by ``Im(rho01)``,
    a quarter period out of step with the position-space cross term.
    """
    rho = model.rho(t)
    phi0 = eigenfunction_p(0, model.osc, p)
    phi1 = eigenfunction_p(1, model.osc, p)
    n = (
        rho.rho00 * np.abs(phi0) ** 2
        + rho.rho11 * np.abs(phi1) ** 2
        + 2.0 * (rho.rho01 * phi0 * np.conj(phi1)).real
    )
    return _scalar_or_array(n)


def position_field(t: float, model: HOModel, grid: Grid1D | None = None) -> DensityField:
    grid = grid or Grid1D()
    return DensityField(grid, position_density(grid.nodes, t, model))


def momentum_field(t: float, model: HOModel, grid: Grid1D | None = None) -> DensityField:
    grid = grid or Grid1D()
    return DensityField(grid, momentum_density(grid.nodes, t, model))


def info_record(t: float, model: HOModel, grid: Grid1D | None = None,
                pgrid: Grid1D | None = None) -> InfoRecord:
    """Position and momentum entropies at time ``t``."""
    grid = grid or Grid1D()
    pgrid = pgrid or grid
    s_x = shannon_1d(position_field(t, model, grid))
    s_p = shannon_1d(momentum_field(t, model, pgrid))
    return InfoRecord(t=float(t), s_x=s_x, s_p=s_p)
