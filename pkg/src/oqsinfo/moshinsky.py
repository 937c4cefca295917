"""Two-particle Moshinsky atom coupled to a bath.

The Hamiltonian separates under the orthogonal Jacobi map
``R = (x1 + x2)/sqrt(2)``, ``r = (x1 - x2)/sqrt(2)`` into a centre-of-mass
oscillator of frequency ``omega`` and a relative oscillator of frequency
``omega_r = sqrt(omega**2 - 2*lam)``. The open-system state is restricted to
``{|00>, |10>}`` (centre-of-mass excitation only), so the two-level
coefficients of :mod:`oqsinfo.dynamics` apply with gap ``omega``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .dynamics import BathParams, DensityMatrix2, density_matrix
from .grid import DensityField, Grid1D, Grid2D
from .hermite import eigenfunction_p as _phi_p
from .hermite import eigenfunction_x as _phi_x
from .info import InfoRecord, shannon_1d, shannon_2d

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class MoshinskyParams:
    """Trap frequency, repulsive interparticle strength and bath.

    ``lam`` must stay below ``omega**2 / 2``; at the threshold the relative
    motion is unbound.
    """

    omega: float
    lam: float
    bath: BathParams

    def __post_init__(self):
        if not self.omega > 0:
            raise ValueError(f"omega must be > 0, got {self.omega!r}")
        if not self.lam >= 0:
            raise ValueError(f"lam must be >= 0, got {self.lam!r}")
        if not self.lam < 0.5 * self.omega**2:
            raise ValueError(
                f"lam={self.lam!r} leaves the relative motion unbound; need lam < omega**2/2 = {0.5 * self.omega**2!r}"
            )

    def rho(self, t: float) -> DensityMatrix2:
        return density_matrix(t, self.omega, self.bath)


@dataclass(frozen=True)
class TwoParticleLabel:
    """``m`` counts centre-of-mass quanta, ``n`` relative quanta (even ``n`` is exchange symmetric)."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise ValueError("quantum numbers must be >= 0")


GROUND = TwoParticleLabel(0, 0)
COM_EXCITED = TwoParticleLabel(1, 0)


def relative_frequency(params) -> float:
    """``sqrt(omega**2 - 2*lam)``; accepts params or an ``(omega, lam)`` pair."""
    omega, lam = (params.omega, params.lam) if hasattr(params, "lam") else params
    arg = omega**2 - 2.0 * lam
    if not arg > 0:
        raise ValueError(f"lam={lam!r} >= omega**2/2: relative motion is unbound")
    return math.sqrt(arg)


def jacobi(a, b):
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return (a + b) / SQRT2, (a - b) / SQRT2


def eigenfunction(label: TwoParticleLabel, params, x1, x2):
    """Real eigenfunction ``phi_m(R; omega) phi_n(r; omega_r)``."""
    big, small = jacobi(x1, x2)
    out = _phi_x(label.m, params.omega, big) * _phi_x(label.n, relative_frequency(params), small)
    return out if np.ndim(out) else float(out)


def eigenfunction_p(label: TwoParticleLabel, params, p1, p2):
    """Momentum eigenfunction; the Jacobi rotation acts identically on momenta."""
    big, small = jacobi(p1, p2)
    out = _phi_p(label.m, params.omega, big) * _phi_p(label.n, relative_frequency(params), small)
    return out if np.ndim(out) else complex(out)


def _bilinear(rho: DensityMatrix2, f0, f1):
    # <.|rho|.> over {|00>, |10>} with amplitudes f0, f1 at the sample points
    n = (
        rho.rho00 * np.abs(f0) ** 2
        + rho.rho11 * np.abs(f1) ** 2
        + 2.0 * (rho.rho01 * f0 * np.conj(f1)).real
    )
    return n if np.ndim(n) else float(n)


def two_particle_density_x(x1, x2, t: float, params: MoshinskyParams):
    rho = params.rho(t)
    return _bilinear(rho, eigenfunction(GROUND, params, x1, x2), eigenfunction(COM_EXCITED, params, x1, x2))


def two_particle_density_p(p1, p2, t: float, params: MoshinskyParams):
    rho = params.rho(t)
    return _bilinear(rho, eigenfunction_p(GROUND, params, p1, p2), eigenfunction_p(COM_EXCITED, params, p1, p2))


def _reduce(density, u, t, params, grid):
    grid = grid or Grid1D()
    u = np.asarray(u, dtype=float)
    other = grid.nodes
    vals = density(u[..., None], other, t, params)
    out = np.sum(vals * grid.weights, axis=-1)
    return out if np.ndim(out) else float(out)


def reduced_density_x(x1, t: float, params: MoshinskyParams, grid: Grid1D | None = None):
    """One-particle density ``int n(x1, x2) dx2`` by trapezoid quadrature over ``grid``."""
    return _reduce(two_particle_density_x, x1, t, params, grid)


def reduced_density_p(p1, t: float, params: MoshinskyParams, grid: Grid1D | None = None):
    return _reduce(two_particle_density_p, p1, t, params, grid)


class MoshinskyBasis:
    """Basis products sampled once on fixed grids for a given ``(omega, lam)``.

    Every density of the model is a linear combination of three sampled
    arrays weighted by the density-matrix coefficients, so a time series only
    costs one combination and one entropy quadrature per instant.

    Parameters
    ----------
    params : MoshinskyParams
        Only ``omega`` and ``lam`` are used; the bath enters via ``rho``.
    grid1d : Grid1D
        Grid for the reduced one-particle densities, also used as the
        integration grid of the eliminated particle.
    grid2d : Grid2D
        Grid for the two-particle densities.
    """

    _CHUNK = 256

    def __init__(self, params, grid1d: Grid1D | None = None, grid2d: Grid2D | None = None):
        self.params = params
        self.grid1d = grid1d or Grid1D()
        self.grid2d = grid2d or Grid2D.square()

    def _products(self, u1, u2, momentum: bool):
        if momentum:
            f0 = eigenfunction_p(GROUND, self.params, u1, u2)
            f1 = eigenfunction_p(COM_EXCITED, self.params, u1, u2)
        else:
            f0 = eigenfunction(GROUND, self.params, u1, u2)
            f1 = eigenfunction(COM_EXCITED, self.params, u1, u2)
        return np.abs(f0) ** 2, np.abs(f1) ** 2, f0 * np.conj(f1)

    def _joint(self, momentum):
        u1, u2 = self.grid2d.mesh()
        return self._products(u1, u2, momentum)

    def _reduced(self, momentum):
        nodes, w = self.grid1d.nodes, self.grid1d.weights
        parts = [np.empty(nodes.size), np.empty(nodes.size), np.empty(nodes.size, dtype=complex)]
        for start in range(0, nodes.size, self._CHUNK):
            block = slice(start, start + self._CHUNK)
            prods = self._products(nodes[block, None], nodes[None, :], momentum)
            for out, prod in zip(parts, prods):
                out[block] = np.sum(prod * w, axis=1)
        return tuple(parts)

    @cached_property
    def joint_x(self):
        return self._joint(False)

    @cached_property
    def joint_p(self):
        return self._joint(True)

    @cached_property
    def reduced_x(self):
        return self._reduced(False)

    @cached_property
    def reduced_p(self):
        return self._reduced(True)

    @staticmethod
    def _combine(rho: DensityMatrix2, parts):
        a00, a11, a01 = parts
        return rho.rho00 * a00 + rho.rho11 * a11 + 2.0 * (rho.rho01 * a01).real

    def joint_field_x(self, rho: DensityMatrix2) -> DensityField:
        return DensityField(self.grid2d, self._combine(rho, self.joint_x))

    def joint_field_p(self, rho: DensityMatrix2) -> DensityField:
        return DensityField(self.grid2d, self._combine(rho, self.joint_p))

    def reduced_field_x(self, rho: DensityMatrix2) -> DensityField:
        return DensityField(self.grid1d, self._combine(rho, self.reduced_x))

    def reduced_field_p(self, rho: DensityMatrix2) -> DensityField:
        return DensityField(self.grid1d, self._combine(rho, self.reduced_p))

    def record(self, t: float, rho: DensityMatrix2) -> InfoRecord:
        return InfoRecord(
            t=float(t),
            s_x=shannon_1d(self.reduced_field_x(rho)),
            s_p=shannon_1d(self.reduced_field_p(rho)),
            s_x2=shannon_2d(self.joint_field_x(rho)),
            s_p2=shannon_2d(self.joint_field_p(rho)),
        )


def info_record(t: float, params: MoshinskyParams, grid1d: Grid1D | None = None,
                grid2d: Grid2D | None = None) -> InfoRecord:
    """All one- and two-particle measures at a single instant."""
    return MoshinskyBasis(params, grid1d, grid2d).record(t, params.rho(t))
