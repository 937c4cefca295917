"""Shannon entropies, entropy sums, bound checks and mutual information.

All quantities are in nats and computed with composite trapezoid quadrature
on the grid that carries the density. The convention ``0 ln 0 = 0`` is applied
to sampled values below ``1e-300``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .grid import DensityField, Grid1D, Grid2D

#: Lower bound of the one-particle entropy sum ``s_x + s_p``.
BOUND_1P = 1.0 + math.log(math.pi)
#: Lower bound of the two-particle entropy sum.
BOUND_2P = 2.0 * BOUND_1P
BOUND_TOL = 1e-6
TINY = 1e-300


def _neg_n_log_n(values: np.ndarray) -> np.ndarray:
    safe = np.where(values > TINY, values, 1.0)
    return np.where(values > TINY, -values * np.log(safe), 0.0)


def _check_field(field: DensityField, ndim: int) -> None:
    if field.ndim != ndim:
        raise ValueError(f"expected a {ndim}D density field, got {field.ndim}D")
    if not field.is_normalized:
        raise ValueError(f"density is not normalized (norm = {field.norm:.12g})")


def shannon_1d(field: DensityField) -> float:
    """Differential entropy ``-int n ln n`` of a normalized 1D field."""
    _check_field(field, 1)
    return field.grid.integrate(_neg_n_log_n(field.values))


def shannon_2d(field: DensityField) -> float:
    """Differential entropy ``-int int n ln n`` of a normalized 2D field.

    The leading minus sign is kept, same as in the 1D case, so that the
    two-particle entropy sum obeys its positive lower bound.
    """
    _check_field(field, 2)
    return field.grid.integrate(_neg_n_log_n(field.values))


def mutual_information(joint: DensityField, marg1: DensityField, marg2: DensityField | None = None) -> float:
    """``s(marg1) + s(marg2) - s(joint)``.

    For an exchange-symmetric pair the marginals coincide and this is the
    familiar ``2 s_x - s_x2``; ``marg2`` defaults to ``marg1``. The marginals
    may live on a different (typically finer) grid than the joint.
    """
    s1 = shannon_1d(marg1)
    s2 = s1 if marg2 is None or marg2 is marg1 else shannon_1d(marg2)
    return s1 + s2 - shannon_2d(joint)


def mutual_information_direct(joint: DensityField) -> float:
    """Mutual information from the integrand ``n ln[n / (n1 n2)]``.

    Marginals are reduced from ``joint`` on its own grid, so this path shares
    nothing with :func:`mutual_information` except the trapezoid weights.
    """
    _check_field(joint, 2)
    n1 = joint.marginal(0).values
    n2 = joint.marginal(1).values
    n = joint.values
    outer = np.outer(n1, n2)
    mask = (n > TINY) & (outer > TINY)
    integrand = np.zeros_like(n)
    integrand[mask] = n[mask] * np.log(n[mask] / outer[mask])
    return joint.grid.integrate(integrand)


@dataclass(frozen=True)
class InfoRecord:
    """Information measures at one time instant.

    Sums and mutual informations are derived properties, so the identities
    ``s_t = s_x + s_p``, ``s_T = s_x2 + s_p2`` and ``I_t = I_x + I_p`` hold by
    construction. Two-particle entries are ``None`` for one-particle models.
    """

    t: float
    s_x: float
    s_p: float
    s_x2: float | None = None
    s_p2: float | None = None

    @property
    def two_particle(self) -> bool:
        return self.s_x2 is not None and self.s_p2 is not None

    @property
    def s_t(self) -> float:
        return self.s_x + self.s_p

    @property
    def s_T(self) -> float | None:
        return self.s_x2 + self.s_p2 if self.two_particle else None

    @property
    def I_x(self) -> float | None:
        return 2.0 * self.s_x - self.s_x2 if self.two_particle else None

    @property
    def I_p(self) -> float | None:
        return 2.0 * self.s_p - self.s_p2 if self.two_particle else None

    @property
    def I_t(self) -> float | None:
        return self.I_x + self.I_p if self.two_particle else None


@dataclass(frozen=True)
class BoundReport:
    margin_1p: float
    margin_2p: float | None
    ok: bool


def check_bounds(record: InfoRecord, tol: float = BOUND_TOL) -> BoundReport:
    """Margins above the entropic uncertainty bounds; ``ok`` is False past ``-tol``."""
    m1 = record.s_t - BOUND_1P
    m2 = record.s_T - BOUND_2P if record.two_particle else None
    ok = m1 >= -tol and (m2 is None or m2 >= -tol)
    return BoundReport(m1, m2, ok)


def gaussian_entropy(omega: float) -> float:
    """Exact position entropy of an oscillator ground state, ``ln(pi e / omega) / 2``."""
    return 0.5 * math.log(math.pi * math.e / omega)


__all__ = [
    "BOUND_1P",
    "BOUND_2P",
    "BoundReport",
    "DensityField",
    "Grid1D",
    "Grid2D",
    "InfoRecord",
    "check_bounds",
    "gaussian_entropy",
    "mutual_information",
    "mutual_information_direct",
    "shannon_1d",
    "shannon_2d",
]
