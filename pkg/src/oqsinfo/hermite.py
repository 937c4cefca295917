"""Harmonic-oscillator eigenfunctions in position and momentum space.

Atomic units (hbar = m = 1). Momentum-space functions follow the unitary
convention ``psi(p) = (2 pi)^(-1/2) int psi(x) exp(-i p x) dx`` which gives
``phi_n(p) = (-i)^n * [real Hermite function of p / sqrt(omega)]``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class OscillatorParams:
    """Angular frequency of a one-dimensional harmonic trap."""

    omega: float = 1.0

    def __post_init__(self):
        if not self.omega > 0:
            raise ValueError(f"omega must be > 0, got {self.omega!r}")


def _omega(params) -> float:
    omega = params.omega if isinstance(params, OscillatorParams) else float(params)
    if not omega > 0:
        raise ValueError(f"omega must be > 0, got {omega!r}")
    return omega


def hermite_poly(n: int, y):
    """Physicists' Hermite polynomial H_n(y) by three-term recurrence."""
    if n < 0:
        raise ValueError("n must be >= 0")
    y = np.asarray(y, dtype=float)
    h_prev = np.ones_like(y)
    if n == 0:
        return h_prev if np.ndim(h_prev) else float(h_prev)
    h = 2.0 * y
    for k in range(1, n):
        h_prev, h = h, 2.0 * y * h - 2.0 * k * h_prev
    return h if np.ndim(h) else float(h)


def _hermite_function(n: int, y):
    """Normalized Hermite function of unit frequency.

    Uses the normalized recurrence so that large ``n`` never touches
    ``2^n n!`` explicitly.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    y = np.asarray(y, dtype=float)
    psi_prev = np.pi ** -0.25 * np.exp(-0.5 * y * y)
    if n == 0:
        return psi_prev
    psi = np.sqrt(2.0) * y * psi_prev
    for k in range(1, n):
        psi_prev, psi = psi, np.sqrt(2.0 / (k + 1)) * y * psi - np.sqrt(k / (k + 1)) * psi_prev
    return psi


def eigenfunction_x(n: int, params, x):
    """Position-space eigenfunction phi_n(x) of the oscillator.

    Parameters
    ----------
    n : int
        Quantum number.
    params : OscillatorParams or float
        Trap frequency (a bare float is accepted as ``omega``).
    x : float or array_like
        Positions.

    Returns
    -------
    float or ndarray
        ``(omega/pi)^(1/4) (2^n n!)^(-1/2) H_n(sqrt(omega) x) exp(-omega x^2 / 2)``.
    """
    omega = _omega(params)
    x = np.asarray(x, dtype=float)
    out = omega ** 0.25 * _hermite_function(n, np.sqrt(omega) * x)
    return out if np.ndim(out) else float(out)


def eigenfunction_p(n: int, params, p):
    """Momentum-space eigenfunction, complex with the ``(-i)^n`` phase."""
    omega = _omega(params)
    p = np.asarray(p, dtype=float)
    out = (-1j) ** n * omega ** -0.25 * _hermite_function(n, p / np.sqrt(omega))
    return out if np.ndim(out) else complex(out)


def energy(n: int, params) -> float:
    if n < 0:
        raise ValueError("n must be >= 0")
    return _omega(params) * (n + 0.5)
