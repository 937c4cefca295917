"""Two-level density-matrix coefficients under Lindblad dynamics.

The truncated system keeps the two lowest levels ``|0>``, ``|1>`` separated by
``omega``. Two bath regimes are supported: pure dephasing (diagonal jump
operators) and relaxation (off-diagonal jump operators with detailed-balance
rates). Closed forms are exact; :func:`propagate_numeric` integrates the
Lindblad equation as a matrix ODE and exists only to cross-check them.
"""
from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Regime",
    "BathParams",
    "DensityMatrix2",
    "RelaxationRates",
    "initial_state",
    "dephasing_coefficients",
    "relaxation_rates",
    "relaxation_coefficients",
    "density_matrix",
    "liouvillian",
    "propagate_numeric",
]


class Regime(enum.Enum):
    PURE_DEPHASING = "dephasing"
    RELAXATION = "relaxation"

    @classmethod
    def parse(cls, value) -> "Regime":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower().replace("-", "_")
        aliases = {
            "dephasing": cls.PURE_DEPHASING,
            "pure_dephasing": cls.PURE_DEPHASING,
            "relaxation": cls.RELAXATION,
        }
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown regime {value!r}; expected 'dephasing' or 'relaxation'") from None


@dataclass(frozen=True)
class BathParams:
    gamma: float
    regime: Regime

    def __post_init__(self):
        if not self.gamma >= 0:
            raise ValueError(f"gamma must be >= 0, got {self.gamma!r}")
        object.__setattr__(self, "regime", Regime.parse(self.regime))


@dataclass(frozen=True)
class DensityMatrix2:
    """Coefficients of a 2x2 density matrix; ``rho10`` is ``conj(rho01)``."""

    rho00: float
    rho11: float
    rho01: complex

    @property
    def rho10(self) -> complex:
        return self.rho01.conjugate()

    @property
    def trace(self) -> float:
        return self.rho00 + self.rho11

    def as_array(self) -> np.ndarray:
        return np.array([[self.rho00, self.rho01], [self.rho10, self.rho11]], dtype=complex)

    @classmethod
    def from_array(cls, rho) -> "DensityMatrix2":
        rho = np.asarray(rho)
        return cls(float(rho[0, 0].real), float(rho[1, 1].real), complex(rho[0, 1]))

    def is_physical(self, tol: float = 1e-12) -> bool:
        """Unit trace, populations in [0, 1] and 2x2 positivity."""
        return (
            abs(self.trace - 1.0) <= tol
            and -tol <= self.rho00 <= 1 + tol
            and -tol <= self.rho11 <= 1 + tol
            and abs(self.rho01) ** 2 <= self.rho00 * self.rho11 + tol
        )


@dataclass(frozen=True)
class RelaxationRates:
    g01: float
    g10: float
    g20: float
    g21: float

    @property
    def coherence_decay(self) -> float:
        return 0.5 * (self.g10 + self.g20 + self.g01 + self.g21)


def _check_time(t: float) -> float:
    t = float(t)
    if not t >= 0:
        raise ValueError(f"time must be >= 0, got {t!r}")
    return t


def initial_state() -> DensityMatrix2:
    """Equal superposition of the two lowest levels, a pure state."""
    return DensityMatrix2(0.5, 0.5, 0.5 + 0.0j)


def dephasing_coefficients(t: float, omega: float, bath: BathParams) -> DensityMatrix2:
    if bath.regime is not Regime.PURE_DEPHASING:
        raise ValueError("dephasing_coefficients needs a pure-dephasing bath")
    t = _check_time(t)
    # gamma_0 = gamma_1 = gamma, so the decay rate (gamma_0 + gamma_1) / 4 is gamma / 2
    rho01 = 0.5 * complex(math.cos(omega * t), math.sin(omega * t)) * math.exp(-0.5 * bath.gamma * t)
    return DensityMatrix2(0.5, 0.5, rho01)


def relaxation_rates(gamma: float, omega: float = 1.0) -> RelaxationRates:
    """Bath rates expressed through ``gamma = g01`` by detailed balance.

    ``g_mn`` is the rate for the transition ``n -> m``. ``g21 ~ g10`` is taken
    as given, not derived.
    """
    if not gamma >= 0:
        raise ValueError(f"gamma must be >= 0, got {gamma!r}")
    down = math.exp(-omega)
    return RelaxationRates(g01=gamma, g10=gamma * down, g20=gamma * down * down, g21=gamma * down)


def relaxation_coefficients(t: float, omega: float, bath: BathParams) -> DensityMatrix2:
    if bath.regime is not Regime.RELAXATION:
        raise ValueError("relaxation_coefficients needs a relaxation bath")
    t = _check_time(t)
    rates = relaxation_rates(bath.gamma, omega)
    # stationary population g01 / (g01 + g10) does not depend on gamma
    rho_eq = 1.0 / (1.0 + math.exp(-omega))
    k = rates.g01 + rates.g10
    rho00 = rho_eq + (0.5 - rho_eq) * math.exp(-k * t)
    rho01 = (
        0.5
        * complex(math.cos(omega * t), math.sin(omega * t))
        * math.exp(-rates.coherence_decay * t)
    )
    return DensityMatrix2(rho00, 1.0 - rho00, rho01)


def density_matrix(t: float, omega: float, bath: BathParams) -> DensityMatrix2:
    """Closed-form coefficients for whichever regime ``bath`` selects."""
    if bath.regime is Regime.PURE_DEPHASING:
        return dephasing_coefficients(t, omega, bath)
    return relaxation_coefficients(t, omega, bath)


def _dissipator(jump: np.ndarray) -> np.ndarray:
    # row-major vec: vec(A X B) = kron(A, B.T) vec(X)
    eye = np.eye(jump.shape[0])
    jdj = jump.conj().T @ jump
    return np.kron(jump, jump.conj()) - 0.5 * np.kron(jdj, eye) - 0.5 * np.kron(eye, jdj.T)


def liouvillian(omega: float, bath: BathParams) -> np.ndarray:
    """4x4 superoperator acting on the row-major flattened density matrix.

    Built from the Hamiltonian and the jump operators, independently of the
    closed-form rate expressions.
    """
    ham = np.diag([0.5 * omega, 1.5 * omega]).astype(complex)
    eye = np.eye(2)
    sup = -1j * (np.kron(ham, eye) - np.kron(eye, ham.T))

    def ket_bra(m, n):
        op = np.zeros((2, 2), dtype=complex)
        op[m, n] = 1.0
        return op

    if bath.regime is Regime.PURE_DEPHASING:
        for m in (0, 1):
            sup = sup + _dissipator(math.sqrt(bath.gamma / 2) * ket_bra(m, m))
    else:
        rates = relaxation_rates(bath.gamma, omega)
        sup = sup + _dissipator(math.sqrt(rates.g01) * ket_bra(0, 1))
        sup = sup + _dissipator(math.sqrt(rates.g10) * ket_bra(1, 0))
        # channels into level 2 lie outside the truncated space; only their
        # anticommutator damping of the coherences (vec slots 1 and 2) is kept
        leak = 0.5 * (rates.g20 + rates.g21)
        sup = sup - np.diag([0.0, leak, leak, 0.0])
    return sup


def _rk4(sup: np.ndarray, y: np.ndarray, dt: float, steps: int) -> np.ndarray:
    for _ in range(steps):
        k1 = sup @ y
        k2 = sup @ (y + 0.5 * dt * k1)
        k3 = sup @ (y + 0.5 * dt * k2)
        k4 = sup @ (y + dt * k3)
        y = y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return y


def propagate_numeric(t_end: float, omega: float, bath: BathParams, dt: float = 1e-4,
                      checkpoints=None):
    """Integrate the Lindblad equation with fixed-step classical RK4.

    Parameters
    ----------
    t_end : float
        Final time; the last step is shortened so that ``t_end`` is hit exactly.
    omega : float
        Level spacing.
    bath : BathParams
    dt : float
        Nominal step.
    checkpoints : sequence of float, optional
        Extra times in ``[0, t_end]`` at which to record the state. When given,
        a list of :class:`DensityMatrix2` is returned, one per checkpoint,
        followed by the state at ``t_end``.

    Returns
    -------
    DensityMatrix2 or list of DensityMatrix2
    """
    if not dt > 0:
        raise ValueError(f"dt must be > 0, got {dt!r}")
    t_end = _check_time(t_end)
    sup = liouvillian(omega, bath)
    y = initial_state().as_array().reshape(-1)
    stops = sorted(float(c) for c in (checkpoints or ()))
    if stops and (stops[0] < 0 or stops[-1] > t_end):
        raise ValueError("checkpoints must lie in [0, t_end]")
    stops.append(t_end)

    states = []
    t = 0.0
    for stop in stops:
        span = stop - t
        steps = int(math.floor(span / dt + 1e-9))
        y = _rk4(sup, y, dt, steps)
        rest = span - steps * dt
        if rest > 1e-15:
            y = _rk4(sup, y, rest, 1)
        t = stop
        rho = y.reshape(2, 2)
        drift = abs(np.trace(rho).real - 1.0)
        if drift > 1e-9:
            warnings.warn(f"trace drifted by {drift:.3e} at t={t:.6g}", RuntimeWarning, stacklevel=2)
        states.append(DensityMatrix2.from_array(0.5 * (rho + rho.conj().T)))
    if checkpoints is None:
        return states[-1]
    return states
