import math

import numpy as np
import pytest

from oqsinfo.dynamics import BathParams, Regime
from oqsinfo.grid import DensityField, Grid1D
from oqsinfo.hermite import OscillatorParams, eigenfunction_x, energy
from oqsinfo.ho import HOModel, info_record, momentum_density, momentum_field, position_density, position_field
from oqsinfo.info import shannon_1d

DEPH = Regime.PURE_DEPHASING
RELAX = Regime.RELAXATION
# mpmath quad of -int n ln n for the t = 0 superposition, omega = 1
SX_T0 = 0.957725301346957623


def model(gamma=0.15, regime=DEPH, omega=1.0):
    return HOModel(OscillatorParams(omega), BathParams(gamma, regime))


def pure_state_momentum_density(t, omega):
    """|FT of (e^{-i E0 t} phi0 + e^{-i E1 t} phi1)/sqrt 2|^2 by FFT; independent of the bilinear form."""
    x = np.linspace(-40, 40, 8192, endpoint=False)
    dx = x[1] - x[0]
    psi = (np.exp(-1j * energy(0, omega) * t) * eigenfunction_x(0, omega, x)
           + np.exp(-1j * energy(1, omega) * t) * eigenfunction_x(1, omega, x)) / math.sqrt(2)
    freqs = 2 * np.pi * np.fft.fftshift(np.fft.fftfreq(x.size, d=dx))
    ft = np.fft.fftshift(np.fft.fft(psi)) * dx / math.sqrt(2 * math.pi) * np.exp(-1j * freqs * x[0])
    keep = np.abs(freqs) <= 6
    return freqs[keep], np.abs(ft[keep]) ** 2


def test_position_density_at_origin():
    for gamma in (0.0, 0.15, 0.5):
        for regime in (DEPH, RELAX):
            assert position_density(0.0, 0.0, model(gamma, regime)) == pytest.approx(0.5 / math.sqrt(math.pi), abs=1e-15)
    assert position_density(0.0, 0.0, model()) == pytest.approx(0.28209, abs=1e-5)


def test_dephasing_position_density_gamma_independent_at_quarter_period():
    x = np.linspace(-6, 6, 241)
    a = position_density(x, math.pi / 2, model(0.15))
    b = position_density(x, math.pi / 2, model(0.5))
    np.testing.assert_allclose(a, b, atol=1e-15)
    half = 0.5 * (eigenfunction_x(0, 1.0, x) ** 2 + eigenfunction_x(1, 1.0, x) ** 2)
    np.testing.assert_allclose(a, half, atol=1e-15)


@pytest.mark.parametrize("regime", [DEPH, RELAX])
@pytest.mark.parametrize("t", [0.0, 1.0, math.pi, 7.3])
def test_normalization(regime, t):
    g = Grid1D(8.0, 4001)
    m = model(0.3, regime)
    assert g.integrate(position_density(g.nodes, t, m)) == pytest.approx(1.0, abs=1e-9)
    assert g.integrate(momentum_density(g.nodes, t, m)) == pytest.approx(1.0, abs=1e-9)
    assert position_field(t, m).is_normalized and momentum_field(t, m).is_normalized


@pytest.mark.parametrize("regime", [DEPH, RELAX])
def test_nonnegative(regime):
    g = Grid1D()
    for t in np.linspace(0, 4 * math.pi, 17):
        assert position_density(g.nodes, t, model(0.5, regime)).min() >= -1e-12
        assert momentum_density(g.nodes, t, model(0.5, regime)).min() >= -1e-12


def test_momentum_density_at_t0_is_incoherent_mixture():
    p = np.linspace(-6, 6, 121)
    n = momentum_density(p, 0.0, model())
    mix = 0.5 * (np.exp(-p**2) / math.sqrt(math.pi) + 2 * p**2 * np.exp(-p**2) / math.sqrt(math.pi))
    np.testing.assert_allclose(n, mix, atol=1e-15)


@pytest.mark.parametrize("t", [0.0, 0.6, math.pi / 2, 2.0, math.pi])
@pytest.mark.parametrize("omega", [0.7, 1.0, 1.8])
def test_momentum_density_matches_fourier_of_pure_state(t, omega):
    # at gamma = 0 the state is pure; this pins the sign of the momentum cross term
    p, expected = pure_state_momentum_density(t, omega)
    m = model(0.0, DEPH, omega)
    np.testing.assert_allclose(momentum_density(p, t, m), expected, atol=1e-6)


def test_mean_momentum_follows_classical_motion():
    # <p>(t) = d<x>/dt with <x> = cos(t)/sqrt(2) at omega = 1, gamma = 0
    g = Grid1D()
    m = model(0.0)
    for t in (0.4, math.pi / 2, 2.5):
        mean_p = g.integrate(g.nodes * momentum_density(g.nodes, t, m))
        assert mean_p == pytest.approx(-math.sin(t) / math.sqrt(2), abs=1e-10)


def test_momentum_density_at_origin_is_gamma_independent_by_parity():
    # phi1(p = 0) = 0 kills the cross term at the origin
    for gamma in (0.15, 0.3, 0.5):
        assert momentum_density(0.0, math.pi / 2, model(gamma)) == pytest.approx(0.5 / math.sqrt(math.pi), abs=1e-15)


def test_periodic_without_bath():
    x = np.linspace(-8, 8, 401)
    m = model(0.0)
    for t in (0.0, 0.9, 2.2):
        np.testing.assert_allclose(position_density(x, t, m), position_density(x, t + 2 * math.pi, m), atol=1e-12)


def test_sx_at_t0_matches_fine_grid_and_mpmath():
    m = model()
    s = shannon_1d(position_field(0.0, m))
    s_fine = shannon_1d(position_field(0.0, m, Grid1D(8.0, 8001)))
    assert abs(s - s_fine) < 1e-6
    assert s == pytest.approx(SX_T0, abs=1e-6)


def test_dephasing_momentum_entropy_depends_on_gamma_at_quarter_period():
    s = [info_record(math.pi / 2, model(g)).s_p for g in (0.15, 0.3, 0.5)]
    assert abs(s[0] - s[1]) > 1e-4 and abs(s[1] - s[2]) > 1e-4
    sx = [info_record(math.pi / 2, model(g)).s_x for g in (0.15, 0.3, 0.5)]
    assert max(sx) - min(sx) < 1e-12


def test_dephasing_position_entropy_rises_toward_mixed_plateau():
    m = model(0.15)
    s0 = info_record(0.0, m).s_x
    mixed = DensityField(Grid1D(), 0.5 * (eigenfunction_x(0, 1.0, Grid1D().nodes) ** 2
                                          + eigenfunction_x(1, 1.0, Grid1D().nodes) ** 2))
    s_mixed = shannon_1d(mixed)
    s_late = info_record(300.0, m).s_x
    assert s0 < s_late <= s_mixed + 1e-12
    assert s_late == pytest.approx(s_mixed, abs=1e-6)
    # minima at t = 2 k pi rise with k
    mins = [info_record(2 * k * math.pi, m).s_x for k in range(4)]
    assert np.all(np.diff(mins) > 0)
