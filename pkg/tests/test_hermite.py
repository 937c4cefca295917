import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.polynomial import hermite as nphermite

from oqsinfo.hermite import OscillatorParams, eigenfunction_p, eigenfunction_x, energy, hermite_poly


def trapz(y, x):
    h = x[1] - x[0]
    return h * (np.sum(y) - 0.5 * (y[0] + y[-1]))


def continuous_ft(psi, x):
    """Unitary FT (2 pi)^(-1/2) int psi(x) exp(-i p x) dx sampled at FFT frequencies."""
    dx = x[1] - x[0]
    p = 2 * np.pi * np.fft.fftshift(np.fft.fftfreq(x.size, d=dx))
    # shift the phase reference from x[0] to the origin
    vals = np.fft.fftshift(np.fft.fft(psi)) * dx / np.sqrt(2 * np.pi) * np.exp(-1j * p * x[0])
    return p, vals


@pytest.mark.parametrize("n,y,expected", [(0, 1.7, 1.0), (1, 0.5, 1.0), (3, 1.0, -4.0)])
def test_hermite_poly_examples(n, y, expected):
    assert hermite_poly(n, y) == pytest.approx(expected, abs=1e-14)


@given(st.integers(0, 12), st.floats(-4, 4))
def test_hermite_poly_matches_numpy_series(n, y):
    coef = np.zeros(n + 1)
    coef[n] = 1.0
    ref = nphermite.hermval(y, coef)
    assert hermite_poly(n, y) == pytest.approx(ref, rel=1e-10, abs=1e-8)


def test_hermite_rejects_negative_order():
    with pytest.raises(ValueError):
        hermite_poly(-1, 0.3)


def test_eigenfunction_x_examples():
    assert eigenfunction_x(0, OscillatorParams(1.0), 0.0) == pytest.approx(math.pi ** -0.25, abs=1e-15)
    assert eigenfunction_x(0, 1.0, 0.0) == pytest.approx(0.751126, abs=1e-6)
    assert eigenfunction_x(1, 1.0, 0.0) == 0.0
    x = np.linspace(-8, 8, 2001)
    assert trapz(eigenfunction_x(0, 1.0, x) ** 2, x) == pytest.approx(1.0, abs=1e-10)


def test_eigenfunction_matches_textbook_formula():
    x = np.linspace(-5, 5, 101)
    for omega in (0.5, 1.0, 2.0):
        for n in range(4):
            coef = np.zeros(n + 1)
            coef[n] = 1.0
            ref = ((omega / np.pi) ** 0.25 / math.sqrt(2**n * math.factorial(n))
                   * nphermite.hermval(np.sqrt(omega) * x, coef) * np.exp(-omega * x**2 / 2))
            np.testing.assert_allclose(eigenfunction_x(n, omega, x), ref, atol=1e-13)


@pytest.mark.parametrize("bad", [0.0, -1.0])
def test_invalid_omega_rejected(bad):
    with pytest.raises(ValueError):
        OscillatorParams(bad)
    with pytest.raises(ValueError):
        eigenfunction_x(0, bad, 0.0)
    with pytest.raises(ValueError):
        eigenfunction_p(0, bad, 0.0)


def test_eigenfunction_p_examples():
    v = eigenfunction_p(0, 1.0, 0.0)
    assert isinstance(v, complex)
    assert v == pytest.approx(math.pi ** -0.25 + 0j, abs=1e-15)
    assert abs(eigenfunction_p(1, 1.0, 0.0)) == 0.0


@pytest.mark.parametrize("omega", [0.5, 1.0, 2.0])
@pytest.mark.parametrize("n", [0, 1, 2])
def test_eigenfunction_p_is_fourier_transform_of_x(n, omega):
    x = np.linspace(-40, 40, 4096, endpoint=False)
    p, ft = continuous_ft(eigenfunction_x(n, omega, x), x)
    window = np.abs(p) <= 6
    err = np.max(np.abs(ft[window] - eigenfunction_p(n, omega, p[window])))
    assert err <= 1e-6


def test_orthonormality():
    x = np.linspace(-10, 10, 4001)
    for omega in (0.5, 1.0, 2.0):
        phis = [eigenfunction_x(n, omega, x) for n in range(4)]
        for m in range(4):
            for n in range(4):
                assert trapz(phis[m] * phis[n], x) == pytest.approx(float(m == n), abs=1e-8)


@settings(max_examples=50)
@given(st.integers(0, 6), st.floats(0.2, 3.0), st.floats(-6, 6))
def test_parity(n, omega, x):
    assert eigenfunction_x(n, omega, -x) == (-1) ** n * eigenfunction_x(n, omega, x)


def test_energy():
    assert energy(0, 1.0) == 0.5
    assert energy(1, 1.0) == 1.5
    assert energy(1, 1.0) - energy(0, 1.0) == 1.0
    assert energy(2, OscillatorParams(2.0)) == 5.0


def test_large_order_stays_finite_and_normalized():
    x = np.linspace(-15, 15, 6001)
    phi = eigenfunction_x(60, 1.0, x)
    assert np.all(np.isfinite(phi))
    assert trapz(phi**2, x) == pytest.approx(1.0, abs=1e-8)
