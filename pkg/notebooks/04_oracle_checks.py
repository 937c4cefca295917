# %% [markdown]
# Cross-checks against independent computations
# =============================================
#
# 1. Closed-form density matrices against RK4 integration of the Lindblad
#    equation built from jump operators.
# 2. Analytic momentum eigenfunctions against an FFT of the position ones.
# 3. Grid doubling for every entropy.

# %%
import math

import numpy as np

from oqsinfo import BathParams, density_matrix, propagate_numeric
from oqsinfo.hermite import eigenfunction_p, eigenfunction_x

for regime in ("dephasing", "relaxation"):
    bath = BathParams(0.15, regime)
    checkpoints = list(np.linspace(0, 2 * math.pi, 9)[:-1])
    states = propagate_numeric(2 * math.pi, 1.0, bath, checkpoints=checkpoints)
    worst = max(np.max(np.abs(s.as_array() - density_matrix(t, 1.0, bath).as_array()))
                for t, s in zip(checkpoints + [2 * math.pi], states))
    print(f"{regime:>10}: max |closed form - RK4| = {worst:.2e}")

# %%
x = np.linspace(-40, 40, 4096, endpoint=False)
dx = x[1] - x[0]
p = 2 * np.pi * np.fft.fftshift(np.fft.fftfreq(x.size, dx))
keep = np.abs(p) <= 6
for n in range(3):
    phase = np.exp(-1j * p * x[0])
    ft = dx / np.sqrt(2 * np.pi) * phase * np.fft.fftshift(np.fft.fft(eigenfunction_x(n, 1.0, x)))
    err = np.max(np.abs(ft - eigenfunction_p(n, 1.0, p))[keep])
    print(f"n = {n}: max |FFT - analytic| = {err:.1e}")

# %%
from oqsinfo import MoshinskyBasis, MoshinskyParams
from oqsinfo.grid import Grid1D, Grid2D

params = MoshinskyParams(1.0, 0.3, BathParams(0.15, "relaxation"))
coarse = MoshinskyBasis(params)
fine = MoshinskyBasis(params, Grid1D().refined(), Grid2D.square().refined())
for t in (0.0, math.pi / 2, math.pi):
    a, b = coarse.record(t, params.rho(t)), fine.record(t, params.rho(t))
    shift = max(abs(getattr(a, k) - getattr(b, k)) for k in ("s_x", "s_p", "s_x2", "s_p2"))
    print(f"t = {t:.3f}: largest entropy shift under grid doubling = {shift:.1e}")
