# %% [markdown]
# Open harmonic oscillator: position and momentum entropies
# =========================================================
#
# Start from the equal superposition of the two lowest oscillator states and
# let the bath act. Under pure dephasing only the coherence decays; under
# relaxation the populations also flow towards the thermal ratio.

# %%
import math

import numpy as np

from oqsinfo import BathParams, HOModel, OscillatorParams
from oqsinfo.ho import info_record
from oqsinfo.info import BOUND_1P

osc = OscillatorParams(1.0)
times = np.linspace(0, 4 * math.pi, 9)

# %% [markdown]
# The sum ``s_x + s_p`` oscillates at twice the trap frequency while the
# coherence survives, and never drops below ``1 + ln(pi)``.

# %%
for regime in ("dephasing", "relaxation"):
    print(f"\n{regime}, gamma = 0.15")
    print(f"{'t':>8} {'s_x':>9} {'s_p':>9} {'s_t':>9} {'margin':>9}")
    model = HOModel(osc, BathParams(0.15, regime))
    for t in times:
        rec = info_record(t, model)
        print(f"{t:8.3f} {rec.s_x:9.5f} {rec.s_p:9.5f} {rec.s_t:9.5f} {rec.s_t - BOUND_1P:9.5f}")

# %% [markdown]
# Long-time limits: dephasing leaves an incoherent 50/50 mixture,
# relaxation leaves the thermal mixture with ``rho00 = 1 / (1 + e^-omega)``.

# %%
for regime in ("dephasing", "relaxation"):
    model = HOModel(osc, BathParams(0.15, regime))
    late = info_record(400.0, model)
    print(f"{regime:>10}: rho00 = {model.rho(400.0).rho00:.6f}, s_t -> {late.s_t:.6f}")
