# %% [markdown]
# Entropy sums versus coupling strength
# =====================================
#
# The same sweep the ``oqsinfo lambda-sweep`` command writes, done in-process
# through :func:`oqsinfo.runner.run_lambda_sweep`.

# %%
import math

from oqsinfo.runner import RunConfig, default_lambda_grid, run_lambda_sweep

config = RunConfig(model="moshinsky", regime="dephasing", gammas=(0.15,),
                   lambdas=default_lambda_grid(1.0), times=(math.pi / 2, 2 * math.pi))
result = run_lambda_sweep(config)

# %%
print(f"{'t':>7} {'lam':>6} {'s_t':>9} {'s_T':>9}")
for row in result.rows:
    print(f"{row['t']:7.3f} {row['lambda']:6.3f} {row['s_t']:9.5f} {row['s_T']:9.5f}")

# %% [markdown]
# At a quarter period the one-particle sum dips to a minimum in the middle
# of the range before rising again as the relative motion softens.

# %%
quarter = [r for r in result.rows if abs(r["t"] - math.pi / 2) < 1e-12]
best = min(quarter, key=lambda r: r["s_t"])
print(f"minimum s_t = {best['s_t']:.5f} at lam = {best['lambda']:.3f}")
