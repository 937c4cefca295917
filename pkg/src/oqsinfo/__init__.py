"""Information-theoretic measures of open quantum oscillators.

Lindblad dynamics of a two-level truncated harmonic oscillator and of the
two-particle Moshinsky atom, with Shannon entropies, entropic uncertainty
sums and mutual information in position, momentum and separable phase space.
"""
from .dynamics import (
    BathParams,
    DensityMatrix2,
    Regime,
    density_matrix,
    dephasing_coefficients,
    initial_state,
    propagate_numeric,
    relaxation_coefficients,
    relaxation_rates,
)
from .grid import DensityField, Grid1D, Grid2D
from .hermite import OscillatorParams, eigenfunction_p, eigenfunction_x, energy, hermite_poly
from .ho import HOModel
from .info import (
    BOUND_1P,
    BOUND_2P,
    InfoRecord,
    check_bounds,
    mutual_information,
    mutual_information_direct,
    shannon_1d,
    shannon_2d,
)
from .moshinsky import MoshinskyBasis, MoshinskyParams, TwoParticleLabel, relative_frequency
from .runner import RunConfig, emit_density_snapshots, load_config, run_lambda_sweep, run_time_sweep

__version__ = "0.1.0"
