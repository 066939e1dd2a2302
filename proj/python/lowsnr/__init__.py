"""Low-SNR capacity of the non-coherent Rayleigh fading channel.

Optimal on-off signaling, exact low-SNR capacity, non-coherence penalty,
energy per nat, and mass-point/capacity bounds, cross-validated against a
quadrature oracle and Monte Carlo simulation.
"""

from ._core import (  # noqa: F401
    BoundaryMaximumError,
    BoundsPoint,
    BracketError,
    BranchK,
    CapacityPoint,
    ChannelParams,
    ConvergenceError,
    LowSnrConstants,
    MiEstimate,
    OnOffInput,
    QuadResult,
    SimConfig,
    SolveResult,
    capacity_at,
    capacity_bounds,
    capacity_low_snr,
    cond_density,
    constants,
    estimate_mi,
    gauss_2f1_1b,
    lambert_ladder_upper,
    lambert_w,
    maximize_mi,
    mi_closed,
    mi_derivative_x1,
    mi_quadrature,
    mi_series,
    output_density,
    penalty_per_snr,
    phi,
    sample_outputs,
    snr_of_x1,
    solve_x1,
    stationarity_residual,
    x1_lower_bound,
    x1_lower_bound_one_step,
    x1_upper_bound,
)

__version__ = "1.0.0"
