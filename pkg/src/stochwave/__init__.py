"""stochwave: spectral Galerkin + exponential Euler for the 1D stochastic wave
equation with multiplicative affine noise, plus rate harnesses and operator checks."""

from .spectral import (
    ModeGrid, PairState, ModeSet,
    build_grid, make_state, zero_state, decay_state,
    norm_scalar, norm_pair, inner_h0, apply_lambda_power, project,
)
from .wavegroup import GroupCache, propagate, group_defect, lambda_diff_opnorm, scalar_sup
from .noise import (
    NoiseModel, WienerIncrement, IncrementStream,
    sample_increment, sine_expand_product, apply_diffusion, fast_multiply,
)
from .scheme import (
    StepPlan, SimConfig, make_plan,
    step_once, simulate_path, simulate_coupled, galerkin_pair,
)
from .harness import (
    Functional, RateReport, SweepError,
    eval_functional, strong_error_sweep, weak_error_sweep, galerkin_sweep,
    sixth_moment_sweep, fit_rate,
)
from .props import (
    NoiseCalibration,
    schatten_norm, check_schatten_hoelder, multiplier_hs_norm,
    calibrate_noise_constants, run_property_suite,
)

__version__ = "0.1.0"
