"""Unitary wave group of the linear part d(v,w) = (w, -theta*(-Lap)v) dt.

Mode n evolves independently: with omega = sqrt(mu_n),
    pos' =  cos(t w) pos + sin(t w)/w vel
    vel' = -w sin(t w) pos + cos(t w) vel.
In the bold-H_0 orthonormal coordinates (pos, vel/w) this is the plane rotation
R(t w), hence the group is an exact isometry of every bold-H_r.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .spectral import ModeGrid, PairState, make_state, norm_pair

__all__ = ["GroupCache", "make_cache", "propagate", "group_defect",
           "lambda_diff_opnorm", "scalar_sup"]

_SUP_GRID_STEP = 1e-5  # grid spacing for scalar_sup on (0, 4 pi]


@dataclass(frozen=True)
class GroupCache:
    """Per-(grid, t) trig tables: cos(t w), sin(t w)/w, w sin(t w) with w = sqrt(mu)."""

    grid: ModeGrid
    t: float
    cos_vals: np.ndarray
    sinc_vals: np.ndarray
    sin_omega: np.ndarray


def make_cache(grid: ModeGrid, t: float) -> GroupCache:
    t = float(t)
    if not np.isfinite(t):
        raise ValueError(f"t must be finite, got {t}")
    w = grid.sqrt_eigenvalues
    tw = t * w
    c = np.cos(tw)
    s = np.sin(tw)
    for a in (c, s):
        a.setflags(write=False)
    sinc = s / w
    som = s * w
    sinc.setflags(write=False)
    som.setflags(write=False)
    return GroupCache(grid=grid, t=t, cos_vals=c, sinc_vals=sinc, sin_omega=som)


def propagate(x: PairState, t: float, cache: GroupCache | None = None) -> PairState:
    """Apply e^{tA} to a pair state (exact per-mode rotation)."""
    if cache is None:
        cache = make_cache(x.grid, t)
    else:
        if cache.t != t:
            raise ValueError(f"cache built for t={cache.t}, called with t={t}")
        if cache.grid.cutoff != x.grid.cutoff or cache.grid.wave_speed != x.grid.wave_speed:
            raise ValueError("cache built for a different grid")
    pos = cache.cos_vals * x.pos + cache.sinc_vals * x.vel
    vel = -cache.sin_omega * x.pos + cache.cos_vals * x.vel
    return make_state(x.grid, pos, vel)


def group_defect(x: PairState, s: float, t: float) -> float:
    """bold-H_0 defect || e^{tA} e^{sA} x - e^{(s+t)A} x || (zero up to rounding)."""
    two_step = propagate(propagate(x, s), t)
    one_step = propagate(x, s + t)
    return norm_pair(two_step - one_step, 0.0)


def _spectral_norm_2x2(blocks: np.ndarray) -> np.ndarray:
    """Largest singular value of a stack of 2x2 blocks, in closed form.

    sigma_max^2 = (f + sqrt(f^2 - 4 d^2)) / 2 with f = Frobenius^2, d = det.
    """
    a = blocks[..., 0, 0]
    b = blocks[..., 0, 1]
    c = blocks[..., 1, 0]
    d = blocks[..., 1, 1]
    f = a * a + b * b + c * c + d * d
    det = a * d - b * c
    disc = f * f - 4.0 * det * det
    disc = np.maximum(disc, 0.0)  # clip rounding noise
    return np.sqrt(0.5 * (f + np.sqrt(disc)))


def lambda_diff_opnorm(alpha: float, t: float, grid: ModeGrid) -> float:
    """Operator norm of Lambda^-alpha (id - e^{tA}) on the truncated bold-H_0.

    Per mode, in bold-H_0 orthonormal coordinates, the operator is the 2x2 block
    mu_n^(-alpha/2) (I - R(t sqrt(mu_n))); the norm is the max over modes of its
    largest singular value.
    """
    alpha = float(alpha)
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must be in [0, 1], got {alpha}")
    t = float(t)
    if not (t >= 0.0 and np.isfinite(t)):
        raise ValueError(f"t must be finite and >= 0, got {t}")
    theta = t * grid.sqrt_eigenvalues
    c = np.cos(theta)
    s = np.sin(theta)
    scale = grid.eigenvalues ** (-0.5 * alpha)
    blocks = np.empty((grid.cutoff, 2, 2))
    blocks[:, 0, 0] = scale * (1.0 - c)
    blocks[:, 0, 1] = scale * (-s)
    blocks[:, 1, 0] = scale * s
    blocks[:, 1, 1] = scale * (1.0 - c)
    return float(np.max(_spectral_norm_2x2(blocks)))


def _one_minus_cos(t: np.ndarray) -> np.ndarray:
    # stable at small t: 1 - cos t = 2 sin^2(t/2)
    s = np.sin(0.5 * t)
    return 2.0 * s * s


def scalar_sup(alpha: float) -> float:
    """sup_{t>0} t^-alpha |1 - cos t| for alpha in [0, 2].

    Dense grid on (0, 4 pi] (spacing 1e-5), one guarded Newton refinement of the
    best grid point, and the analytic bound 2 (4 pi)^-alpha for the tail t > 4 pi
    (never larger than the value near t = pi, so the interior scan is exhaustive).
    """
    alpha = float(alpha)
    if not 0.0 <= alpha <= 2.0:
        raise ValueError(f"alpha must be in [0, 2], got {alpha}")
    hi = 4.0 * np.pi
    t = np.arange(1, int(np.ceil(hi / _SUP_GRID_STEP)) + 1, dtype=np.float64)
    t *= _SUP_GRID_STEP
    t = t[t <= hi]
    vals = _one_minus_cos(t) * t ** (-alpha)
    k = int(np.argmax(vals))
    best = float(vals[k])

    # critical points solve phi(t) = t sin t - alpha (1 - cos t) = 0
    t0 = float(t[k])
    phi = t0 * np.sin(t0) - alpha * _one_minus_cos(np.float64(t0))
    dphi = np.sin(t0) + t0 * np.cos(t0) - alpha * np.sin(t0)
    if abs(dphi) > 1e-12:
        t1 = t0 - phi / dphi
        if 0.0 < t1 <= hi and abs(t1 - t0) <= 2.0 * _SUP_GRID_STEP:
            best = max(best, float(_one_minus_cos(np.float64(t1)) * t1 ** (-alpha)))

    tail = 2.0 * hi ** (-alpha)
    return max(best, tail)
