"""Spectral primitives for the Dirichlet Laplacian on (0,1).

Everything is expressed in the sine eigenbasis e_n(x) = sqrt(2) sin(n pi x),
n = 1..N.  The operator -theta * Laplacian has eigenvalues mu_n = theta (n pi)^2.
A scalar function is a coefficient vector a with v = sum a_n e_n; a pair state
x = (pos, vel) collects position and velocity coefficients.

Norm conventions (mu = mu_n):
    scalar H_r:     ||v||^2      = sum mu^(2r) a_n^2
    pair   bold H_r: ||x||^2     = sum mu^r pos_n^2 + mu^(r-1) vel_n^2
so bold H_r = H_{r/2} x H_{r/2 - 1/2}, and the shift Lambda^s (mode n of both
components scaled by mu_n^(s/2)) maps bold H_r isometrically onto bold H_{r-s}.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "ModeGrid",
    "PairState",
    "ModeSet",
    "build_grid",
    "make_state",
    "zero_state",
    "decay_state",
    "norm_scalar",
    "norm_pair",
    "inner_h0",
    "apply_lambda_power",
    "project",
]


def _frozen(arr, n=None) -> np.ndarray:
    """Copy to a read-only, C-contiguous float64 vector (optionally checking length)."""
    out = np.array(arr, dtype=np.float64, copy=True, order="C")
    if out.ndim != 1:
        raise ValueError(f"expected a 1-d coefficient vector, got shape {out.shape}")
    if n is not None and out.shape[0] != n:
        raise ValueError(f"expected {n} coefficients, got {out.shape[0]}")
    if not np.all(np.isfinite(out)):
        raise ValueError("coefficients must be finite")
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class ModeGrid:
    """Truncated eigenbasis: cutoff N, wave speed theta, eigenvalues mu_n = theta (n pi)^2."""

    cutoff: int
    wave_speed: float
    eigenvalues: np.ndarray

    @property
    def sqrt_eigenvalues(self) -> np.ndarray:
        return np.sqrt(self.eigenvalues)


def build_grid(cutoff: int, wave_speed: float = 1.0) -> ModeGrid:
    """Grid for the first `cutoff` Dirichlet modes at dispersion theta = wave_speed."""
    cutoff = int(cutoff)
    if cutoff < 1:
        raise ValueError(f"cutoff must be >= 1, got {cutoff}")
    wave_speed = float(wave_speed)
    if not wave_speed > 0 or not np.isfinite(wave_speed):
        raise ValueError(f"wave_speed must be positive and finite, got {wave_speed}")
    n = np.arange(1, cutoff + 1, dtype=np.float64)
    mu = wave_speed * (n * np.pi) ** 2
    mu.setflags(write=False)
    return ModeGrid(cutoff=cutoff, wave_speed=wave_speed, eigenvalues=mu)


@dataclass(frozen=True)
class PairState:
    """Immutable (position, velocity) coefficient pair on a ModeGrid."""

    pos: np.ndarray
    vel: np.ndarray
    grid: ModeGrid

    def __add__(self, other: "PairState") -> "PairState":
        _check_same_grid(self.grid, other.grid)
        return make_state(self.grid, self.pos + other.pos, self.vel + other.vel)

    def __sub__(self, other: "PairState") -> "PairState":
        _check_same_grid(self.grid, other.grid)
        return make_state(self.grid, self.pos - other.pos, self.vel - other.vel)

    def __mul__(self, c: float) -> "PairState":
        c = float(c)
        return make_state(self.grid, c * self.pos, c * self.vel)

    __rmul__ = __mul__


def _check_same_grid(a: ModeGrid, b: ModeGrid) -> None:
    if a.cutoff != b.cutoff or a.wave_speed != b.wave_speed:
        raise ValueError("states live on different grids")


def make_state(grid: ModeGrid, pos, vel) -> PairState:
    return PairState(pos=_frozen(pos, grid.cutoff), vel=_frozen(vel, grid.cutoff), grid=grid)


def zero_state(grid: ModeGrid) -> PairState:
    z = np.zeros(grid.cutoff)
    return make_state(grid, z, z)


def decay_state(grid: ModeGrid, pos_decay: float, vel_decay: float,
                normalize: bool = True) -> PairState:
    """Smooth deterministic state pos_n = n^-pos_decay, vel_n = n^-vel_decay.

    With normalize=True the pair is scaled to unit bold-H_0 norm.
    """
    n = np.arange(1, grid.cutoff + 1, dtype=np.float64)
    x = make_state(grid, n ** (-float(pos_decay)), n ** (-float(vel_decay)))
    if normalize:
        x = x * (1.0 / norm_pair(x, 0.0))
    return x


@dataclass(frozen=True)
class ModeSet:
    """Sorted set of 1-based mode indices."""

    indices: tuple

    def __init__(self, indices):
        idx = sorted({int(i) for i in indices})
        if idx and idx[0] < 1:
            raise ValueError(f"mode indices must be >= 1, got {idx[0]}")
        object.__setattr__(self, "indices", tuple(idx))

    @classmethod
    def first(cls, n: int) -> "ModeSet":
        return cls(range(1, int(n) + 1))

    def __len__(self) -> int:
        return len(self.indices)


def norm_scalar(coeffs, r: float, grid: ModeGrid) -> float:
    """H_r norm of a scalar coefficient vector: (sum mu_n^(2r) a_n^2)^(1/2)."""
    a = np.asarray(coeffs, dtype=np.float64)
    if a.shape != (grid.cutoff,):
        raise ValueError(f"expected {grid.cutoff} coefficients, got shape {a.shape}")
    r = float(r)
    if r == 0.0:
        return float(np.sqrt(np.sum(a * a)))
    return float(np.sqrt(np.sum(grid.eigenvalues ** (2.0 * r) * a * a)))


def norm_pair(x: PairState, r: float) -> float:
    """bold-H_r norm: (sum mu^r pos^2 + mu^(r-1) vel^2)^(1/2)."""
    mu = x.grid.eigenvalues
    r = float(r)
    p2 = x.pos * x.pos
    v2 = x.vel * x.vel
    if r == 0.0:
        s = np.sum(p2) + np.sum(v2 / mu)
    else:
        s = np.sum(mu ** r * p2) + np.sum(mu ** (r - 1.0) * v2)
    return float(np.sqrt(s))


def inner_h0(x: PairState, y: PairState) -> float:
    """bold-H_0 inner product <x,y> = <pos,pos'> + <vel,vel'>_{H_-1/2}."""
    _check_same_grid(x.grid, y.grid)
    mu = x.grid.eigenvalues
    return float(np.sum(x.pos * y.pos) + np.sum(x.vel * y.vel / mu))


def apply_lambda_power(x: PairState, s: float) -> PairState:
    """Lambda^s: scale mode n of both components by mu_n^(s/2)."""
    w = x.grid.eigenvalues ** (0.5 * float(s))
    return make_state(x.grid, w * x.pos, w * x.vel)


def project(x: PairState, modes: ModeSet) -> PairState:
    """Zero every mode outside `modes` (1-based indices, all <= grid.cutoff)."""
    if len(modes) and modes.indices[-1] > x.grid.cutoff:
        raise ValueError(
            f"mode index {modes.indices[-1]} outside grid cutoff {x.grid.cutoff}")
    mask = np.zeros(x.grid.cutoff)
    if len(modes):
        mask[np.array(modes.indices) - 1] = 1.0
    return make_state(x.grid, mask * x.pos, mask * x.vel)
