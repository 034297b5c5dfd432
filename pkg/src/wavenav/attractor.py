"""Continuous attractor layer: a self-sustained activity bump.

Rate-coded units on the same lattice interact through a Gaussian
weight profile in normalized coordinates. A direction vector delta
biases the weights so that each update translates the bump; with
delta = (0, 0) the bump is a fixed point.

Activity is renormalized to unit sum after every update. The raw
update rule has a per-step gain well above 1 at the shipped
parameters, so without renormalization activity overflows long
before the required 1000-step stability horizon.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import ndimage

from .manifold import Manifold


class BumpLostError(RuntimeError):
    """Total activity reached zero; the bump cannot be recovered."""


@dataclass
class AttractorParams:
    J: float = 12.0
    sigma: float = 0.03
    T: float = 0.05
    tau: float = 0.8
    warmup: int = 50
    seed_radius: float = 6.0
    jitter_seed: int | None = None
    jitter_mag: float = 1e-9

    def validate(self) -> "AttractorParams":
        for name in ("J", "sigma", "T", "tau"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if self.sigma <= 0:
            raise ValueError("sigma must be positive")
        if not 0.0 <= self.tau <= 1.0:
            raise ValueError("tau must be in [0, 1]")
        if self.warmup < 0:
            raise ValueError("warmup must be >= 0")
        return self


def attractor_weight(i: int, j: int, delta, p: AttractorParams,
                     nx: int, ny: int) -> float:
    """Pairwise weight: J * exp(-|((i-j)/N) + delta|^2 / sigma^2) - T."""
    ix, iy = i % nx, i // nx
    jx, jy = j % nx, j // nx
    dx = (ix - jx) / nx + delta[0]
    dy = (iy - jy) / ny + delta[1]
    return p.J * math.exp(-(dx * dx + dy * dy) / (p.sigma * p.sigma)) - p.T


class AttractorState:
    """Activity field A, current direction vector and cached weights."""

    def __init__(self, m: Manifold, p: AttractorParams):
        p.validate()
        self.manifold = m
        self.params = p
        self.A = np.zeros(m.n)
        self.delta = (0.0, 0.0)
        # pairwise normalized offsets, pre -> post
        self._dx = (m.xs[:, None] - m.xs[None, :]) / m.nx
        self._dy = (m.ys[:, None] - m.ys[None, :]) / m.ny
        self._W = None
        self._eps = None
        if p.jitter_seed is not None:
            rng = np.random.default_rng(p.jitter_seed)
            self._eps = 1.0 + p.jitter_mag * rng.uniform(-1.0, 1.0, (m.n, m.n))

    def set_delta(self, delta) -> None:
        delta = (float(delta[0]), float(delta[1]))
        if delta != self.delta:
            self.delta = delta
            self._W = None

    def weights(self) -> np.ndarray:
        """Dense weight matrix W[i, j] for the current delta."""
        if self._W is None:
            p = self.params
            ddx = self._dx + self.delta[0]
            ddy = self._dy + self.delta[1]
            W = p.J * np.exp(-(ddx * ddx + ddy * ddy) / (p.sigma * p.sigma)) - p.T
            if self._eps is not None:
                W = W * self._eps
            self._W = W
        return self._W


def init_bump(m: Manifold, start: int, p: AttractorParams) -> AttractorState:
    """Seed a Gaussian at `start` and relax it with delta = (0, 0).

    Fails if the relaxed activity does not form a single connected
    above-half-max component.
    """
    if m.is_blocked(start):
        raise ValueError(f"start node {start} is blocked")
    state = AttractorState(m, p)
    sx, sy = m.coords(start)
    d2 = (m.xs - sx) ** 2.0 + (m.ys - sy) ** 2.0
    A = np.exp(-math.log(2.0) * d2 / (p.seed_radius * p.seed_radius))
    A[m.blocked] = 0.0
    state.A = A / A.sum()
    for _ in range(p.warmup):
        step_attractor(state)
    fp = bump_footprint(state).reshape(m.ny, m.nx)
    _, count = ndimage.label(fp, structure=np.ones((3, 3), dtype=int))
    if count != 1:
        raise RuntimeError(
            f"bump warm-up did not converge to a single component (got {count})")
    return state


def step_attractor(state: AttractorState) -> AttractorState:
    """One attractor update: transfer, stabilize, clip, clamp, renormalize."""
    total = state.A.sum()
    if total <= 0.0:
        raise BumpLostError("total activity is zero")
    p = state.params
    B = state.A @ state.weights()
    A = (1.0 - p.tau) * B + p.tau * B / total
    np.maximum(A, 0.0, out=A)
    A[state.manifold.blocked] = 0.0
    total = A.sum()
    if total <= 0.0:
        raise BumpLostError("activity vanished after update")
    state.A = A / total
    return state


def bump_center(state: AttractorState) -> int:
    """Node with maximal activity; ties break to the lowest index."""
    if state.A.sum() <= 0.0:
        raise BumpLostError("total activity is zero")
    return int(np.argmax(state.A))


def bump_footprint(state: AttractorState) -> np.ndarray:
    """Boolean mask of nodes with A >= half the maximum."""
    if state.A.sum() <= 0.0:
        raise BumpLostError("total activity is zero")
    return state.A >= 0.5 * state.A.max()


def footprint_diameter(state: AttractorState) -> int:
    """Largest axis extent of the half-max footprint, in nodes."""
    fp = bump_footprint(state)
    m = state.manifold
    xs, ys = m.xs[fp], m.ys[fp]
    return int(max(xs.max() - xs.min(), ys.max() - ys.min()) + 1)


def bump_width(state: AttractorState) -> int:
    """Largest axis extent of the nonzero support, in nodes."""
    sup = state.A > 0.0
    m = state.manifold
    xs, ys = m.xs[sup], m.ys[sup]
    return int(max(xs.max() - xs.min(), ys.max() - ys.min()) + 1)
