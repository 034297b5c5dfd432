"""2D lattice manifold with rectangular obstacles.

Nodes are indexed row-major: index = y * nx + x. All distances are
Euclidean in lattice units (grid step is 1.0 unless overridden).
"""
from __future__ import annotations

import math

import numpy as np


class Manifold:
    """An nx-by-ny lattice with a boolean blocked mask per node."""

    def __init__(self, nx: int, ny: int, blocked: np.ndarray, grid_step: float = 1.0):
        if nx < 3 or ny < 3:
            raise ValueError("grid must be at least 3x3")
        blocked = np.asarray(blocked, dtype=bool).reshape(nx * ny)
        if blocked.all():
            raise ValueError("every node is blocked")
        self.nx = int(nx)
        self.ny = int(ny)
        self.grid_step = float(grid_step)
        self.blocked = blocked
        idx = np.arange(nx * ny)
        self.xs = idx % nx
        self.ys = idx // nx

    @property
    def n(self) -> int:
        return self.nx * self.ny

    def index(self, x: int, y: int) -> int:
        if not (0 <= x < self.nx and 0 <= y < self.ny):
            raise ValueError(f"({x}, {y}) outside {self.nx}x{self.ny} lattice")
        return y * self.nx + x

    def coords(self, node: int) -> tuple[int, int]:
        if not (0 <= node < self.n):
            raise ValueError(f"node {node} out of range")
        return node % self.nx, node // self.nx

    def is_blocked(self, node: int) -> bool:
        return bool(self.blocked[node])

    def unblocked_count(self) -> int:
        return int((~self.blocked).sum())


def build_manifold(nx: int, ny: int, obstacles=(), grid_step: float = 1.0) -> Manifold:
    """Build a lattice, blocking every node covered by any rectangle.

    Rectangles are (x0, y0, x1, y1) with inclusive integer bounds.
    """
    blocked = np.zeros((ny, nx), dtype=bool)
    for rect in obstacles:
        x0, y0, x1, y1 = (int(v) for v in rect)
        if x1 < x0 or y1 < y0:
            raise ValueError(f"malformed rectangle {rect}")
        if x1 < 0 or y1 < 0 or x0 >= nx or y0 >= ny:
            raise ValueError(f"rectangle {rect} lies outside the lattice")
        blocked[max(y0, 0):y1 + 1, max(x0, 0):x1 + 1] = True
    return Manifold(nx, ny, blocked.reshape(-1), grid_step)


def euclidean_distance(m: Manifold, a: int, b: int) -> float:
    ax, ay = m.coords(a)
    bx, by = m.coords(b)
    return m.grid_step * math.hypot(ax - bx, ay - by)


def neighbors_within(m: Manifold, node: int, radius: float):
    """Unblocked nodes u != node with 0 < distance <= radius, ascending index."""
    if m.is_blocked(node):
        raise ValueError(f"node {node} is blocked")
    x, y = m.coords(node)
    r = int(math.ceil(radius / m.grid_step))
    out = []
    for dy in range(-r, r + 1):
        ny_ = y + dy
        if not (0 <= ny_ < m.ny):
            continue
        for dx in range(-r, r + 1):
            if dx == 0 and dy == 0:
                continue
            nx_ = x + dx
            if not (0 <= nx_ < m.nx):
                continue
            d = m.grid_step * math.hypot(dx, dy)
            if d <= radius + 1e-12:
                u = ny_ * m.nx + nx_
                if not m.blocked[u]:
                    out.append((u, d))
    out.sort(key=lambda p: p[0])
    return out
