"""Compactly supported radial filter kernel.

The profile is Wendland C2, (1 - s)^4 (1 + 4 s) with s = 2 r / delta_f, which is
compact on a disk of diameter delta_f, twice continuously differentiable, and
non-negative.  The normalization makes the 2D plane integral exactly 1:

    integral = C * 2*pi * (delta_f/2)^2 * int_0^1 (1-s)^4 (1+4s) s ds
             = C * pi * delta_f^2 / 28

so C = (28/pi) / delta_f^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .grid import Grid

#: Dimensionless normalization of the Wendland C2 profile in 2D
#: (verified against adaptive radial quadrature in the test suite).
SHAPE_CONSTANT_2D = 28.0 / math.pi


def kernel_normalization(delta_f: float) -> float:
    """Constant C making the 2D integral of the kernel equal to 1."""
    if delta_f <= 0:
        raise ValueError("filter width must be positive")
    return SHAPE_CONSTANT_2D / delta_f**2


@dataclass(frozen=True)
class FilterKernel:
    """Radial filter of support diameter delta_f with unit plane integral."""

    delta_f: float

    def __post_init__(self):
        if self.delta_f <= 0:
            raise ValueError("filter width must be positive")

    @property
    def normalization(self) -> float:
        return kernel_normalization(self.delta_f)

    @property
    def support_radius(self) -> float:
        return self.delta_f / 2.0

    @staticmethod
    def profile(s):
        """Unnormalized radial shape on s = 2 r / delta_f, zero for s >= 1."""
        s = np.asarray(s, dtype=float)
        inside = s < 1.0
        one_minus = np.where(inside, 1.0 - s, 0.0)
        return one_minus**4 * (1.0 + 4.0 * s)

    def eval_radius(self, r):
        """Kernel value at radial distance r."""
        s = 2.0 * np.asarray(r, dtype=float) / self.delta_f
        return self.normalization * self.profile(s)

    def __call__(self, dx, dy):
        """Kernel value at separation (dx, dy)."""
        return self.eval_radius(np.hypot(dx, dy))


def support_cells(center: tuple[float, float], kernel: FilterKernel, grid: Grid):
    """Minimal index box (i0, i1, j0, j1), inclusive, of grid nodes within the
    kernel support of ``center``; clipped to the grid."""
    cx, cy = center
    rad = kernel.support_radius
    i0 = max(0, math.ceil((cx - rad - grid.x0) / grid.dx - 1e-12))
    i1 = min(grid.nx - 1, math.floor((cx + rad - grid.x0) / grid.dx + 1e-12))
    j0 = max(0, math.ceil((cy - rad - grid.y0) / grid.dy - 1e-12))
    j1 = min(grid.ny - 1, math.floor((cy + rad - grid.y0) / grid.dy + 1e-12))
    return i0, i1, j0, j1
