"""Circular-interface test case: level set, region indicator, and the exact radiating-pulse solution.

The advecting field is the unit gradient of the signed distance to the circle,
so the exact solution u = sin(2*pi*(G - t)) satisfies du/dt + grad(G).grad(u) = 0
identically, radiates outward with period 1, and equals -sin(2*pi*t) on the
interface.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .grid import DomainSpec

#: Default circle diameter.
DEFAULT_DIAMETER = 0.4


@dataclass(frozen=True)
class CircleGeometry:
    """Embedded circle: center (x_c, y_c) and radius."""

    x_c: float = 0.0
    y_c: float = 0.0
    radius: float = DEFAULT_DIAMETER / 2.0

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError("circle radius must be positive")

    @property
    def diameter(self) -> float:
        return 2.0 * self.radius

    def validate_inside(self, domain: DomainSpec, halo: float = 0.0) -> None:
        """Require the circle plus a halo to lie strictly inside the domain."""
        reach = self.radius + halo
        if (
            self.x_c - reach <= -domain.length_x / 2
            or self.x_c + reach >= domain.length_x / 2
            or self.y_c - reach <= -domain.length_y / 2
            or self.y_c + reach >= domain.length_y / 2
        ):
            raise ValueError(
                f"circle at ({self.x_c}, {self.y_c}) with radius {self.radius} "
                f"plus halo {halo} does not fit inside the domain"
            )


def level_set(x, y, geom: CircleGeometry):
    """Signed distance to the circle: negative inside, zero on the interface."""
    return np.hypot(np.asarray(x) - geom.x_c, np.asarray(y) - geom.y_c) - geom.radius


def grad_level_set(x, y, geom: CircleGeometry):
    """Unit radial gradient of the level set; zero at the (singular) center."""
    rx = np.asarray(x, dtype=float) - geom.x_c
    ry = np.asarray(y, dtype=float) - geom.y_c
    d = np.hypot(rx, ry)
    with np.errstate(divide="ignore", invalid="ignore"):
        inv = np.where(d > 0.0, 1.0 / np.where(d > 0.0, d, 1.0), 0.0)
    return rx * inv, ry * inv


def indicator(x, y, geom: CircleGeometry):
    """Region-1 indicator: 1 where G > 0, 0 inside and on the interface."""
    return (level_set(x, y, geom) > 0.0).astype(float)


def exact_solution(x, y, t: float, geom: CircleGeometry):
    """Exact pulse u = sin(2*pi*(G - t))."""
    return np.sin(2.0 * math.pi * (level_set(x, y, geom) - t))


def exact_gradient(x, y, t: float, geom: CircleGeometry):
    """grad(u) = 2*pi*cos(2*pi*(G - t)) * grad(G)."""
    amp = 2.0 * math.pi * np.cos(2.0 * math.pi * (level_set(x, y, geom) - t))
    gx, gy = grad_level_set(x, y, geom)
    return amp * gx, amp * gy


def exact_advection(x, y, t: float, geom: CircleGeometry):
    """grad(G).grad(u) = 2*pi*cos(2*pi*(G - t)), using |grad G| = 1."""
    return 2.0 * math.pi * np.cos(2.0 * math.pi * (level_set(x, y, geom) - t))


def boundary_signal(t):
    """Prescribed interface value u_I(t) = -sin(2*pi*t)."""
    return -np.sin(2.0 * math.pi * np.asarray(t, dtype=float))
