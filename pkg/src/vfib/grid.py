"""Uniform node-centered Cartesian grids and the field containers built on them."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class DomainSpec:
    """Rectangular computational domain centered at the origin."""

    length_x: float = 2.0
    length_y: float = 2.0

    def __post_init__(self):
        if self.length_x <= 0 or self.length_y <= 0:
            raise ValueError("domain side lengths must be positive")


@dataclass(frozen=True)
class Grid:
    """Uniform node-centered grid: nodes at origin + i*dx, i = 0..nx-1."""

    nx: int
    ny: int
    dx: float
    dy: float
    x0: float
    y0: float

    def __post_init__(self):
        if self.nx < 2 or self.ny < 2:
            raise ValueError("grid needs at least 2 nodes per direction")
        if self.dx <= 0 or self.dy <= 0:
            raise ValueError("grid spacing must be positive")

    @classmethod
    def for_domain(cls, domain: DomainSpec, n_cells_x: int, n_cells_y: int | None = None) -> "Grid":
        """Grid whose nodes span the domain exactly, n_cells per side."""
        if n_cells_y is None:
            n_cells_y = n_cells_x
        return cls(
            nx=n_cells_x + 1,
            ny=n_cells_y + 1,
            dx=domain.length_x / n_cells_x,
            dy=domain.length_y / n_cells_y,
            x0=-domain.length_x / 2.0,
            y0=-domain.length_y / 2.0,
        )

    @property
    def x(self) -> np.ndarray:
        return self.x0 + self.dx * np.arange(self.nx)

    @property
    def y(self) -> np.ndarray:
        return self.y0 + self.dy * np.arange(self.ny)

    def meshgrid(self) -> tuple[np.ndarray, np.ndarray]:
        """(X, Y) node coordinate arrays of shape (ny, nx)."""
        return np.meshgrid(self.x, self.y)


@dataclass
class ScalarField:
    """Real samples at grid nodes; values indexed [j, i] = (y, x)."""

    grid: Grid
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        if self.values.shape != (self.grid.ny, self.grid.nx):
            raise ValueError(
                f"values shape {self.values.shape} does not match grid "
                f"({self.grid.ny}, {self.grid.nx})"
            )

    @classmethod
    def zeros(cls, grid: Grid) -> "ScalarField":
        return cls(grid, np.zeros((grid.ny, grid.nx)))

    @classmethod
    def from_function(cls, grid: Grid, func) -> "ScalarField":
        X, Y = grid.meshgrid()
        return cls(grid, np.asarray(func(X, Y), dtype=float))

    def check_finite(self) -> None:
        if not np.all(np.isfinite(self.values)):
            raise FloatingPointError("field contains NaN or Inf")

    def copy(self) -> "ScalarField":
        return ScalarField(self.grid, self.values.copy())


@dataclass
class VectorField:
    """Two scalar components on the same grid."""

    x: ScalarField
    y: ScalarField

    def __post_init__(self):
        if self.x.grid != self.y.grid:
            raise ValueError("vector components must share a grid")

    @property
    def grid(self) -> Grid:
        return self.x.grid

    def magnitude(self) -> ScalarField:
        return ScalarField(self.grid, np.hypot(self.x.values, self.y.values))

    def dot(self, other: "VectorField") -> ScalarField:
        if self.grid != other.grid:
            raise ValueError("grid mismatch in dot product")
        return ScalarField(
            self.grid, self.x.values * other.x.values + self.y.values * other.y.values
        )


def gradient(f: ScalarField) -> VectorField:
    """Second-order central differences, one-sided second-order at the edges."""
    gy, gx = np.gradient(f.values, f.grid.dy, f.grid.dx, edge_order=2)
    return VectorField(ScalarField(f.grid, gx), ScalarField(f.grid, gy))
