"""Lagrangian discretization of the circle and marker-based surface integrals.

The interface enters the filtered equation only through the surface integral
of n * g, which the markers evaluate with the midpoint rule.  Because the
prescribed interface value is spatially uniform, the forcing term separates
into a static shape field times -sin(2*pi*t).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import CircleGeometry, boundary_signal
from .grid import Grid, ScalarField, VectorField
from .kernel import FilterKernel, support_cells

#: Fewest markers accepted for a closed circle.
MIN_MARKERS = 8


@dataclass(frozen=True)
class SurfaceMesh:
    """Equal-arc circle markers: centroids, outward normals, element lengths."""

    x: np.ndarray
    y: np.ndarray
    normal_x: np.ndarray
    normal_y: np.ndarray
    area: np.ndarray

    def __len__(self) -> int:
        return self.x.size

    @classmethod
    def empty(cls) -> "SurfaceMesh":
        z = np.empty(0)
        return cls(z, z, z, z, z)


def build_circle_mesh(geom: CircleGeometry, target_spacing: float) -> SurfaceMesh:
    """ceil(2 pi r / spacing) equal arc elements with midpoint centroids."""
    if target_spacing <= 0:
        raise ValueError("marker spacing must be positive")
    circumference = 2.0 * math.pi * geom.radius
    n = math.ceil(circumference / target_spacing)
    if n < MIN_MARKERS:
        raise ValueError(
            f"only {n} markers at spacing {target_spacing}; the circle would be degenerate"
        )
    theta = 2.0 * math.pi * (np.arange(n) + 0.5) / n
    nx = np.cos(theta)
    ny = np.sin(theta)
    return SurfaceMesh(
        x=geom.x_c + geom.radius * nx,
        y=geom.y_c + geom.radius * ny,
        normal_x=nx,
        normal_y=ny,
        area=np.full(n, circumference / n),
    )


def scatter_normals(mesh: SurfaceMesh, grid: Grid, kernel: FilterKernel) -> VectorField:
    """sum_m n_m g(x - x_m) A_m at every node; approximates grad(alpha).

    Marker-centric: each marker deposits onto its kernel-support node box.
    Deposits are serialized, so the result is deterministic.
    """
    fx = np.zeros((grid.ny, grid.nx))
    fy = np.zeros((grid.ny, grid.nx))
    xs = grid.x
    ys = grid.y
    for m in range(len(mesh)):
        i0, i1, j0, j1 = support_cells((mesh.x[m], mesh.y[m]), kernel, grid)
        if i1 < i0 or j1 < j0:
            continue
        gx = xs[i0 : i1 + 1] - mesh.x[m]
        gy = ys[j0 : j1 + 1] - mesh.y[m]
        w = kernel(gx[None, :], gy[:, None]) * mesh.area[m]
        fx[j0 : j1 + 1, i0 : i1 + 1] += w * mesh.normal_x[m]
        fy[j0 : j1 + 1, i0 : i1 + 1] += w * mesh.normal_y[m]
    return VectorField(ScalarField(grid, fx), ScalarField(grid, fy))


def forcing_shape(
    mesh: SurfaceMesh, grid: Grid, kernel: FilterKernel, grad_g_bar: VectorField
) -> ScalarField:
    """Static forcing shape: grad(G)-bar dotted with the scattered normals.

    The full forcing is boundary_signal(t) times this field.
    """
    return grad_g_bar.dot(scatter_normals(mesh, grid, kernel))


def forcing_field(
    mesh: SurfaceMesh,
    grid: Grid,
    kernel: FilterKernel,
    grad_g_bar: VectorField,
    t: float,
) -> ScalarField:
    """Interface forcing at time t."""
    shape = forcing_shape(mesh, grid, kernel, grad_g_bar)
    return ScalarField(grid, float(boundary_signal(t)) * shape.values)


def write_mesh_csv(mesh: SurfaceMesh, path) -> None:
    """Marker table as CSV (x_m, y_m, n_x, n_y, A_m)."""
    rows = np.column_stack([mesh.x, mesh.y, mesh.normal_x, mesh.normal_y, mesh.area])
    header = "x_m,y_m,n_x,n_y,A_m"
    np.savetxt(path, rows, delimiter=",", header=header, comments="", fmt="%.17g")
