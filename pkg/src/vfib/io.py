"""Field and table serialization: flat CSV, legacy VTK, and run manifests.

All numeric output uses 17 significant digits so regression baselines are
bit-stable.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .grid import ScalarField

FMT = "%.17g"


def write_field_csv(f: ScalarField, path) -> None:
    """Flat (x, y, value) rows, row-major over the grid."""
    X, Y = f.grid.meshgrid()
    rows = np.column_stack([X.ravel(), Y.ravel(), f.values.ravel()])
    np.savetxt(path, rows, delimiter=",", header="x,y,value", comments="", fmt=FMT)


def write_field_vtk(f: ScalarField, path, name: str = "field") -> None:
    """Legacy structured-points ASCII VTK for visual inspection."""
    g = f.grid
    with open(path, "w") as fh:
        fh.write("# vtk DataFile Version 3.0\n")
        fh.write(f"{name}\n")
        fh.write("ASCII\n")
        fh.write("DATASET STRUCTURED_POINTS\n")
        fh.write(f"DIMENSIONS {g.nx} {g.ny} 1\n")
        fh.write(f"ORIGIN {g.x0:.17g} {g.y0:.17g} 0\n")
        fh.write(f"SPACING {g.dx:.17g} {g.dy:.17g} 1\n")
        fh.write(f"POINT_DATA {g.nx * g.ny}\n")
        fh.write(f"SCALARS {name} double 1\n")
        fh.write("LOOKUP_TABLE default\n")
        for row in f.values:
            fh.write(" ".join(f"{v:.17g}" for v in row))
            fh.write("\n")


def write_rows_csv(path, header: str, rows) -> None:
    """Generic CSV writer for study tables; one-line header."""
    with open(path, "w") as fh:
        fh.write(header + "\n")
        for row in rows:
            fh.write(
                ",".join(
                    f"{v:.17g}" if isinstance(v, float) else str(v) for v in row
                )
                + "\n"
            )


def write_manifest(path, payload: dict) -> None:
    """JSON manifest echoing the full configuration of a run."""
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def ensure_dir(path) -> Path:
    p = Path(path)
    p.mkdir(parents=True, exist_ok=True)
    return p


def read_field_csv(path) -> ScalarField:
    """Rebuild a ScalarField from a flat (x, y, value) CSV written by this module."""
    from .grid import Grid

    data = np.loadtxt(path, delimiter=",", skiprows=1)
    xs = np.unique(data[:, 0])
    ys = np.unique(data[:, 1])
    nx, ny = xs.size, ys.size
    if nx * ny != data.shape[0]:
        raise ValueError(f"{path}: rows do not form a full tensor grid")
    grid = Grid(
        nx=nx, ny=ny,
        dx=float(xs[1] - xs[0]), dy=float(ys[1] - ys[0]),
        x0=float(xs[0]), y0=float(ys[0]),
    )
    return ScalarField(grid, data[:, 2].reshape(ny, nx))
