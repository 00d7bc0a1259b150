"""Error norms, term-magnitude series, line cuts, and order-of-accuracy fits."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .filtering import StaticFields
from .grid import ScalarField
from .sfs import SfsFields, precompute_sfs_fields, tau_sfs


def filtered_reference(static: StaticFields, t: float) -> ScalarField:
    """Filtered exact solution (alpha u-bar)_e at time t."""
    return static.reference(t)


def error_norms(q: ScalarField, reference: ScalarField) -> tuple[float, float]:
    """(L2, Linf) of q - reference over all grid nodes.

    L2 is area-weighted: sqrt(sum e^2 dx dy).
    """
    if q.grid != reference.grid:
        raise ValueError("error norms require matching grids")
    e = q.values - reference.values
    l2 = math.sqrt(float(np.sum(e * e)) * q.grid.dx * q.grid.dy)
    linf = float(np.max(np.abs(e)))
    return l2, linf


def field_norms(f: ScalarField) -> tuple[float, float]:
    """(L2, Linf) of a field itself."""
    return error_norms(f, ScalarField.zeros(f.grid))


@dataclass
class TermSeries:
    """Linf magnitudes of the governing-equation terms over time."""

    times: list[float]
    forcing: list[float] = field(default_factory=list)
    advection: list[float] = field(default_factory=list)
    sfs: list[float] = field(default_factory=list)


def term_series(static: StaticFields, f_hat: ScalarField, times) -> TermSeries:
    """Analytic Linf norms of forcing, reference advection, and tau_sfs.

    The advection term applied to the filtered reference splits as
    grad(G)-bar . grad(alpha u-bar)_e = cos v1 + sin v2 + u_I(t) f_hat,
    using the filtered-gradient identity for the surface contribution.
    """
    sfs_fields = precompute_sfs_fields(static)
    series = TermSeries(times=list(times))
    for t in series.times:
        c = math.cos(2.0 * math.pi * t)
        s = math.sin(2.0 * math.pi * t)
        u_i = -s
        f_i = u_i * f_hat.values
        adv = c * sfs_fields.v1.values + s * sfs_fields.v2.values + u_i * f_hat.values
        tau = c * sfs_fields.amplitude_cos + s * sfs_fields.amplitude_sin
        series.forcing.append(float(np.max(np.abs(f_i))))
        series.advection.append(float(np.max(np.abs(adv))))
        series.sfs.append(float(np.max(np.abs(tau))))
    return series


def fit_order(knob_values, errors) -> tuple[float, float]:
    """Least-squares slope of log(error) vs log(knob), plus fit RMS residual."""
    x = np.asarray(knob_values, dtype=float)
    y = np.asarray(errors, dtype=float)
    if x.size < 3 or x.size != y.size:
        raise ValueError("order fit needs at least 3 (knob, error) pairs")
    if np.any(x <= 0) or np.any(y <= 0):
        raise ValueError("order fit requires positive knobs and errors")
    lx = np.log(x)
    ly = np.log(y)
    slope, intercept = np.polyfit(lx, ly, 1)
    resid = ly - (slope * lx + intercept)
    return float(slope), float(math.sqrt(np.mean(resid**2)))


def pairwise_orders(knob_values, errors) -> list[float]:
    """Observed order between adjacent points; diagnostic companion to fit_order."""
    x = np.asarray(knob_values, dtype=float)
    y = np.asarray(errors, dtype=float)
    return [
        float(math.log(y[i + 1] / y[i]) / math.log(x[i + 1] / x[i]))
        for i in range(x.size - 1)
    ]


def line_cut(f: ScalarField, p0, p1, n_samples: int):
    """Bilinear samples along the segment p0 -> p1.

    Returns rows (s, x, y, value) with s the arc-length coordinate.
    """
    g = f.grid
    x0, y0 = p0
    x1, y1 = p1
    for x, y in ((x0, y0), (x1, y1)):
        if not (g.x[0] - 1e-12 <= x <= g.x[-1] + 1e-12
                and g.y[0] - 1e-12 <= y <= g.y[-1] + 1e-12):
            raise ValueError(f"cut endpoint ({x}, {y}) lies outside the grid")
    ss = np.linspace(0.0, 1.0, n_samples)
    xs = x0 + ss * (x1 - x0)
    ys = y0 + ss * (y1 - y0)
    length = math.hypot(x1 - x0, y1 - y0)

    fi = np.clip((xs - g.x0) / g.dx, 0.0, g.nx - 1.0)
    fj = np.clip((ys - g.y0) / g.dy, 0.0, g.ny - 1.0)
    i0 = np.minimum(fi.astype(int), g.nx - 2)
    j0 = np.minimum(fj.astype(int), g.ny - 2)
    tx = fi - i0
    ty = fj - j0
    v = f.values
    vals = (
        v[j0, i0] * (1 - tx) * (1 - ty)
        + v[j0, i0 + 1] * tx * (1 - ty)
        + v[j0 + 1, i0] * (1 - tx) * ty
        + v[j0 + 1, i0 + 1] * tx * ty
    )
    return np.column_stack([ss * length, xs, ys, vals])


def sfs_scaling_table(results: dict[float, dict[float, tuple[float, float]]]):
    """Flatten {delta_f_over_D: {phase: (l2, linf)}} into CSV-ready rows.

    Rows are (delta_f_over_D, norm_type, phase, value); slope rows appended by
    the caller after fitting.
    """
    rows = []
    for dfd in sorted(results, reverse=True):
        for phase in sorted(results[dfd]):
            l2, linf = results[dfd][phase]
            rows.append((dfd, "L2", phase, l2))
            rows.append((dfd, "Linf", phase, linf))
    return rows
