"""Exact sub-filter scale term evaluated from the analytical solution.

The term is the commutator between filtering and the advection product:

    tau_sfs = filter1(grad(G).grad(u)) - grad(G)-bar . filter1(grad(u))

with filter1 the indicator-weighted filter.  With the exact solution, both
pieces separate into cos(2*pi*t)/sin(2*pi*t) combinations of static fields, so
the whole term is reconstructed at any time from two amplitude fields.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .filtering import StaticFields
from .grid import ScalarField


@dataclass
class SfsFields:
    """Static pieces of tau_sfs.

    s1/s2: indicator filters of 2 pi cos(2 pi G) and 2 pi sin(2 pi G);
    v1/v2: grad(G)-bar dotted with the indicator-filtered exact-gradient
    amplitudes.  tau_sfs(t) = cos(2 pi t) (s1 - v1) + sin(2 pi t) (s2 - v2).
    """

    s1: ScalarField
    s2: ScalarField
    v1: ScalarField
    v2: ScalarField

    @property
    def amplitude_cos(self) -> np.ndarray:
        return self.s1.values - self.v1.values

    @property
    def amplitude_sin(self) -> np.ndarray:
        return self.s2.values - self.v2.values


def precompute_sfs_fields(static: StaticFields) -> SfsFields:
    """Assemble the sfs amplitude fields from the fused static suite.

    filter1(2 pi cos 2 pi G) is 2 pi times the filtered cos field already held
    by the suite, so only the dot products are new work.
    """
    if static.v_cos is None or static.v_sin is None:
        raise ValueError("static fields were precomputed without sfs integrands")
    two_pi = 2.0 * math.pi
    grid = static.alpha.grid
    return SfsFields(
        s1=ScalarField(grid, two_pi * static.u_cos.values),
        s2=ScalarField(grid, two_pi * static.u_sin.values),
        v1=static.grad_g_bar.dot(static.v_cos),
        v2=static.grad_g_bar.dot(static.v_sin),
    )


def tau_sfs(fields: SfsFields, t: float) -> ScalarField:
    """Reconstruct tau_sfs at time t from the static amplitudes."""
    c = math.cos(2.0 * math.pi * t)
    s = math.sin(2.0 * math.pi * t)
    return ScalarField(
        fields.s1.grid, c * fields.amplitude_cos + s * fields.amplitude_sin
    )


def sfs_scaling_study(
    delta_f_over_D_list,
    subgrid_ratio: int = 32,
    phases=(0.25, 0.5),
    delta_f_over_dx: float = 16.0,
    circle_center=(0.0, 0.0),
):
    """Norms of tau_sfs across filter widths, with fitted log-log slopes.

    Returns (norms, slopes): norms maps delta_f_over_D -> {phase: (L2, Linf)},
    slopes maps (norm_type, phase) -> fitted order of the norm vs delta_f.
    Requires at least 3 widths so a slope is meaningful.
    """
    from .analysis import field_norms, fit_order
    from .case import CaseConfig, build_case
    from .filtering import precompute_static_fields

    widths = sorted(delta_f_over_D_list, reverse=True)
    if len(widths) < 3:
        raise ValueError("scaling study needs at least 3 filter widths")

    norms: dict[float, dict[float, tuple[float, float]]] = {}
    for dfd in widths:
        cfg = CaseConfig(
            delta_f_over_D=dfd,
            delta_f_over_dx=delta_f_over_dx,
            delta_f_over_dxf=subgrid_ratio,
            circle_center=tuple(circle_center),
        )
        setup = build_case(cfg)
        static = precompute_static_fields(setup.grid, setup.geom, setup.kernel, setup.quad)
        fields = precompute_sfs_fields(static)
        norms[dfd] = {t: field_norms(tau_sfs(fields, t)) for t in phases}

    slopes: dict[tuple[str, float], float] = {}
    for phase in phases:
        for idx, name in ((0, "L2"), (1, "Linf")):
            slope, _ = fit_order(widths, [norms[d][phase][idx] for d in widths])
            slopes[(name, phase)] = slope
    return norms, slopes
