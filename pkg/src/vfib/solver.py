"""A-posteriori time integration of the volume-filtered equation.

The conserved unknown is the filtered solution (alpha u-bar).  The right-hand
side combines upwind-biased advection along grad(G)-bar, the marker forcing
(static shape times the interface signal), and optionally the exact sub-filter
scale term.  Time stepping is three-stage strong-stability-preserving RK3 with
the sources evaluated at t^n, t^{n+1} and t^{n+1/2} in stages 1-3.

The advection stencil is the six-point fifth-order upwind-biased difference
selected per component by the sign of grad(G)-bar; the extra order keeps the
truncation error in the O(1/delta_f) interface band far below the filtering
error so error norms converge cleanly with the filter width.  Third-order
("upwind3") and pure second-order one-sided ("upwind2") variants remain
selectable; the latter is linearly unstable with RK3 at CFL 0.5.

When numba is importable the default-scheme right-hand side runs through a
compiled single-pass kernel; otherwise a vectorized numpy path is used.  Both
apply identical stencils.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .case import CaseConfig, CaseSetup, build_case
from .filtering import StaticFields, precompute_static_fields
from .geometry import boundary_signal
from .grid import ScalarField, VectorField
from .sfs import SfsFields, precompute_sfs_fields
from .surface import forcing_shape


class InstabilityError(RuntimeError):
    """Raised when the solution leaves the finite range mid-run."""


@dataclass
class SolverState:
    """Conserved field, physical time, and step counter."""

    q: ScalarField
    t: float = 0.0
    step: int = 0


@dataclass
class StaticOperators:
    """Everything time-independent the right-hand side needs."""

    grad_g_bar: VectorField
    f_hat: ScalarField
    alpha: ScalarField
    sfs: SfsFields | None = None
    scheme: str = "upwind5"


def _d_minus(q: np.ndarray, h: float) -> np.ndarray:
    """Upwind-biased derivative for positive advection speed, along axis 1."""
    d = np.empty_like(q)
    d[:, 2:-1] = (q[:, :-3] - 6.0 * q[:, 1:-2] + 3.0 * q[:, 2:-1] + 2.0 * q[:, 3:]) / (6.0 * h)
    d[:, 0] = (-3.0 * q[:, 0] + 4.0 * q[:, 1] - q[:, 2]) / (2.0 * h)
    d[:, 1] = (q[:, 2] - q[:, 0]) / (2.0 * h)
    d[:, -1] = (3.0 * q[:, -1] - 4.0 * q[:, -2] + q[:, -3]) / (2.0 * h)
    return d


def _d_plus(q: np.ndarray, h: float) -> np.ndarray:
    """Upwind-biased derivative for negative advection speed, along axis 1."""
    d = np.empty_like(q)
    d[:, 1:-2] = (-q[:, 3:] + 6.0 * q[:, 2:-1] - 3.0 * q[:, 1:-2] - 2.0 * q[:, :-3]) / (6.0 * h)
    d[:, 0] = (-3.0 * q[:, 0] + 4.0 * q[:, 1] - q[:, 2]) / (2.0 * h)
    d[:, -2] = (q[:, -1] - q[:, -3]) / (2.0 * h)
    d[:, -1] = (3.0 * q[:, -1] - 4.0 * q[:, -2] + q[:, -3]) / (2.0 * h)
    return d


def _d_minus2(q: np.ndarray, h: float) -> np.ndarray:
    """Pure three-point second-order upwind for positive speed, along axis 1."""
    d = np.empty_like(q)
    d[:, 2:] = (3.0 * q[:, 2:] - 4.0 * q[:, 1:-1] + q[:, :-2]) / (2.0 * h)
    d[:, 0] = (-3.0 * q[:, 0] + 4.0 * q[:, 1] - q[:, 2]) / (2.0 * h)
    d[:, 1] = (q[:, 2] - q[:, 0]) / (2.0 * h)
    return d


def _d_plus2(q: np.ndarray, h: float) -> np.ndarray:
    """Pure three-point second-order upwind for negative speed, along axis 1."""
    d = np.empty_like(q)
    d[:, :-2] = (-3.0 * q[:, :-2] + 4.0 * q[:, 1:-1] - q[:, 2:]) / (2.0 * h)
    d[:, -2] = (q[:, -1] - q[:, -3]) / (2.0 * h)
    d[:, -1] = (3.0 * q[:, -1] - 4.0 * q[:, -2] + q[:, -3]) / (2.0 * h)
    return d


def _d_minus5(q: np.ndarray, h: float) -> np.ndarray:
    """Fifth-order upwind-biased derivative for positive speed, along axis 1."""
    d = np.empty_like(q)
    d[:, 3:-2] = (
        -2.0 * q[:, :-5]
        + 15.0 * q[:, 1:-4]
        - 60.0 * q[:, 2:-3]
        + 20.0 * q[:, 3:-2]
        + 30.0 * q[:, 4:-1]
        - 3.0 * q[:, 5:]
    ) / (60.0 * h)
    # near-edge fallbacks: widest available centered/biased stencil
    d[:, 0] = (-3.0 * q[:, 0] + 4.0 * q[:, 1] - q[:, 2]) / (2.0 * h)
    d[:, 1] = (q[:, 2] - q[:, 0]) / (2.0 * h)
    d[:, 2] = (q[:, 0] - 8.0 * q[:, 1] + 8.0 * q[:, 3] - q[:, 4]) / (12.0 * h)
    d[:, -2] = (q[:, -1] - q[:, -3]) / (2.0 * h)
    d[:, -1] = (3.0 * q[:, -1] - 4.0 * q[:, -2] + q[:, -3]) / (2.0 * h)
    return d


def _d_plus5(q: np.ndarray, h: float) -> np.ndarray:
    """Fifth-order upwind-biased derivative for negative speed, along axis 1."""
    return -_d_minus5(q[:, ::-1], h)[:, ::-1]


_STENCILS = {
    "upwind5": (_d_minus5, _d_plus5),
    "upwind3": (_d_minus, _d_plus),
    "upwind2": (_d_minus2, _d_plus2),
}

try:  # compiled hot loop; the numpy path below is the reference implementation
    import numba as _numba
except ImportError:  # pragma: no cover - depends on the environment
    _numba = None

if _numba is not None:

    @_numba.njit(cache=True)
    def _advect_upwind5_jit(q, ax, ay, dx, dy, out):  # pragma: no cover - compiled
        ny, nx = q.shape
        for j in range(ny):
            for i in range(nx):
                a = ax[j, i]
                if a >= 0.0:
                    if 3 <= i <= nx - 3:
                        qx = (-2.0 * q[j, i - 3] + 15.0 * q[j, i - 2]
                              - 60.0 * q[j, i - 1] + 20.0 * q[j, i]
                              + 30.0 * q[j, i + 1] - 3.0 * q[j, i + 2]) / (60.0 * dx)
                    elif i == 0:
                        qx = (-3.0 * q[j, 0] + 4.0 * q[j, 1] - q[j, 2]) / (2.0 * dx)
                    elif i == 1 or i == nx - 2:
                        qx = (q[j, i + 1] - q[j, i - 1]) / (2.0 * dx)
                    elif i == 2:
                        qx = (q[j, 0] - 8.0 * q[j, 1] + 8.0 * q[j, 3]
                              - q[j, 4]) / (12.0 * dx)
                    else:
                        qx = (3.0 * q[j, nx - 1] - 4.0 * q[j, nx - 2]
                              + q[j, nx - 3]) / (2.0 * dx)
                else:
                    if 2 <= i <= nx - 4:
                        qx = (2.0 * q[j, i + 3] - 15.0 * q[j, i + 2]
                              + 60.0 * q[j, i + 1] - 20.0 * q[j, i]
                              - 30.0 * q[j, i - 1] + 3.0 * q[j, i - 2]) / (60.0 * dx)
                    elif i == 0:
                        qx = (-3.0 * q[j, 0] + 4.0 * q[j, 1] - q[j, 2]) / (2.0 * dx)
                    elif i == 1 or i == nx - 2:
                        qx = (q[j, i + 1] - q[j, i - 1]) / (2.0 * dx)
                    elif i == nx - 3:
                        qx = (q[j, nx - 5] - 8.0 * q[j, nx - 4] + 8.0 * q[j, nx - 2]
                              - q[j, nx - 1]) / (12.0 * dx)
                    else:
                        qx = (3.0 * q[j, nx - 1] - 4.0 * q[j, nx - 2]
                              + q[j, nx - 3]) / (2.0 * dx)
                b = ay[j, i]
                if b >= 0.0:
                    if 3 <= j <= ny - 3:
                        qy = (-2.0 * q[j - 3, i] + 15.0 * q[j - 2, i]
                              - 60.0 * q[j - 1, i] + 20.0 * q[j, i]
                              + 30.0 * q[j + 1, i] - 3.0 * q[j + 2, i]) / (60.0 * dy)
                    elif j == 0:
                        qy = (-3.0 * q[0, i] + 4.0 * q[1, i] - q[2, i]) / (2.0 * dy)
                    elif j == 1 or j == ny - 2:
                        qy = (q[j + 1, i] - q[j - 1, i]) / (2.0 * dy)
                    elif j == 2:
                        qy = (q[0, i] - 8.0 * q[1, i] + 8.0 * q[3, i]
                              - q[4, i]) / (12.0 * dy)
                    else:
                        qy = (3.0 * q[ny - 1, i] - 4.0 * q[ny - 2, i]
                              + q[ny - 3, i]) / (2.0 * dy)
                else:
                    if 2 <= j <= ny - 4:
                        qy = (2.0 * q[j + 3, i] - 15.0 * q[j + 2, i]
                              + 60.0 * q[j + 1, i] - 20.0 * q[j, i]
                              - 30.0 * q[j - 1, i] + 3.0 * q[j - 2, i]) / (60.0 * dy)
                    elif j == 0:
                        qy = (-3.0 * q[0, i] + 4.0 * q[1, i] - q[2, i]) / (2.0 * dy)
                    elif j == 1 or j == ny - 2:
                        qy = (q[j + 1, i] - q[j - 1, i]) / (2.0 * dy)
                    elif j == ny - 3:
                        qy = (q[ny - 5, i] - 8.0 * q[ny - 4, i] + 8.0 * q[ny - 2, i]
                              - q[ny - 1, i]) / (12.0 * dy)
                    else:
                        qy = (3.0 * q[ny - 1, i] - 4.0 * q[ny - 2, i]
                              + q[ny - 3, i]) / (2.0 * dy)
                out[j, i] = -(a * qx + b * qy)


def advection_rhs(q: ScalarField, grad_g_bar: VectorField, scheme: str = "upwind5") -> ScalarField:
    """-grad(G)-bar . grad(q) with per-component sign-selected upwinding."""
    if q.grid != grad_g_bar.grid:
        raise ValueError("advection fields must share a grid")
    if scheme not in _STENCILS:
        raise ValueError(f"unknown advection scheme {scheme!r}")
    dm, dp = _STENCILS[scheme]
    v = q.values
    ax = grad_g_bar.x.values
    ay = grad_g_bar.y.values
    qx = np.where(ax >= 0.0, dm(v, q.grid.dx), dp(v, q.grid.dx))
    vt = np.ascontiguousarray(v.T)
    qy = np.where(ay >= 0.0, dm(vt, q.grid.dy).T, dp(vt, q.grid.dy).T)
    return ScalarField(q.grid, -(ax * qx + ay * qy))


def _rhs(values: np.ndarray, t: float, ops: StaticOperators, grid) -> np.ndarray:
    ax = ops.grad_g_bar.x.values
    ay = ops.grad_g_bar.y.values
    if _numba is not None and ops.scheme == "upwind5":
        rhs = np.empty_like(values)
        _advect_upwind5_jit(values, ax, ay, grid.dx, grid.dy, rhs)
    else:
        dm, dp = _STENCILS[ops.scheme]
        qx = np.where(ax >= 0.0, dm(values, grid.dx), dp(values, grid.dx))
        vt = np.ascontiguousarray(values.T)
        qy = np.where(ay >= 0.0, dm(vt, grid.dy).T, dp(vt, grid.dy).T)
        rhs = -(ax * qx + ay * qy)
    rhs += float(boundary_signal(t)) * ops.f_hat.values
    if ops.sfs is not None:
        c = math.cos(2.0 * math.pi * t)
        s = math.sin(2.0 * math.pi * t)
        rhs -= c * ops.sfs.amplitude_cos + s * ops.sfs.amplitude_sin
    return rhs


def ssp_rk3_step(state: SolverState, ops: StaticOperators, dt: float) -> SolverState:
    """One SSP-RK3 update with sources at t^n, t^{n+1}, t^{n+1/2}."""
    if dt <= 0:
        raise ValueError("dt must be positive")
    grid = state.q.grid
    q0 = state.q.values
    t = state.t
    q1 = q0 + dt * _rhs(q0, t, ops, grid)
    q2 = 0.75 * q0 + 0.25 * (q1 + dt * _rhs(q1, t + dt, ops, grid))
    qn = (q0 + 2.0 * (q2 + dt * _rhs(q2, t + 0.5 * dt, ops, grid))) / 3.0
    if not np.all(np.isfinite(qn)):
        raise InstabilityError(
            f"non-finite solution after step {state.step + 1} (t = {t + dt:.6g})"
        )
    return SolverState(ScalarField(grid, qn), t + dt, state.step + 1)


@dataclass
class ErrorRecord:
    t: float
    l2: float
    linf: float


@dataclass
class RunResult:
    setup: CaseSetup
    static: StaticFields
    ops: StaticOperators
    final: SolverState
    errors: list[ErrorRecord] = field(default_factory=list)
    snapshots: dict[float, ScalarField] = field(default_factory=dict)


def build_operators(setup: CaseSetup, static: StaticFields) -> StaticOperators:
    f_hat = forcing_shape(setup.mesh, setup.grid, setup.kernel, static.grad_g_bar)
    sfs = precompute_sfs_fields(static) if setup.config.sfs_enabled else None
    return StaticOperators(
        grad_g_bar=static.grad_g_bar,
        f_hat=f_hat,
        alpha=static.alpha,
        sfs=sfs,
    )


def init_state(static: StaticFields) -> SolverState:
    """Initial condition: the filtered exact solution at t = 0."""
    return SolverState(static.u_sin.copy(), 0.0, 0)


def run(
    config: CaseConfig,
    static: StaticFields | None = None,
    setup: CaseSetup | None = None,
    end_time: float | None = None,
    keep_snapshots: bool = False,
) -> RunResult:
    """Advance from t = 0, recording error norms at every configured phase.

    ``end_time`` (in periods) truncates the run mid-period; the default runs
    ``config.periods`` full periods.  Precomputed ``static`` fields may be
    passed in to share work between related runs.
    """
    from .analysis import error_norms  # post-processing only; no cycle at runtime

    if setup is None:
        setup = build_case(config)
    if static is None:
        static = precompute_static_fields(
            setup.grid, setup.geom, setup.kernel, setup.quad,
            with_sfs=config.sfs_enabled,
        )
    ops = build_operators(setup, static)
    state = init_state(static)
    result = RunResult(setup, static, ops, state)

    spp = setup.steps_per_period
    dt = setup.dt
    total = float(config.periods) if end_time is None else float(end_time)
    n_steps = round(total * spp)

    phase_steps = set()
    for p in range(config.periods + 1):
        for ph in config.phases:
            k = round((p + ph) * spp)
            if 0 <= k <= n_steps:
                phase_steps.add(k)

    def record(st: SolverState):
        ref = static.reference(st.t)
        l2, linf = error_norms(st.q, ref)
        result.errors.append(ErrorRecord(st.t, l2, linf))
        if keep_snapshots:
            result.snapshots[st.t] = st.q.copy()

    if 0 in phase_steps:
        record(state)
    for k in range(1, n_steps + 1):
        state = ssp_rk3_step(state, ops, dt)
        # keep t exact on the uniform step lattice
        state.t = k * dt
        if k in phase_steps:
            record(state)
    result.final = state
    return result
