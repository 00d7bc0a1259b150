import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from vfib.geometry import (
    CircleGeometry,
    boundary_signal,
    exact_advection,
    exact_solution,
    grad_level_set,
    indicator,
    level_set,
)
from vfib.grid import DomainSpec

GEOM = CircleGeometry(0.0, 0.0, 0.2)


def test_level_set_on_interface():
    assert level_set(GEOM.x_c + GEOM.radius, GEOM.y_c, GEOM) == pytest.approx(0.0)


def test_level_set_center():
    assert level_set(GEOM.x_c, GEOM.y_c, GEOM) == pytest.approx(-GEOM.radius)


def test_level_set_outside():
    assert level_set(GEOM.x_c + 2 * GEOM.radius, GEOM.y_c, GEOM) == pytest.approx(0.2)


def test_grad_level_set_axis_points():
    assert grad_level_set(GEOM.x_c + 1.0, GEOM.y_c, GEOM) == (1.0, 0.0)
    gx, gy = grad_level_set(GEOM.x_c, GEOM.y_c - 0.5, GEOM)
    assert (gx, gy) == (0.0, -1.0)


def test_grad_level_set_center_is_flagged_zero():
    assert grad_level_set(GEOM.x_c, GEOM.y_c, GEOM) == (0.0, 0.0)


@given(
    st.floats(-1.0, 1.0, allow_nan=False),
    st.floats(-1.0, 1.0, allow_nan=False),
)
def test_grad_level_set_unit_magnitude(x, y):
    if math.hypot(x - GEOM.x_c, y - GEOM.y_c) < 1e-9:
        return
    gx, gy = grad_level_set(x, y, GEOM)
    assert math.hypot(gx, gy) == pytest.approx(1.0, abs=1e-12)


def test_indicator_values():
    assert indicator(0.9, 0.9, GEOM) == 1.0
    assert indicator(GEOM.x_c, GEOM.y_c, GEOM) == 0.0
    # interface assigned to region 2 by the strict inequality
    assert indicator(GEOM.x_c + GEOM.radius, GEOM.y_c, GEOM) == 0.0


def test_exact_solution_initial_condition():
    x, y = 0.6, -0.3
    g = level_set(x, y, GEOM)
    assert exact_solution(x, y, 0.0, GEOM) == pytest.approx(math.sin(2 * math.pi * g))


def test_exact_solution_matches_boundary_signal_on_interface():
    for t in (0.0, 0.1, 0.37, 0.99):
        on_interface = exact_solution(GEOM.x_c + GEOM.radius, GEOM.y_c, t, GEOM)
        assert on_interface == pytest.approx(float(boundary_signal(t)), abs=1e-12)


def test_exact_solution_periodic():
    rng = np.random.default_rng(7)
    xs = rng.uniform(-1, 1, 50)
    ys = rng.uniform(-1, 1, 50)
    np.testing.assert_allclose(
        exact_solution(xs, ys, 1.3, GEOM), exact_solution(xs, ys, 0.3, GEOM), atol=1e-12
    )


def test_exact_solution_satisfies_governing_equation():
    # du/dt + grad(G).grad(u) must vanish identically
    rng = np.random.default_rng(11)
    for _ in range(100):
        x, y = rng.uniform(-1, 1, 2)
        t = rng.uniform(0, 1)
        eps = 1e-6
        dudt = (exact_solution(x, y, t + eps, GEOM) - exact_solution(x, y, t - eps, GEOM)) / (2 * eps)
        residual = dudt + exact_advection(x, y, t, GEOM)
        assert abs(residual) < 1e-6  # finite-difference du/dt limits the check
    # and the analytic cancellation is exact
    x, y, t = 0.4, 0.5, 0.2
    g = level_set(x, y, GEOM)
    dudt_exact = -2 * math.pi * math.cos(2 * math.pi * (g - t))
    assert dudt_exact + exact_advection(x, y, t, GEOM) == pytest.approx(0.0, abs=1e-12)


def test_boundary_signal_values():
    assert float(boundary_signal(0.0)) == pytest.approx(0.0)
    assert float(boundary_signal(0.25)) == pytest.approx(-1.0)
    assert float(boundary_signal(0.5)) == pytest.approx(0.0, abs=1e-12)


def test_circle_must_fit_in_domain():
    geom = CircleGeometry(0.9, 0.0, 0.2)
    with pytest.raises(ValueError):
        geom.validate_inside(DomainSpec(), halo=0.05)


def test_radius_must_be_positive():
    with pytest.raises(ValueError):
        CircleGeometry(0.0, 0.0, -0.1)
