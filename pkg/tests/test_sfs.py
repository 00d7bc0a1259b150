"""Subfilter closure term: reconstruction identities and width scaling."""

import math

import numpy as np
import pytest

from vfib.filtering import SubgridQuadrature, precompute_static_fields
from vfib.geometry import CircleGeometry
from vfib.grid import DomainSpec, Grid
from vfib.kernel import FilterKernel
from vfib.sfs import precompute_sfs_fields, sfs_scaling_study, tau_sfs

GEOM = CircleGeometry(0.0, 0.0, 0.2)


def _static(delta_f_over_D, n):
    grid = Grid.for_domain(DomainSpec(), n, n)
    kernel = FilterKernel(delta_f_over_D * 0.4)
    quad = SubgridQuadrature(points_per_width=8)
    return precompute_static_fields(grid, GEOM, kernel, quad, with_sfs=True)


def test_time_reconstruction():
    static = _static(1.0 / 2.0, 80)
    fields = precompute_sfs_fields(static)
    np.testing.assert_allclose(
        tau_sfs(fields, 0.0).values, fields.amplitude_cos, atol=1e-15
    )
    np.testing.assert_allclose(
        tau_sfs(fields, 0.25).values, fields.amplitude_sin, atol=1e-12
    )
    # half period flips the sign of the t=0 field
    np.testing.assert_allclose(
        tau_sfs(fields, 0.5).values, -fields.amplitude_cos, atol=1e-12
    )


def test_amplitudes_follow_definition():
    static = _static(1.0 / 2.0, 80)
    fields = precompute_sfs_fields(static)
    np.testing.assert_allclose(
        fields.amplitude_cos, fields.s1.values - fields.v1.values
    )
    np.testing.assert_allclose(
        fields.amplitude_sin, fields.s2.values - fields.v2.values
    )
    # resolved-part amplitudes are 2*pi times the filtered trig fields
    np.testing.assert_allclose(fields.s1.values, 2.0 * math.pi * static.u_cos.values)
    np.testing.assert_allclose(fields.s2.values, 2.0 * math.pi * static.u_sin.values)


def test_magnitude_shrinks_with_filter_width():
    # closure term scales like delta_f^2: halving the width should cut the
    # peak by roughly 4; demand at least a factor of 2 on coarse grids.
    coarse = precompute_sfs_fields(_static(1.0 / 2.0, 80))
    fine = precompute_sfs_fields(_static(1.0 / 4.0, 160))
    peak = lambda f: float(np.abs(tau_sfs(f, 0.25).values).max())
    assert peak(coarse) / peak(fine) > 2.0


def test_scaling_study_needs_three_widths():
    with pytest.raises(ValueError):
        sfs_scaling_study([0.5, 0.25])
