"""Volume-filtering immersed boundary solver and verification harness."""

from .case import CaseConfig, CaseSetup, build_case
from .geometry import CircleGeometry, boundary_signal, exact_solution, level_set
from .grid import DomainSpec, Grid, ScalarField, VectorField
from .kernel import FilterKernel, kernel_normalization
from .filtering import (
    StaticFields,
    SubgridQuadrature,
    filter_full_space,
    filter_indicator_weighted,
    precompute_static_fields,
    volume_fraction,
    volume_fraction_poisson,
)
from .surface import SurfaceMesh, build_circle_mesh, forcing_field, scatter_normals
from .sfs import SfsFields, precompute_sfs_fields, sfs_scaling_study, tau_sfs
from .solver import SolverState, StaticOperators, advection_rhs, run, ssp_rk3_step

__all__ = [
    "CaseConfig",
    "CaseSetup",
    "CircleGeometry",
    "DomainSpec",
    "FilterKernel",
    "Grid",
    "ScalarField",
    "SfsFields",
    "SolverState",
    "StaticFields",
    "StaticOperators",
    "SubgridQuadrature",
    "SurfaceMesh",
    "VectorField",
    "advection_rhs",
    "boundary_signal",
    "build_case",
    "build_circle_mesh",
    "exact_solution",
    "filter_full_space",
    "filter_indicator_weighted",
    "forcing_field",
    "kernel_normalization",
    "level_set",
    "precompute_sfs_fields",
    "precompute_static_fields",
    "run",
    "scatter_normals",
    "sfs_scaling_study",
    "ssp_rk3_step",
    "tau_sfs",
    "volume_fraction",
    "volume_fraction_poisson",
]

__version__ = "0.1.0"
