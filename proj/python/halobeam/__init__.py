"""Laser power beaming from EMLP-2 halo orbits to lunar far-side receivers.

The heavy lifting lives in the C++ extension ``halobeam._core``; this package
re-exports its public surface.
"""

from halobeam._core import (
    ConfigError,
    EmpiricalCdf,
    HaloOrbitSpec,
    HarvestedPowerDistribution,
    IoError,
    LinkBudgetResult,
    LinkGeometry,
    LinkParameters,
    PointingErrorModel,
    Vector3,
    __version__,
    central_angle_limit,
    harvested_power,
    ks_statistic,
    link_geometry,
    list_scenarios,
    misalignment_loss,
    monte_carlo_cdf,
    run_coverage,
    run_power_cdf,
    run_visibility,
    sample_radial_error,
    scenario_config_json,
    validate_config_json,
    visibility_constraint_margin_km,
)

__all__ = [
    "ConfigError",
    "EmpiricalCdf",
    "HaloOrbitSpec",
    "HarvestedPowerDistribution",
    "IoError",
    "LinkBudgetResult",
    "LinkGeometry",
    "LinkParameters",
    "PointingErrorModel",
    "Vector3",
    "__version__",
    "central_angle_limit",
    "harvested_power",
    "ks_statistic",
    "link_geometry",
    "list_scenarios",
    "misalignment_loss",
    "monte_carlo_cdf",
    "run_coverage",
    "run_power_cdf",
    "run_visibility",
    "sample_radial_error",
    "scenario_config_json",
    "validate_config_json",
    "visibility_constraint_margin_km",
]
