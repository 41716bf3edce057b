"""Exact simulator of the neutron-interferometer weak-value experiment."""

from ._core import (
    Detector,
    Path,
    Scenario,
    Truncation,
    absorber_scenario,
    cheshire_witness,
    closed_form_O,
    estimate_pi_from_absorber,
    estimate_sigma_pi,
    magnet_scenario,
    poisson_counts,
    projective_spin_expectation,
    reference_scenario,
    reproduce_paper_table,
    run,
    sweep_alpha,
    sweep_chi,
    truncation_scan,
    weak_values,
    weakvalue_intensity,
)

__all__ = [
    "Detector",
    "Path",
    "Scenario",
    "Truncation",
    "absorber_scenario",
    "cheshire_witness",
    "closed_form_O",
    "estimate_pi_from_absorber",
    "estimate_sigma_pi",
    "magnet_scenario",
    "poisson_counts",
    "projective_spin_expectation",
    "reference_scenario",
    "reproduce_paper_table",
    "run",
    "sweep_alpha",
    "sweep_chi",
    "truncation_scan",
    "weak_values",
    "weakvalue_intensity",
]
