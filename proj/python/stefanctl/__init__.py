"""Boundary-controlled one-phase melting: simulation and verification.

Thin wrapper around the C++ core; see the project README for the CLI and
scenario-file formats.
"""

from ._core import (
    BcMode,
    ClosedLoopResult,
    Coefficients,
    ControlInput,
    DecayCertificate,
    FeasibilityVerdict,
    InitialProfile,
    Integrator,
    KernelResidualReport,
    PhysicalParams,
    Scenario,
    SolverState,
    StefanError,
    TargetState,
    TraceRecord,
    build_initial_profile,
    closed_loop_run,
    control_law,
    decay_certificate,
    derive_coefficients,
    direct_transform,
    feasible_setpoint,
    h1_norm_sq,
    inverse_transform,
    kernel_residuals,
    neumann_interface,
    neumann_lambda,
    parse_scenario,
    predicted_energy,
    predicted_flux,
)

__all__ = [
    "BcMode",
    "ClosedLoopResult",
    "Coefficients",
    "ControlInput",
    "DecayCertificate",
    "FeasibilityVerdict",
    "InitialProfile",
    "Integrator",
    "KernelResidualReport",
    "PhysicalParams",
    "Scenario",
    "SolverState",
    "StefanError",
    "TargetState",
    "TraceRecord",
    "build_initial_profile",
    "closed_loop_run",
    "control_law",
    "decay_certificate",
    "derive_coefficients",
    "direct_transform",
    "feasible_setpoint",
    "h1_norm_sq",
    "inverse_transform",
    "kernel_residuals",
    "neumann_interface",
    "neumann_lambda",
    "parse_scenario",
    "predicted_energy",
    "predicted_flux",
]
