"""Phase-lag thermoelastic plate: operators, resolvent norms and power-law fits."""

from ._phaselag import (
    LinalgError,
    ValidationError,
    assemble_block,
    dirichlet_eigenvalues,
    eigenvalues,
    gevrey_fit,
    matrix_exponential,
    numerical_abscissa,
    run_cli,
    taylor_coefficients,
    weighted_resolvent_norm,
)

__all__ = [
    "LinalgError",
    "ValidationError",
    "assemble_block",
    "dirichlet_eigenvalues",
    "eigenvalues",
    "gevrey_fit",
    "matrix_exponential",
    "numerical_abscissa",
    "run_cli",
    "taylor_coefficients",
    "weighted_resolvent_norm",
]
