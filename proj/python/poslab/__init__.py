"""Probability that a random k-dimensional subspace of R^n contains a positive
vector: exact rational values, Haar subspace sampling, LP positivity decisions,
and seeded Monte Carlo verification."""

from ._core import (  # noqa: F401
    Decision,
    DualityReport,
    Estimate,
    EstimateMethod,
    PointCloud,
    Rational,
    RngStream,
    SubspaceBasis,
    SubspaceMethod,
    binomial,
    complement,
    contains_positive,
    contains_strictly_positive,
    duality_audit,
    estimate,
    gaussian_matrix,
    haar_subspace,
    hull_contains_origin,
    kernel_basis,
    orthonormal_columns,
    p_exact,
    p_table,
    random_orthogonal,
    sign_oracle_hyperplane,
    sign_oracle_line,
    to_decimal,
    wendel_halfspace_prob,
    wilson_interval,
)

__all__ = [name for name in dir() if not name.startswith("_")]
