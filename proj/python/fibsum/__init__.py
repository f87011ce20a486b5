"""Exact verification of Fibonacci-Lucas reciprocal sum identities.

Thin wrapper over the C++ extension. All exact values cross the boundary
as strings (or ints for F_n / L_n); parse them with fractions.Fraction
when rational arithmetic is needed on the python side.
"""

from ._fibsum import (
    DomainError,
    FibsumParseError,
    Quadratic,
    UnknownIdError,
    catalog_ids,
    check_identity,
    closed_form,
    entry_info,
    fib,
    identity_ids,
    lucas,
    reference_examples,
    partial_sum,
    phi_pow,
    sqrt5_pow,
    sweep_identities,
    term_at,
    validate_params,
    verify_finite,
    verify_infinite,
)

__all__ = [
    "DomainError",
    "FibsumParseError",
    "Quadratic",
    "UnknownIdError",
    "catalog_ids",
    "check_identity",
    "closed_form",
    "entry_info",
    "fib",
    "identity_ids",
    "lucas",
    "reference_examples",
    "partial_sum",
    "phi_pow",
    "sqrt5_pow",
    "sweep_identities",
    "term_at",
    "validate_params",
    "verify_finite",
    "verify_infinite",
]

__version__ = "1.0.0"
