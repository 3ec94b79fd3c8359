"""Balanced Steinhaus triangles over Z/mZ.

Thin wrapper around the compiled extension; see the project README for the
full C++ API and the command-line tool.
"""

from ._steinhaus import (
    BudgetError,
    brute_force_balanced,
    bset_orbit_count,
    cmat,
    derive,
    derive_periodic,
    iap_window,
    is_antisymmetric,
    kernel_dimension,
    left_kernel,
    mmat,
    mu_for_range,
    tmat,
    triangle_balanced,
    triangle_multiplicity,
    triangle_rows,
    universal_period,
    universal_tuple,
    verify,
)

__all__ = [
    "BudgetError",
    "brute_force_balanced",
    "bset_orbit_count",
    "cmat",
    "derive",
    "derive_periodic",
    "iap_window",
    "is_antisymmetric",
    "kernel_dimension",
    "left_kernel",
    "mmat",
    "mu_for_range",
    "tmat",
    "triangle_balanced",
    "triangle_multiplicity",
    "triangle_rows",
    "universal_period",
    "universal_tuple",
    "verify",
]
