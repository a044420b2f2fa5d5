"""Plateau counts of idempotent and p-potent quadratic functions."""

from ._core import (
    BudgetExceeded,
    InvariantViolation,
    UsageError,
    enumerate_distribution,
    factor,
    gen_poly,
    gen_poly_via_propositions,
    plateau_s,
    special_counts,
    walsh_spectrum,
    weight_enumerator,
)

__all__ = [
    "BudgetExceeded",
    "InvariantViolation",
    "UsageError",
    "enumerate_distribution",
    "factor",
    "gen_poly",
    "gen_poly_via_propositions",
    "plateau_s",
    "special_counts",
    "walsh_spectrum",
    "weight_enumerator",
]
