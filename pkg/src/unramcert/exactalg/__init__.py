"""Exact integer, rational and polynomial arithmetic."""
from .integers import (
    BudgetExceeded,
    FactoredInt,
    factor_integer,
    is_perfect_square,
    is_prime,
    is_rational_square,
    same_square_class,
    square_class,
    valuation,
)
from .poly import discriminant, resultant, substitute_t
from .qfactor import DegreeCapExceeded, factor_over_q

__all__ = [
    "BudgetExceeded",
    "DegreeCapExceeded",
    "FactoredInt",
    "discriminant",
    "factor_integer",
    "factor_over_q",
    "is_perfect_square",
    "is_prime",
    "is_rational_square",
    "resultant",
    "same_square_class",
    "square_class",
    "substitute_t",
    "valuation",
]
