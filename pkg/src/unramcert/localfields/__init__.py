"""Factorization data over F_p and Q_p."""
from .modp import (
    NotSquarefree,
    PolyModP,
    cycle_type_key,
    factor_mod_p,
    format_cycle_type,
    frobenius_cycle_type,
)
from .padic import (
    IrregularPolygon,
    LocalData,
    PrecisionExhausted,
    WildUnsupported,
    hensel_split,
    local_invariants,
)
from .q7 import RamQuadElt, q7_roots, q7_sqrt7_split_check

__all__ = [
    "IrregularPolygon",
    "LocalData",
    "NotSquarefree",
    "PolyModP",
    "PrecisionExhausted",
    "RamQuadElt",
    "WildUnsupported",
    "cycle_type_key",
    "factor_mod_p",
    "format_cycle_type",
    "frobenius_cycle_type",
    "hensel_split",
    "local_invariants",
    "q7_roots",
    "q7_sqrt7_split_check",
]
