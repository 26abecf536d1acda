"""Branch points, inertia prediction for specializations, and the orbit-pattern comparison."""
from .families import (
    BASE_2A7,
    BASE_SL27,
    FAMILIES,
    T0,
    T3,
    base_2a7_sheet,
    base_sl27_sheet,
    chain_2a7,
    chain_sl27,
    f_family_sheet,
    f_literal,
    f_literal_bipoly,
    s7_inertia_data,
    s_family_sheet,
    sl27_inertia_data,
)
from .predict import (
    Candidate,
    Prediction,
    admissible_candidates,
    intersection_multiplicity,
    kln_consistency,
    predict_ramification,
)
from .sheet import (
    BranchPoint,
    CoverSheet,
    InseparableFiber,
    branch_points,
    cycle_power,
    local_cycle_type,
    monomial_pullback,
    residue_square_class,
)

__all__ = [
    "BASE_2A7",
    "BASE_SL27",
    "BranchPoint",
    "Candidate",
    "CoverSheet",
    "FAMILIES",
    "InseparableFiber",
    "Prediction",
    "T0",
    "T3",
    "admissible_candidates",
    "base_2a7_sheet",
    "base_sl27_sheet",
    "branch_points",
    "chain_2a7",
    "chain_sl27",
    "cycle_power",
    "f_family_sheet",
    "f_literal",
    "f_literal_bipoly",
    "intersection_multiplicity",
    "kln_consistency",
    "local_cycle_type",
    "monomial_pullback",
    "predict_ramification",
    "residue_square_class",
    "s7_inertia_data",
    "s_family_sheet",
    "sl27_inertia_data",
]
