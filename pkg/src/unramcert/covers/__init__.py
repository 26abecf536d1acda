"""Double covers of PGL_2(7) and S_7, lift orders and local obstruction checks."""
from .detcover import build_det_pm1_cover, diag
from .extension import (
    CentralExtension,
    WildCase,
    lift_order,
    local_obstruction_check,
    subgroup_splits,
)
from .spin import build_spin_cover, build_spin_cover_s7, clifford_mul, cocycle, reduced_word, section

__all__ = [
    "CentralExtension",
    "WildCase",
    "build_det_pm1_cover",
    "build_spin_cover",
    "build_spin_cover_s7",
    "clifford_mul",
    "cocycle",
    "diag",
    "lift_order",
    "local_obstruction_check",
    "reduced_word",
    "section",
    "subgroup_splits",
]
