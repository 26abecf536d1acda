"""Exhaustively enumerated finite groups: permutations on few points and 2x2 matrices over F_7."""
from . import perm
from .group import (
    FiniteGroup,
    SizeCapExceeded,
    alternating_group,
    cyclic_group,
    dihedral_group,
    direct_product,
    name_structure,
    perm_group,
    structure_tag,
    symmetric_group,
)
from .lattice import SubgroupLattice, lattice, offending_subgroups, subgroup_generated_by_class_check
from .orbits import NotCyclicQuotient, NotNormal, orbit_local_invariants
from .pgl2 import Mat2, det_pm1_group, outer_involutions, pgl2_action, sl2
from .sylow import sylow2, sylow2_shape, two_group_shape

cycle_type = perm.cycle_type

__all__ = [
    "FiniteGroup",
    "Mat2",
    "NotCyclicQuotient",
    "NotNormal",
    "SizeCapExceeded",
    "SubgroupLattice",
    "alternating_group",
    "cycle_type",
    "cyclic_group",
    "det_pm1_group",
    "dihedral_group",
    "direct_product",
    "lattice",
    "name_structure",
    "offending_subgroups",
    "orbit_local_invariants",
    "outer_involutions",
    "perm",
    "perm_group",
    "pgl2_action",
    "sl2",
    "structure_tag",
    "subgroup_generated_by_class_check",
    "sylow2",
    "sylow2_shape",
    "symmetric_group",
    "two_group_shape",
]
