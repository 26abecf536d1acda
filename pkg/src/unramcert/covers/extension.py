"""Central extensions 1 -> {1, z} -> cover -> base -> 1 and queries on them."""
from __future__ import annotations

from itertools import product

from ..permgroup.group import SizeCapExceeded, name_structure, structure_tag

SPLIT_CAP = 64


class WildCase(ValueError):
    """The residue characteristic divides the order of the inertia generator."""


class CentralExtension:
    def __init__(self, cover, base, project, z, name=""):
        self.cover = cover
        self.base = base
        self.project = project
        self.z = z
        self.name = name
        self.fibers = {}
        for x in cover:
            self.fibers.setdefault(project(x), []).append(x)

    def lifts(self, g):
        return self.fibers[g]

    def preimage(self, H):
        gens = [x for g in H.gens for x in self.lifts(g)] + [self.z]
        return self.cover.subgroup(gens, f"pre({H.name})")

    def kernel_is_central(self):
        C = self.cover
        return all(C.mul(self.z, g) == C.mul(g, self.z) for g in C.gens)

    def is_stem(self):
        return self.z in self.cover.derived_subgroup()


def lift_order(ext, g):
    """(order of the lift, (orders of both lifts)); the minimum is reported."""
    orders = tuple(sorted(ext.cover.element_order(x) for x in ext.lifts(g)))
    return min(orders), orders


def subgroup_splits(ext, H):
    """(True iff H lifts isomorphically into the cover, structure of the preimage).

    Every choice of lifts of H's generators is tried; a complement to the
    kernel is generated by the lifts of generators it contains, so this is
    exhaustive.
    """
    if H.order > SPLIT_CAP:
        raise SizeCapExceeded(f"split search limited to subgroups of order {SPLIT_CAP}")
    pre = ext.preimage(H)
    gens = list(H.gens) if H.order > 1 else []
    split = H.order == 1
    for signs in product((0, 1), repeat=len(gens)):
        lifted = [ext.lifts(g)[s] for g, s in zip(gens, signs)]
        if ext.cover.subgroup(lifted).order == H.order:
            split = True
            break
    tag = structure_tag(pre)
    tag["name"] = name_structure(pre)
    return split, tag


def local_obstruction_check(ext, sigma, tau, q):
    """True iff some lifts satisfy ord(tau~) = ord(tau) and sigma~ tau~ sigma~^-1 = tau~^q.

    Raises WildCase when q divides the order of tau.
    """
    C = ext.cover
    n = ext.base.element_order(tau)
    if n % q == 0:
        raise WildCase(f"q={q} divides the inertia order {n}")
    for st in ext.lifts(sigma):
        for tt in ext.lifts(tau):
            if C.element_order(tt) != n:
                continue
            if C.conj(st, tt) == C.power(tt, q % (2 * n)):
                return True
    return False
