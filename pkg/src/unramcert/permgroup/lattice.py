"""Exhaustive subgroup lattice of a small group, and subgroup searches on it.

Subgroups are bitmasks over the group's element index. Starting from the
cyclic subgroups, every subgroup is joined with every cyclic subgroup until
nothing new appears; each subgroup is generated by cyclic subgroups, so
this reaches all of them.
"""
from __future__ import annotations

from . import perm as pm
from .group import SizeCapExceeded

LATTICE_CAP = 1024


class SubgroupLattice:
    def __init__(self, G, cap=LATTICE_CAP):
        if G.order > cap:
            raise SizeCapExceeded(f"subgroup lattice limited to order {cap}")
        self.G = G
        n = G.order
        idx = G.index
        els = G.elements
        self.table = [[idx[G.mul(a, b)] for b in els] for a in els]
        self.identity = idx[G.identity]
        self.cyclic = sorted({self._close_from([i]) for i in range(n)})
        self.subgroups = self._enumerate()

    def _close_from(self, gens):
        """Bitmask of the subgroup generated by element indices ``gens``."""
        table = self.table
        mask = 1 << self.identity
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                row = table[x]
                for g in gens:
                    y = row[g]
                    if not mask >> y & 1:
                        mask |= 1 << y
                        nxt.append(y)
            frontier = nxt
        return mask

    def _enumerate(self):
        found = set(self.cyclic)
        found.add(1 << self.identity)
        frontier = list(found)
        cyclic_gen = {}
        for C in self.cyclic:
            # one generator per cyclic subgroup is enough for joins
            for i in range(len(self.table)):
                if C >> i & 1 and self._close_from([i]) == C:
                    cyclic_gen[C] = i
                    break
        self._gens = {}
        for H in found:
            self._gens[H] = [cyclic_gen[H]] if H in cyclic_gen else []
        while frontier:
            nxt = []
            for H in frontier:
                for C, g in cyclic_gen.items():
                    if H | C == H:
                        continue
                    J = self._close_from(self._gens[H] + [g])
                    if J not in found:
                        found.add(J)
                        self._gens[J] = self._gens[H] + [g]
                        nxt.append(J)
            frontier = nxt
        return sorted(found, key=lambda m: (bin(m).count("1"), m))

    def elements_of(self, mask):
        els = self.G.elements
        return [els[i] for i in range(len(els)) if mask >> i & 1]

    def as_group(self, mask, name=""):
        gens = [self.G.elements[i] for i in self._gens.get(mask, [])] or self.elements_of(mask)
        return self.G.subgroup(gens, name)

    def orders(self):
        return [bin(m).count("1") for m in self.subgroups]

    def __len__(self):
        return len(self.subgroups)


_CACHE = {}


def lattice(G):
    """Lattice for G, cached by the group's generators and name."""
    key = (G.name, G.gens)
    if key not in _CACHE:
        _CACHE[key] = SubgroupLattice(G)
    return _CACHE[key]


def subgroup_generated_by_class_check(G, cls, extra, type_of=pm.cycle_type):
    """True iff no proper subgroup H is generated by H & cls while containing
    an element of the same type as ``extra``."""
    L = lattice(G)
    full = (1 << G.order) - 1
    idx = G.index
    cls_mask = 0
    for c in cls:
        cls_mask |= 1 << idx[c]
    want = type_of(extra)
    typed = 0
    for g in G.elements:
        if type_of(g) == want:
            typed |= 1 << idx[g]
    for H in L.subgroups:
        if H == full or not H & typed:
            continue
        inside = H & cls_mask
        gens = [i for i in range(G.order) if inside >> i & 1]
        if L._close_from(gens) == H:
            return False
    return True


def offending_subgroups(G, cls, extra, type_of=pm.cycle_type):
    """The proper subgroups that make subgroup_generated_by_class_check fail."""
    L = lattice(G)
    full = (1 << G.order) - 1
    idx = G.index
    cls_idx = [idx[c] for c in cls]
    want = type_of(extra)
    out = []
    for H in L.subgroups:
        if H == full:
            continue
        if not any(H >> idx[g] & 1 for g in G.elements if type_of(g) == want):
            continue
        gens = [i for i in cls_idx if H >> i & 1]
        if L._close_from(gens) == H:
            out.append(L.as_group(H))
    return out
