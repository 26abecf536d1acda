"""Finite groups given by generators and a multiplication, fully enumerated.

The element type is anything hashable: permutation tuples, 2x2 matrices
over F_7, or cover elements. Everything is computed by exhaustive search,
which is fine below SIZE_CAP.
"""
from __future__ import annotations

from collections import Counter
from functools import cached_property

from . import perm as pm

SIZE_CAP = 20_000


class SizeCapExceeded(ValueError):
    pass


class FiniteGroup:
    def __init__(self, gens, mul, identity, name="", cap=SIZE_CAP):
        self.gens = tuple(gens)
        self.mul = mul
        self.identity = identity
        self.name = name
        self.cap = cap
        self.elements = self._close()
        self.index = {g: i for i, g in enumerate(self.elements)}

    def _close(self):
        seen = {self.identity}
        out = [self.identity]
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in self.gens:
                    y = self.mul(x, g)
                    if y not in seen:
                        seen.add(y)
                        out.append(y)
                        nxt.append(y)
                        if len(out) > self.cap:
                            raise SizeCapExceeded(f"group exceeds {self.cap} elements")
            frontier = nxt
        return out

    def __repr__(self):
        return f"FiniteGroup({self.name or '?'}, order={self.order})"

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g):
        return g in self.index

    @property
    def order(self):
        return len(self.elements)

    def subgroup(self, gens, name=""):
        gens = list(gens)
        if len(gens) > 4:
            gens = self._prune(gens)
        return FiniteGroup(gens or [self.identity], self.mul, self.identity, name, self.cap)

    def _prune(self, gens):
        # drop generators already in the span of the earlier ones
        kept, span = [], {self.identity}
        for g in gens:
            if g not in span:
                kept.append(g)
                span = set(FiniteGroup(kept, self.mul, self.identity, "", self.cap).elements)
        return kept

    def element_order(self, g):
        k, x = 1, g
        while x != self.identity:
            x = self.mul(x, g)
            k += 1
        return k

    def inverse(self, g):
        x, prev = g, self.identity
        while x != self.identity:
            prev = x
            x = self.mul(x, g)
        return prev

    def power(self, g, k):
        if k < 0:
            g, k = self.inverse(g), -k
        out = self.identity
        for _ in range(k):
            out = self.mul(out, g)
        return out

    def conj(self, g, x):
        """g x g^-1."""
        return self.mul(self.mul(g, x), self.inverse(g))

    def commutator(self, a, b):
        return self.mul(self.mul(a, b), self.inverse(self.mul(b, a)))

    @cached_property
    def inverses(self):
        out = {}
        for g in self.elements:
            if g not in out:
                h = self.inverse(g)
                out[g], out[h] = h, g
        return out

    def order_census(self):
        return dict(sorted(Counter(self.element_order(g) for g in self.elements).items()))

    def is_abelian(self):
        return all(self.mul(a, b) == self.mul(b, a) for a in self.gens for b in self.gens)

    def is_subgroup_of(self, other):
        return all(g in other for g in self.gens)

    def conjugacy_class(self, x):
        inv = self.inverses
        return {self.mul(self.mul(g, x), inv[g]) for g in self.elements}

    def conjugacy_classes(self):
        seen = set()
        out = []
        for x in self.elements:
            if x not in seen:
                c = self.conjugacy_class(x)
                seen |= c
                out.append(c)
        return out

    def centralizer(self, x):
        gens = [g for g in self.elements if self.mul(g, x) == self.mul(x, g)]
        return self.subgroup(gens, f"C({self.name})")

    def normalizer(self, H):
        inv = self.inverses
        gens = [g for g in self.elements if all(self.mul(self.mul(g, h), inv[g]) in H for h in H.gens)]
        return self.subgroup(gens, f"N({H.name})")

    def center(self):
        gens = [z for z in self.elements if all(self.mul(z, g) == self.mul(g, z) for g in self.gens)]
        return self.subgroup(gens, "Z")

    def is_normal(self, H):
        return all(self.conj(g, h) in H for g in self.gens for h in H.gens)

    def normal_closure(self, gens):
        gens = list(gens)
        H = self.subgroup(gens)
        while True:
            extra = [self.conj(g, h) for g in self.gens for h in H.gens]
            extra = [x for x in extra if x not in H]
            if not extra:
                return H
            gens.extend(extra)
            H = self.subgroup(gens)

    def derived_subgroup(self):
        comms = [self.commutator(a, b) for a in self.gens for b in self.gens]
        return self.normal_closure(comms)

    def is_perfect(self):
        return self.derived_subgroup().order == self.order

    def involutions(self):
        return [g for g in self.elements if g != self.identity and self.mul(g, g) == self.identity]


def perm_group(gens, n=None, name=""):
    gens = [tuple(g) for g in gens]
    n = n if n is not None else len(gens[0])
    return FiniteGroup(gens or [pm.identity(n)], pm.mul, pm.identity(n), name)


def symmetric_group(n, points=None, degree=None):
    """Sym(points) acting on {0..degree-1}; defaults to S_n on range(n)."""
    points = list(points if points is not None else range(n))
    degree = degree if degree is not None else n
    if len(points) < 2:
        return perm_group([pm.identity(degree)], degree, "1")
    gens = [pm.from_cycles(degree, points[:2]), pm.from_cycles(degree, points)]
    return perm_group(gens, degree, f"Sym{tuple(points)}")


def alternating_group(points, degree):
    points = list(points)
    gens = [pm.from_cycles(degree, (points[0], points[1], points[i])) for i in range(2, len(points))]
    return perm_group(gens or [pm.identity(degree)], degree, f"Alt{tuple(points)}")


def cyclic_group(n):
    return perm_group([pm.from_cycles(n, tuple(range(n)))] if n > 1 else [(0,)], n, f"C{n}")


def dihedral_group(n):
    """Dihedral group of order 2n on n points."""
    rot = pm.from_cycles(n, tuple(range(n)))
    ref = tuple((-i) % n for i in range(n))
    return perm_group([rot, ref], n, f"D{2 * n}")


def direct_product(G, H):
    """Direct product of two permutation groups acting on disjoint point sets."""
    n, m = len(G.identity), len(H.identity)
    gens = [tuple(g) + tuple(range(n, n + m)) for g in G.gens]
    gens += [tuple(range(n)) + tuple(x + n for x in h) for h in H.gens]
    return perm_group(gens, n + m, f"{G.name}x{H.name}")


def structure_tag(G):
    """Order census plus abelianness and the orders of center and derived subgroup."""
    return {
        "order": G.order,
        "census": G.order_census(),
        "abelian": G.is_abelian(),
        "center": G.center().order,
        "derived": G.derived_subgroup().order,
    }


def _mat3_mul(a, b):
    # 2x2 matrices over F_3, used only to build the quaternion group
    return (
        (a[0] * b[0] + a[1] * b[2]) % 3,
        (a[0] * b[1] + a[1] * b[3]) % 3,
        (a[2] * b[0] + a[3] * b[2]) % 3,
        (a[2] * b[1] + a[3] * b[3]) % 3,
    )


def quaternion_group():
    return FiniteGroup([(0, 1, 2, 0), (1, 1, 1, 2)], _mat3_mul, (1, 0, 0, 1), "Q8")


def reference_groups():
    """Small groups used to name structures by structure_tag comparison."""
    c2 = cyclic_group(2)
    return {
        "C2": c2,
        "C4": cyclic_group(4),
        "C2xC2": direct_product(c2, c2),
        "C6": cyclic_group(6),
        "S3": symmetric_group(3),
        "C8": cyclic_group(8),
        "C2xC4": direct_product(c2, cyclic_group(4)),
        "C2xC2xC2": direct_product(direct_product(c2, c2), c2),
        "D8": dihedral_group(4),
        "Q8": quaternion_group(),
        "S3xC2": direct_product(symmetric_group(3), c2),
    }


def name_structure(G):
    """Name of the reference group with the same structure tag, else None."""
    tag = structure_tag(G)
    for name, R in reference_groups().items():
        if R.order == G.order and structure_tag(R) == tag:
            return name
    return None
