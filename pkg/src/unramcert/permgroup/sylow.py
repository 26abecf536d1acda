"""Sylow 2-subgroups and their shape."""
from __future__ import annotations


def _two_part(n):
    k = 1
    while n % 2 == 0:
        n //= 2
        k *= 2
    return k


def _is_power_of_two(n):
    return n & (n - 1) == 0


def sylow2(G):
    """A Sylow 2-subgroup built by greedy extension.

    A 2-subgroup that is not Sylow is properly contained in a 2-subgroup of
    its normalizer, so scanning all 2-elements always reaches full size.
    """
    target = _two_part(G.order)
    P = G.subgroup([G.identity])
    gens = []
    candidates = [g for g in G if _is_power_of_two(G.element_order(g))]
    while P.order < target:
        grown = False
        for g in candidates:
            if g in P:
                continue
            Q = G.subgroup(gens + [g])
            if _is_power_of_two(Q.order):
                P, gens, grown = Q, gens + [g], True
                break
        if not grown:
            raise RuntimeError("greedy Sylow search stalled")
    return P


def two_group_shape(P):
    """cyclic, generalized-quaternion, dihedral, klein-containing or other."""
    n = P.order
    census = P.order_census()
    if census.get(n, 0) > 0:
        return "cyclic"
    involutions = census.get(2, 0)
    if involutions == 1:
        return "generalized-quaternion"
    if n >= 8:
        for g in P:
            if P.element_order(g) == n // 2:
                outside = [x for x in P if x not in P.subgroup([g])]
                if all(P.element_order(x) == 2 for x in outside):
                    return "dihedral"
                break
    invs = P.involutions()
    for i, a in enumerate(invs):
        for b in invs[i + 1 :]:
            if P.mul(a, b) == P.mul(b, a):
                return "klein-containing"
    return "other"


def sylow2_shape(G):
    P = sylow2(G)
    return two_group_shape(P), P
