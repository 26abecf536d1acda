"""(e, f) patterns read off from a decomposition group acting on the roots."""
from __future__ import annotations


class NotNormal(ValueError):
    pass


class NotCyclicQuotient(ValueError):
    pass


def orbits(G, n):
    seen = set()
    out = []
    for x in range(n):
        if x in seen:
            continue
        orb = {x}
        frontier = [x]
        while frontier:
            y = frontier.pop()
            for g in G.gens:
                z = g[y]
                if z not in orb:
                    orb.add(z)
                    frontier.append(z)
        seen |= orb
        out.append(frozenset(orb))
    return out


def orbit_local_invariants(D, I, n=8):
    """Sorted [(e, f)] for each D-orbit: e = size of an I-orbit in it, f = |O|/e."""
    if not all(g in D for g in I.gens):
        raise NotNormal("inertia is not contained in the decomposition group")
    if not D.is_normal(I):
        raise NotNormal("inertia is not normal in the decomposition group")
    if not any(D.subgroup(list(I.gens) + [g]).order == D.order for g in D):
        raise NotCyclicQuotient("D/I is not cyclic")
    inertia_orbits = {x: O for O in orbits(I, n) for x in O}
    out = []
    for O in orbits(D, n):
        e = len(inertia_orbits[min(O)])
        out.append((e, len(O) // e))
    return tuple(sorted(out))
