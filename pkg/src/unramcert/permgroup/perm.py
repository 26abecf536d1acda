"""Permutations as tuples of images on {0, ..., n-1}.

Products compose right to left: (g * h)[x] = g[h[x]].
"""
from __future__ import annotations


def identity(n):
    return tuple(range(n))


def mul(g, h):
    return tuple(g[x] for x in h)


def inverse(g):
    out = [0] * len(g)
    for i, x in enumerate(g):
        out[x] = i
    return tuple(out)


def power(g, k):
    if k < 0:
        g, k = inverse(g), -k
    out = identity(len(g))
    base = g
    while k:
        if k & 1:
            out = mul(out, base)
        base = mul(base, base)
        k >>= 1
    return out


def from_cycles(n, *cycles):
    """Permutation of {0..n-1} from disjoint cycles given as point sequences."""
    img = list(range(n))
    for cyc in cycles:
        for i, x in enumerate(cyc):
            img[x] = cyc[(i + 1) % len(cyc)]
    if sorted(img) != list(range(n)):
        raise ValueError("cycles are not disjoint")
    return tuple(img)


def is_perm(g):
    return sorted(g) == list(range(len(g)))


def cycles(g):
    seen = set()
    out = []
    for start in range(len(g)):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        x = g[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = g[x]
        out.append(tuple(cyc))
    return out


def cycle_type(g):
    """Cycle lengths, descending, fixed points included."""
    return tuple(sorted((len(c) for c in cycles(g)), reverse=True))


def order(g):
    from math import lcm

    out = 1
    for c in cycles(g):
        out = lcm(out, len(c))
    return out


def sign(g):
    return -1 if sum(len(c) - 1 for c in cycles(g)) % 2 else 1


def support(g):
    return {i for i, x in enumerate(g) if i != x}


def format_cycles(g, offset=0):
    cs = [c for c in cycles(g) if len(c) > 1]
    if not cs:
        return "()"
    return "".join("(" + ",".join(str(x + offset) for x in c) + ")" for c in cs)
