"""The double cover of S_n in which transpositions lift to involutions.

Model: the Clifford algebra of R^n with e_i^2 = +1. The transposition
(i, i+1) lifts to w_i = (e_i - e_{i+1}) / sqrt 2, which squares to 1.
Each permutation g gets the section W_g, the product of the w_i along a
fixed reduced word of g; then W_g W_h = c(g, h) W_{gh} with c = +-1.
The square roots are tracked as a power of 2 so everything stays in Z.

Cover elements are pairs (g, s) with s in {0, 1} meaning (-1)^s W_g.
"""
from __future__ import annotations

from functools import lru_cache

from ..permgroup import perm as pm
from ..permgroup.group import FiniteGroup, symmetric_group
from .extension import CentralExtension

N = 7


def _reorder_sign(a, b):
    """Sign from moving the generators of blade b past those of blade a."""
    a >>= 1
    swaps = 0
    while a:
        swaps += bin(a & b).count("1")
        a >>= 1
    return -1 if swaps & 1 else 1


def clifford_mul(x, y):
    """Product of multivectors {blade bitmask: int}, with e_i^2 = +1."""
    out = {}
    for a, ca in x.items():
        for b, cb in y.items():
            k = a ^ b
            out[k] = out.get(k, 0) + _reorder_sign(a, b) * ca * cb
    return {k: v for k, v in out.items() if v}


def _w(i):
    return {1 << i: 1, 1 << (i + 1): -1}


@lru_cache(maxsize=None)
def reduced_word(g):
    """Reduced word in adjacent transpositions s_i = (i, i+1) with g = s_{i1} ... s_{ik}.

    Peels off the smallest right descent: g = (g s_i) s_i where g(i) > g(i+1).
    """
    for i in range(len(g) - 1):
        if g[i] > g[i + 1]:
            s = pm.from_cycles(len(g), (i, i + 1))
            return reduced_word(pm.mul(g, s)) + (i,)
    return ()


@lru_cache(maxsize=None)
def section(g):
    """Unnormalized W_g as a dict; its true scale is 2^(len(word)/2)."""
    word = reduced_word(g)
    if not word:
        return {0: 1}
    prev = pm.mul(g, pm.from_cycles(len(g), (word[-1], word[-1] + 1)))
    return clifford_mul(section(prev), _w(word[-1]))


def _coefficient_of_product(x, y, blade):
    total = 0
    for a, ca in x.items():
        b = a ^ blade
        cb = y.get(b)
        if cb:
            total += _reorder_sign(a, b) * ca * cb
    return total


@lru_cache(maxsize=None)
def cocycle(g, h):
    """c(g, h) in {+1, -1} with W_g W_h = c W_{gh}."""
    gh = pm.mul(g, h)
    target = section(gh)
    blade, coeff = min(target.items())
    lg, lh, lgh = len(reduced_word(g)), len(reduced_word(h)), len(reduced_word(gh))
    k = (lg + lh - lgh) // 2
    got = _coefficient_of_product(section(g), section(h), blade)
    ratio, rem = divmod(got, coeff * (1 << k))
    if rem or ratio not in (1, -1):
        raise ArithmeticError("section product is not a signed multiple of the section")
    return ratio


def spin_mul(x, y):
    g, s = x
    h, t = y
    c = cocycle(g, h)
    return (pm.mul(g, h), (s + t + (c < 0)) & 1)


def build_spin_cover(n=N):
    """CentralExtension of S_n where transpositions lift to order 2."""
    base = symmetric_group(n)
    gens = [(g, 0) for g in base.gens]
    # the kernel comes for free: the lift of (0 1) squares to +1, so add z
    ident = (pm.identity(n), 0)
    z = (pm.identity(n), 1)
    cover = FiniteGroup(gens + [z], spin_mul, ident, f"2.S{n}")
    return CentralExtension(cover, base, lambda x: x[0], z, f"2.S{n} (transpositions split)")


_SPIN = {}


def build_spin_cover_s7():
    if N not in _SPIN:
        _SPIN[N] = build_spin_cover(N)
    return _SPIN[N]


def lift(g, sign=0):
    return (tuple(g), sign)
