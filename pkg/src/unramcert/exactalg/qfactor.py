"""Factorization of integer polynomials over Q (Zassenhaus, small degree).

Squarefree split over Q, factorization modulo a good prime, linear Hensel
lifting of the modular factors, and subset recombination. Subset search is
exhaustive, which is fine below the degree cap.
"""
from __future__ import annotations

import math
from itertools import combinations

from . import ffield as ff
from . import poly as P
from .integers import small_primes

DEGREE_CAP = 10


class DegreeCapExceeded(ValueError):
    pass


def _symmetric(c, m):
    c %= m
    return c - m if c > m // 2 else c


def _mod_poly(a, m):
    return P.trim(c % m for c in a)


def _mul_mod(a, b, m):
    return _mod_poly(P.mul(a, b), m)


def _divmod_monic(a, b, m):
    """Division by a monic polynomial modulo m."""
    a = [c % m for c in a]
    db = len(b) - 1
    q = [0] * max(len(a) - db, 0)
    for i in range(len(a) - db - 1, -1, -1):
        c = a[i + db] % m
        q[i] = c
        if c:
            for j in range(db + 1):
                a[i + j] = (a[i + j] - c * b[j]) % m
    return P.trim(q), P.trim(a[:db])


def _bezout_mod_p(a, b, p):
    """s, t with s a + t b = 1 mod p for coprime a, b."""
    F = ff.GF(p)
    r0, r1 = ff.from_ints(F, a), ff.from_ints(F, b)
    s0, s1 = (1,), ()
    t0, t1 = (), (1,)
    while r1:
        q, r = ff.pdivmod(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, ff.psub(F, s0, ff.pmul(F, q, s1))
        t0, t1 = t1, ff.psub(F, t0, ff.pmul(F, q, t1))
    if len(r0) != 1:
        raise ValueError("factors are not coprime mod p")
    inv = F.inv(r0[0])
    return ff.pscale(F, s0, inv), ff.pscale(F, t0, inv)


def hensel_lift(f, factors, p, k):
    """Lift a factorization f = lc(f) * prod(factors) mod p to modulo p^k.

    ``factors`` are monic and pairwise coprime modulo p. Returns monic lifts.
    Lifting is done by repeatedly splitting off the first factor.
    """
    if len(factors) == 1:
        m = p**k
        inv = pow(f[-1], -1, m)
        return [_mod_poly((c * inv for c in f), m)]
    a = factors[0]
    rest = P.prod(factors[1:])
    b = _mod_poly(P.scale(rest, f[-1]), p)
    a_k, b_k = _lift_pair(f, a, b, p, k)
    m = p**k
    inv = pow(f[-1], -1, m)
    b_monic = _mod_poly((c * inv for c in b_k), m)
    return [a_k] + hensel_lift_monic(b_monic, factors[1:], p, k)


def hensel_lift_monic(g, factors, p, k):
    if len(factors) == 1:
        return [g]
    return hensel_lift(g, factors, p, k)


def _lift_pair(f, a, b, p, k):
    """Linear Hensel lifting of f = a * b mod p with a monic."""
    s, t = _bezout_mod_p(a, b, p)
    s, t = tuple(s), tuple(t)
    mod = p
    for _ in range(1, k):
        err = P.sub(f, P.mul(a, b))
        assert all(c % mod == 0 for c in err)
        e = _mod_poly((c // mod for c in err), p)
        q, r = _divmod_monic(P.mul(t, e), a, p)
        da = r
        db = _mod_poly(P.add(P.mul(s, e), P.mul(q, b)), p)
        a = P.add(a, P.scale(da, mod))
        b = P.add(b, P.scale(db, mod))
        mod *= p
        a = _mod_poly(a, mod)
        b = _mod_poly(b, mod)
    return a, b


def _mignotte_bound(f):
    n = P.deg(f)
    norm = math.isqrt(sum(c * c for c in f)) + 1
    return (1 << n) * norm * abs(f[-1])


def _good_prime(f):
    """Smallest prime not dividing lc(f) with f squarefree mod p; prefer few factors."""
    best = None
    tried = 0
    for p in small_primes():
        if f[-1] % p == 0:
            continue
        F = ff.GF(p)
        fp = ff.from_ints(F, f)
        if len(ff.pgcd(F, fp, ff.pderiv(F, fp))) > 1:
            continue
        _, fs = ff.factor(F, fp)
        if best is None or len(fs) < len(best[1]):
            best = (p, [tuple(g) for g, _ in fs])
        tried += 1
        if tried >= 5 or len(fs) == 1:
            break
    return best


def _factor_squarefree(f):
    """Irreducible factors of a primitive squarefree integer polynomial."""
    if P.deg(f) <= 1:
        return [f]
    p, modular = _good_prime(f)
    if len(modular) == 1:
        return [f]
    bound = 2 * _mignotte_bound(f)
    k = 1
    while p**k <= bound:
        k += 1
    m = p**k
    lifted = hensel_lift(f, modular, p, k)
    found = []
    remaining = list(range(len(lifted)))
    g = f
    size = 1
    while 2 * size <= len(remaining):
        hit = False
        for subset in combinations(remaining, size):
            lead = g[-1]
            cand = (lead,)
            for i in subset:
                cand = _mul_mod(cand, lifted[i], m)
            cand = P.trim(_symmetric(c, m) for c in cand)
            cand = P.primitive(cand)
            q, r = P.divmod_q(g, cand)
            if not r and all(c.denominator == 1 for c in q):
                found.append(cand)
                g = P.primitive(q)
                remaining = [i for i in remaining if i not in subset]
                hit = True
                break
        if not hit:
            size += 1
    found.append(P.primitive(g))
    return found


def factor_over_q(f):
    """Factor an integer (or rational) polynomial into irreducibles over Q.

    Returns [(factor, multiplicity)] with primitive factors of positive
    leading coefficient, sorted by degree and coefficients. The product of
    the factors equals f up to a rational constant.
    """
    f = P.primitive(f)
    if P.deg(f) > DEGREE_CAP:
        raise DegreeCapExceeded(f"degree {P.deg(f)} exceeds cap {DEGREE_CAP}")
    if P.deg(f) < 1:
        return []
    out = []
    for g, mult in P.squarefree_decomposition(f):
        g = P.primitive(g)
        # pull out powers of X first so the mod-p step sees g(0) != 0
        while g[0] == 0:
            out.append(((0, 1), mult))
            g = g[1:]
        if P.deg(g) >= 1:
            for h in _factor_squarefree(g):
                out.append((h, mult))
    out.sort(key=lambda hm: (P.deg(hm[0]), hm[0], hm[1]))
    return out


def is_irreducible_over_q(f):
    fs = factor_over_q(f)
    return len(fs) == 1 and fs[0][1] == 1
