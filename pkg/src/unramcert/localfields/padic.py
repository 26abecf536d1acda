"""(e, f) data of the factors of an integer polynomial over Q_p.

Roots are grouped by their reduction mod p. A simple root of f mod p
gives an unramified factor directly (Hensel). A repeated root phi is
handled in the unramified extension W = Z_p[y]/(Phi) where Phi lifts phi:
shift X -> y + X, read off the Newton polygon of the shifted polynomial on
the roots of positive valuation, and factor each residual polynomial over
the residue field F_p[y]/(phi). A repeated linear residual factor on an
integral slope is resolved by recentring and recursing. Every other
degenerate situation raises instead of guessing.

Coefficients are only known modulo p^N, so a coefficient that vanishes
mod p^N has unknown valuation (at least N). Whenever such a coefficient
could move the polygon, PrecisionExhausted is raised.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from ..exactalg import ffield as ff
from ..exactalg import poly as P
from ..exactalg.qfactor import hensel_lift

DEFAULT_PRECISION = 32
PRECISION_CAP = 512
MAX_DEPTH = 64


class PrecisionExhausted(ArithmeticError):
    pass


class WildUnsupported(ArithmeticError):
    """A ramification index divisible by p showed up in a degenerate polygon."""


class IrregularPolygon(ArithmeticError):
    """A residual polynomial has a repeated factor the routine cannot resolve."""


@dataclass(frozen=True)
class LocalData:
    p: int
    entries: tuple  # sorted ((e, f), ...)

    @classmethod
    def build(cls, p, entries):
        return cls(p, tuple(sorted(entries)))

    def degree(self):
        return sum(e * f for e, f in self.entries)

    def is_unramified(self):
        return all(e == 1 for e, _ in self.entries)

    def residue_degrees(self):
        return tuple(sorted((f for _, f in self.entries), reverse=True))

    def to_json(self):
        return {"p": self.p, "entries": [[e, f] for e, f in self.entries]}


def _vp(n, p):
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


class _Ring:
    """Z_p[y]/(Phi) modulo p^N; elements are d-tuples of ints in [0, p^N)."""

    def __init__(self, p, N, phi):
        self.p, self.N = p, N
        self.m = p**N
        self.phi = tuple(int(c) % p for c in phi)
        self.d = len(self.phi) - 1
        self.F = ff.GF(p, self.phi) if self.d > 1 else ff.GF(p)

    def const(self, c):
        return (c % self.m,) + (0,) * (self.d - 1)

    def add(self, a, b):
        return tuple((x + y) % self.m for x, y in zip(a, b))

    def mul(self, a, b):
        d, m = self.d, self.m
        if d == 1:
            return (a[0] * b[0] % m,)
        out = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        phi = self.phi
        for i in range(2 * d - 2, d - 1, -1):
            c = out[i] % m
            if c:
                for j in range(d + 1):
                    out[i - d + j] -= c * phi[j]
        return tuple(c % m for c in out[:d])

    def val(self, a):
        """Valuation, or None if a vanishes modulo p^N."""
        vs = [_vp(c, self.p) for c in a if c]
        return min(vs) if vs else None

    def divp(self, a, v):
        q = self.p**v
        return tuple(c // q for c in a)

    def scalep(self, a, v):
        q = self.p**v
        return tuple(c * q % self.m for c in a)

    def residue(self, a):
        if self.d == 1:
            return a[0] % self.p
        return self.F.elt([c % self.p for c in a])

    def lift(self, r):
        if self.d == 1:
            return (r,)
        r = tuple(r)
        return r + (0,) * (self.d - len(r))

    def center(self):
        """The lift y of the root of phi (for d = 1 just -phi_0)."""
        if self.d == 1:
            return self.const(-self.phi[0])
        return (0, 1) + (0,) * (self.d - 2)

    def substitute(self, g, a, b):
        """Coefficients of g(a + b*Y) as a polynomial in Y."""
        out = []
        lin = [a, b]
        for c in reversed(g):
            # out = out * (a + bY) + c
            new = [self.const(0)] * (len(out) + 1)
            for i, x in enumerate(out):
                new[i] = self.add(new[i], self.mul(x, lin[0]))
                new[i + 1] = self.add(new[i + 1], self.mul(x, lin[1]))
            new[0] = self.add(new[0], c)
            out = new
        return out


def _lower_hull(points):
    hull = []
    for pt in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    return hull


def _cluster(R, g, depth=0):
    """(e, f) pairs (f relative to the ring's residue field) of the roots of
    positive valuation of g, a polynomial over R."""
    if depth > MAX_DEPTH:
        raise PrecisionExhausted("root cluster did not separate")
    vals = [R.val(c) for c in g]
    known = [v for v in vals if v is not None]
    if not known:
        raise PrecisionExhausted("all coefficients vanish at this precision")
    vmin = min(known)
    m = vals.index(vmin)
    if m == 0:
        return []
    if vals[0] is None:
        raise PrecisionExhausted("constant term vanishes at this precision")
    pts = [(j, vals[j]) for j in range(m + 1) if vals[j] is not None]
    hull = _lower_hull(pts)
    # an unknown coefficient sits at height >= N; it is harmless iff the hull
    # passes strictly below N there
    for j in range(1, m):
        if vals[j] is None:
            for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
                if x1 <= j <= x2:
                    if Fraction(y1) + Fraction(y2 - y1, x2 - x1) * (j - x1) >= R.N:
                        raise PrecisionExhausted("unknown coefficient may touch the polygon")
    F = R.F
    out = []
    for (j0, v0), (j1, v1) in zip(hull, hull[1:]):
        length, drop = j1 - j0, v0 - v1
        k = gcd(length, drop)
        e, h = length // k, drop // k
        residual = []
        for i in range(k + 1):
            j = j0 + i * e
            if vals[j] is not None and vals[j] == v0 - i * h:
                residual.append(R.residue(R.divp(g[j], vals[j])))
            else:
                residual.append(F.zero)
        residual = ff.ptrim(F, residual)
        _, factors = ff.factor(F, residual)
        for psi, mult in factors:
            r = len(psi) - 1
            if mult == 1:
                out.append((e, r))
            elif e == 1 and r == 1:
                rho = F.neg(psi[0])
                a = R.scalep(R.lift(rho), h)
                b = R.scalep(R.const(1), h)
                sub = R.substitute(g, a, b)
                out.extend(_cluster(R, sub, depth + 1))
            elif e % R.p == 0:
                raise WildUnsupported(f"wild index {e} with repeated residual factor at p={R.p}")
            else:
                raise IrregularPolygon(f"repeated residual factor of degree {r} on slope {h}/{e}")
    return out


def hensel_split(f, p, N):
    """Lift f = lc * prod(phi_i^m_i) mod p to monic coprime factors mod p^N.

    Returns [(phi_i, m_i, lifted factor)]; f must not drop degree mod p.
    """
    f = P.primitive(f)
    if f[-1] % p == 0:
        raise ValueError("leading coefficient divisible by p")
    F = ff.GF(p)
    _, fs = ff.factor(F, ff.from_ints(F, f))
    blocks = [_ppow(F, g, m) for g, m in fs]
    lifted = hensel_lift(f, blocks, p, N)
    return [(g, m, tuple(l)) for (g, m), l in zip(fs, lifted)]


def _ppow(F, g, m):
    out = (F.one,)
    for _ in range(m):
        out = ff.pmul(F, out, g)
    return out


def _invariants_at(f, p, N):
    F = ff.GF(p)
    n = P.deg(f)
    fbar = ff.from_ints(F, f)
    drop = n - (len(fbar) - 1)
    entries = []
    if drop == 1:
        entries.append((1, 1))
    elif drop > 1:
        # roots at infinity: the cluster at 0 of the reversed polynomial
        R = _Ring(p, N, (0, 1))
        rev = [R.const(c) for c in P.reverse(f)]
        entries.extend(_cluster(R, rev))
    if len(fbar) > 1:
        _, fs = ff.factor(F, fbar)
        for phi, mult in fs:
            d = len(phi) - 1
            if mult == 1:
                entries.append((1, d))
                continue
            R = _Ring(p, N, phi)
            g = [R.const(c) for c in f]
            g = R.substitute(g, R.center(), R.const(1))
            entries.extend((e, r * d) for e, r in _cluster(R, g))
    total = sum(e * r for e, r in entries)
    if total != n:
        raise PrecisionExhausted(f"found degree {total} of {n}; precision too low")
    return LocalData.build(p, entries)


def local_invariants(f, p, precision=None):
    """LocalData of a squarefree integer polynomial f over Q_p.

    With no explicit precision, start at max(32, 2 v_p(disc) + 10) and
    double up to PRECISION_CAP on PrecisionExhausted.
    """
    f = P.primitive(f)
    if P.deg(f) < 1:
        raise ValueError("need a nonconstant polynomial")
    if not P.is_squarefree(f):
        raise ValueError("polynomial is not squarefree over Q")
    if precision is not None:
        return _invariants_at(f, p, precision)
    disc = P.discriminant(f)
    N = max(DEFAULT_PRECISION, 2 * _vp(disc, p) + 10)
    while True:
        try:
            return _invariants_at(f, p, N)
        except PrecisionExhausted:
            if N >= PRECISION_CAP:
                raise
            N = min(2 * N, PRECISION_CAP)
