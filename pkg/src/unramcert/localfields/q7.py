"""Root counting over Z_7[sqrt 7].

Elements are a + b*pi with pi = sqrt 7, known modulo pi^K; valuations are
normalized so that v(pi) = 1. Roots are isolated residue class by residue
class: a simple root of the reduction mod pi lifts uniquely (Newton), a
repeated one is zoomed into with X = r + pi*Y.
"""
from __future__ import annotations

from dataclasses import dataclass

from .padic import PrecisionExhausted

P7 = 7
PI2 = 7  # pi^2
DEFAULT_PRECISION = 16
PRECISION_CAP = 64


def _v7(n):
    v = 0
    while n % 7 == 0:
        n //= 7
        v += 1
    return v


def _moduli(k):
    # pi^k | a + b*pi  <=>  7^ceil(k/2) | a  and  7^floor(k/2) | b
    return 7 ** ((k + 1) // 2), 7 ** (k // 2)


@dataclass(frozen=True)
class RamQuadElt:
    a: int
    b: int
    prec: int  # known modulo pi^prec

    @classmethod
    def make(cls, a, b, prec):
        ma, mb = _moduli(prec)
        return cls(a % ma, b % mb, prec)

    def __add__(self, o):
        return RamQuadElt.make(self.a + o.a, self.b + o.b, min(self.prec, o.prec))

    def __sub__(self, o):
        return RamQuadElt.make(self.a - o.a, self.b - o.b, min(self.prec, o.prec))

    def __mul__(self, o):
        # product precision: v(x)+prec(y) and v(y)+prec(x)
        vx, vy = self.valuation(), o.valuation()
        prec = min(self.prec + (vy if vy is not None else o.prec), o.prec + (vx if vx is not None else self.prec))
        return RamQuadElt.make(self.a * o.a + PI2 * self.b * o.b, self.a * o.b + self.b * o.a, prec)

    def is_zero(self):
        return self.a == 0 and self.b == 0

    def valuation(self):
        """v with v(pi) = 1, or None if the element vanishes at its precision."""
        if self.is_zero():
            return None
        va = 2 * _v7(self.a) if self.a else None
        vb = 2 * _v7(self.b) + 1 if self.b else None
        return min(v for v in (va, vb) if v is not None)

    def div_pi(self, k=1):
        """Exact division by pi^k; the element must have valuation >= k."""
        a, b = self.a, self.b
        for _ in range(k):
            if a % 7:
                raise ValueError("not divisible by pi")
            a, b = b, a // 7
        return RamQuadElt.make(a, b, self.prec - k)

    def residue(self):
        return self.a % 7

    def inverse(self):
        """Inverse of a unit: (a - b pi) / (a^2 - 7 b^2)."""
        if self.a % 7 == 0:
            raise ZeroDivisionError("not a unit")
        norm_inv = pow(self.a * self.a - 7 * self.b * self.b, -1, 7 ** max(self.prec, 1))
        return RamQuadElt.make(self.a * norm_inv, -self.b * norm_inv, self.prec)


def _const(c, prec):
    return RamQuadElt.make(c, 0, prec)


def _evaluate(g, x):
    acc = _const(0, g[0].prec)
    for c in reversed(g):
        acc = acc * x + c
    return acc


def _derivative(g):
    return [c * _const(i, c.prec) for i, c in enumerate(g)][1:]


def _substitute(g, r, prec):
    """Coefficients of g(r + pi*Y)."""
    lin = (_const(r, prec), RamQuadElt.make(0, 1, prec))
    out = []
    zero = _const(0, prec)
    for c in reversed(g):
        new = [zero] * (len(out) + 1)
        for i, x in enumerate(out):
            new[i] = new[i] + x * lin[0]
            new[i + 1] = new[i + 1] + x * lin[1]
        new[0] = new[0] + c
        out = new
    return out


def _newton(g, r, steps=8):
    x = _const(r, g[0].prec)
    dg = _derivative(g)
    for _ in range(steps):
        fx = _evaluate(g, x)
        if fx.is_zero():
            break
        x = x - fx * _evaluate(dg, x).inverse()
    return x


def _reduced_roots(g):
    """Roots in F_7 of g mod pi, with multiplicities."""
    red = [c.residue() for c in g]
    while red and red[-1] == 0:
        red.pop()
    out = []
    for r in range(7):
        m = 0
        h = list(red)
        while len(h) > 1:
            # synthetic division by (X - r)
            q = [0] * (len(h) - 1)
            acc = 0
            for i in range(len(h) - 1, -1, -1):
                acc = (acc * r + h[i]) % 7
                if i:
                    q[i - 1] = acc
            if acc:
                break
            m += 1
            h = q
        if m:
            out.append((r, m))
    return out


def _count_roots(g, depth=0):
    """Number of distinct roots of g in Z_7[pi], plus their approximations."""
    vals = [c.valuation() for c in g]
    known = [v for v in vals if v is not None]
    if not known:
        raise PrecisionExhausted("polynomial vanishes at this precision")
    v = min(known)
    g = [c.div_pi(v) if c.valuation() is not None else _const(0, c.prec - v) for c in g]
    if min(c.prec for c in g) < 2 or depth > 32:
        raise PrecisionExhausted("ran out of pi-adic precision")
    roots = []
    for r, m in _reduced_roots(g):
        if m == 1:
            roots.append(_newton(g, r))
        else:
            prec = min(c.prec for c in g)
            sub = _substitute(g, r, prec)
            for y in _count_roots(sub, depth + 1):
                roots.append(_const(r, y.prec + 1) + RamQuadElt.make(0, 1, y.prec + 1) * y)
    return roots


def scaled_polynomial(u0, prec):
    """X^7 (X + 7 pi u0) - (X^2 + pi u0 X + 49 u0^2) over Z_7[pi]."""
    c = lambda a, b=0: RamQuadElt.make(a, b, prec)
    return [c(-49 * u0 * u0), c(0, -u0), c(-1), c(0), c(0), c(0), c(0), c(0, 7 * u0), c(1)]


def q7_roots(u0, precision=DEFAULT_PRECISION):
    return _count_roots(scaled_polynomial(u0, precision))


def q7_sqrt7_split_check(u0, precision=DEFAULT_PRECISION, cap=PRECISION_CAP):
    """True iff the degree-8 polynomial has 8 distinct roots in Q_7(sqrt 7).

    Precision (in powers of sqrt 7) is doubled up to ``cap`` when the root
    isolation runs out; past the cap PrecisionExhausted propagates.
    """
    if u0 % 2 == 0:
        raise ValueError("u0 must be odd")
    prec = precision
    while True:
        try:
            return len(q7_roots(u0, prec)) == 8
        except PrecisionExhausted:
            if prec >= cap:
                raise
            prec = min(2 * prec, cap)
