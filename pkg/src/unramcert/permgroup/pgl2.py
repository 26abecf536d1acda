"""2x2 matrices over F_q and the action of PGL_2(q) on the projective line.

Points of P^1(F_q) are numbered 0..q-1 for the residues and q for infinity.
"""
from __future__ import annotations

from dataclasses import dataclass

from .group import FiniteGroup, perm_group

Q = 7


@dataclass(frozen=True)
class Mat2:
    a: int
    b: int
    c: int
    d: int
    q: int = Q

    @classmethod
    def of(cls, a, b, c, d, q=Q):
        m = cls(a % q, b % q, c % q, d % q, q)
        if m.det == 0:
            raise ValueError("singular matrix")
        return m

    @property
    def det(self):
        return (self.a * self.d - self.b * self.c) % self.q

    def __mul__(self, o):
        q = self.q
        return Mat2(
            (self.a * o.a + self.b * o.c) % q,
            (self.a * o.b + self.b * o.d) % q,
            (self.c * o.a + self.d * o.c) % q,
            (self.c * o.b + self.d * o.d) % q,
            q,
        )

    def scalar(self, s):
        q = self.q
        return Mat2(self.a * s % q, self.b * s % q, self.c * s % q, self.d * s % q, q)

    def entries(self):
        return [self.a, self.b, self.c, self.d]

    def act(self, x):
        """Moebius action x -> (a x + b) / (c x + d) on points 0..q (q = infinity)."""
        q = self.q
        if x == q:
            return q if self.c == 0 else self.a * pow(self.c, -1, q) % q
        num = (self.a * x + self.b) % q
        den = (self.c * x + self.d) % q
        return q if den == 0 else num * pow(den, -1, q) % q

    def to_perm(self):
        return tuple(self.act(x) for x in range(self.q + 1))


def _mat_mul(x, y):
    return x * y


def mat2_identity(q=Q):
    return Mat2(1, 0, 0, 1, q)


def matrix_group(gens, name="", q=Q):
    return FiniteGroup(gens, _mat_mul, mat2_identity(q), name)


def is_square_mod(x, q=Q):
    x %= q
    return x != 0 and pow(x, (q - 1) // 2, q) == 1


class PGL2Action:
    """PGL_2(q) as a permutation group on q+1 points with a PSL_2 predicate."""

    def __init__(self, q=Q):
        self.q = q
        gens = [Mat2.of(1, 1, 0, 1, q), Mat2.of(0, -1, 1, 0, q), Mat2.of(_nonsquare(q), 0, 0, 1, q)]
        self.group = perm_group([m.to_perm() for m in gens], q + 1, f"PGL2({q})")
        # determinant square class of each element, from any matrix representative
        self._det_class = {}
        for a in range(q):
            for b in range(q):
                for c in range(q):
                    for d in range(q):
                        if (a * d - b * c) % q:
                            m = Mat2(a, b, c, d, q)
                            self._det_class.setdefault(m.to_perm(), is_square_mod(m.det, q))
        self.psl = perm_group([m.to_perm() for m in gens[:2]], q + 1, f"PSL2({q})")

    def in_psl(self, g):
        return self._det_class[g]

    def perm_of(self, m):
        return m.to_perm()


def _nonsquare(q):
    return next(x for x in range(2, q) if not is_square_mod(x, q))


_PGL = {}


def pgl2_action(q=Q):
    if q != Q:
        raise ValueError("only q = 7 is instantiated")
    if q not in _PGL:
        _PGL[q] = PGL2Action(q)
    return _PGL[q]


def sl2(q=Q):
    return matrix_group([Mat2.of(1, 1, 0, 1, q), Mat2.of(0, -1, 1, 0, q)], f"SL2({q})", q)


def det_pm1_group(q=Q):
    """Matrices of determinant +1 or -1 in GL_2(q)."""
    return matrix_group([Mat2.of(1, 1, 0, 1, q), Mat2.of(0, -1, 1, 0, q), Mat2.of(1, 0, 0, -1, q)], f"GL2({q})_det=+-1", q)


def outer_involutions(P):
    """Involutions of PGL_2 with cycle type (2^3.1^2) outside PSL_2."""
    from . import perm as pm

    q = P.q
    want = (2,) * ((q - 1) // 2) + (1, 1)
    return [g for g in P.group if pm.cycle_type(g) == want and not P.in_psl(g)]
