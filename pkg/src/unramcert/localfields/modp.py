"""Polynomials modulo p, their factorization, and Frobenius cycle types."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from ..exactalg import ffield as ff
from ..exactalg import poly as P


class NotSquarefree(ValueError):
    """f is not squarefree modulo p, so p may ramify."""


@dataclass(frozen=True)
class PolyModP:
    p: int
    coeffs: tuple

    @classmethod
    def from_int_poly(cls, f, p):
        return cls(p, P.trim(c % p for c in f))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def field(self):
        return ff.GF(self.p)

    def __mul__(self, other):
        F = self.field()
        return PolyModP(self.p, ff.pmul(F, self.coeffs, other.coeffs))

    def is_irreducible(self):
        return ff.is_irreducible(self.field(), self.coeffs)


def format_cycle_type(ct):
    """Render a cycle type like (2, 2, 2, 1, 1) as '2^3.1^2'."""
    counts = Counter(ct)
    parts = []
    for length in sorted(counts, reverse=True):
        k = counts[length]
        parts.append(f"{length}" if k == 1 else f"{length}^{k}")
    return ".".join(parts)


def cycle_type_key(ct):
    return tuple(sorted(ct, reverse=True))


def factor_mod_p(f):
    """Monic irreducible factors [(PolyModP, multiplicity)] of a nonzero PolyModP.

    The product of the factors times the leading coefficient of f equals f.
    """
    if not f.coeffs:
        raise ValueError("cannot factor the zero polynomial")
    F = f.field()
    _, fs = ff.factor(F, f.coeffs)
    return [(PolyModP(f.p, g), m) for g, m in fs]


def frobenius_cycle_type(f, p):
    """Degrees of the irreducible factors of f mod p, as a descending tuple.

    A simple root at infinity (degree drop by exactly one) contributes a
    fixed point; anything worse raises NotSquarefree.
    """
    f = P.primitive(f)
    fp = PolyModP.from_int_poly(f, p)
    drop = P.deg(f) - fp.degree
    if drop > 1:
        raise NotSquarefree(f"degree drops by {drop} modulo {p}")
    F = ff.GF(p)
    if fp.degree >= 1 and len(ff.pgcd(F, fp.coeffs, ff.pderiv(F, fp.coeffs))) > 1:
        raise NotSquarefree(f"not squarefree modulo {p}")
    degrees = [g.degree for g, _ in factor_mod_p(fp)] if fp.degree >= 1 else []
    degrees += [1] * drop
    return cycle_type_key(degrees)
