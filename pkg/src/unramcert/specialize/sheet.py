"""Branch points of a polynomial cover of the t-line and their inertia data.

At a rational place t0 (or infinity) write the polynomial in the local
parameter s. A root xi of f(t0, X) of multiplicity m whose s-derivative
does not vanish there gives a single m-cycle: the Newton polygon in (Y, s)
after X = xi + Y is the single segment from (0, 1) to (m, 0). Roots that
run off to X = infinity are handled the same way in the reversed chart.
When the derivative condition fails the cycle type is left unresolved.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from ..exactalg import poly as P
from ..exactalg.integers import square_class
from ..exactalg.qfactor import factor_over_q


class InseparableFiber(ValueError):
    pass


@dataclass(frozen=True)
class BranchPoint:
    """A place of the t-line. ``minpoly`` is None for infinity."""

    minpoly: tuple | None
    cycle_type: tuple | None = None
    residue_square_class: int | None = None
    label: str = ""

    @property
    def is_infinity(self):
        return self.minpoly is None

    @property
    def is_rational(self):
        return self.minpoly is None or P.deg(self.minpoly) == 1

    @property
    def e(self):
        if self.cycle_type is None:
            return None
        return lcm(*self.cycle_type)

    def value(self):
        """The rational point as a Fraction (None for infinity)."""
        if self.minpoly is None or P.deg(self.minpoly) != 1:
            return None
        return Fraction(-self.minpoly[0], self.minpoly[1])

    def homogeneous(self):
        """Coefficients c_i of the form sum c_i A^i B^(d-i); infinity is B."""
        return (1, 0) if self.minpoly is None else tuple(self.minpoly)

    def homogeneous_value(self, a, b):
        return P.homogeneous_eval(self.homogeneous(), a, b)

    def to_json(self):
        return {
            "label": self.label,
            "homogeneous": [str(c) for c in self.homogeneous()],
            "cycle_type": list(self.cycle_type) if self.cycle_type else None,
            "e": self.e,
            "residue_square_class": self.residue_square_class,
        }


@dataclass(frozen=True)
class CoverSheet:
    name: str
    poly: tuple  # BiPoly in (t, X)
    degree: int
    branch_points: tuple
    group: str
    exceptional: frozenset = field(default_factory=frozenset)  # primes, plus "inf"

    def to_json(self):
        return {
            "name": self.name,
            "poly": P.bi_to_json(self.poly),
            "degree": self.degree,
            "group": self.group,
            "exceptional": sorted(str(x) for x in self.exceptional),
            "branch_points": [bp.to_json() for bp in self.branch_points],
        }


def cycle_power(ct, k):
    """Cycle type of tau^k given the cycle type of tau."""
    from math import gcd

    out = []
    for length in ct:
        g = gcd(length, k)
        out.extend([length // g] * g)
    return tuple(sorted(out, reverse=True))


def _local_chart(f, t0):
    """(g0, g1): f and its s-derivative at the place, as X-polynomials."""
    if t0 is None:
        rev = P.bi_reverse_t(f)
        g0 = rev[0] if rev else ()
        g1 = rev[1] if len(rev) > 1 else ()
        return P.trim(g0), P.trim(g1)
    t0 = Fraction(t0)
    n = P.bi_deg_x(f)
    g0, g1 = [], []
    for j in range(n + 1):
        c = P.bi_x_coefficient(f, j)
        g0.append(P.evaluate(c, t0) if c else 0)
        dc = P.derivative(c)
        g1.append(P.evaluate(dc, t0) if dc else 0)
    return P.trim(g0), P.trim(g1)


def _local_bivariate(f, t0, xi):
    """{(i, j): c} with f(t0 + s, xi + Y) = sum c s^i Y^j (t0 None: the chart s = 1/t).

    ``xi`` None means the cluster at X = infinity, read in the chart X = 1/Y.
    """
    rows = P.bi_reverse_t(f) if t0 is None else f
    n = P.bi_deg_x(f)
    out = {}
    for i, row in enumerate(rows):
        row = P.to_fractions(row)
        if xi is None:
            row = P.reverse(row, n)
        else:
            row = P.shift(row, Fraction(xi))
        if t0 is None or t0 == 0:
            terms = [((i, j), c) for j, c in enumerate(row)]
        else:
            # t^i = (t0 + s)^i
            binom = P.power((Fraction(t0), Fraction(1)), i)
            terms = [((k, j), b * c) for k, b in enumerate(binom) for j, c in enumerate(row)]
        for key, c in terms:
            if c:
                out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


def _newton_cycles(G, m):
    """Cycle lengths of the m roots in the cluster Y -> 0, or None if degenerate."""
    v = {}
    for (i, j), _ in G.items():
        if j <= m and (j not in v or i < v[j]):
            v[j] = i
    if 0 not in v or v.get(m) != 0:
        return None
    pts = sorted(v.items())
    hull = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    cycles = []
    for (j0, v0), (j1, v1) in zip(hull, hull[1:]):
        length, drop = j1 - j0, v0 - v1
        g = gcd(length, drop)
        e, h = length // g, drop // g
        residual = [G.get((v0 - k * h, j0 + k * e), 0) for k in range(g + 1)]
        if not P.is_squarefree(P.primitive(residual)):
            return None
        cycles += [e] * g
    return cycles


def local_cycle_type(f, t0):
    """Inertia cycle type over the rational place t0 (None = infinity).

    Returns None when the first Newton step does not settle it.
    """
    n = P.bi_deg_x(f)
    g0, g1 = _local_chart(f, t0)
    if not g0:
        raise InseparableFiber(f"f vanishes identically over t = {t0}")
    cycles = []
    for phi, mult in factor_over_q(P.primitive(g0)):
        if mult == 1:
            cycles += [1] * P.deg(phi)
        elif P.deg(phi) == 1:
            got = _newton_cycles(_local_bivariate(f, t0, Fraction(-phi[0], phi[1])), mult)
            if got is None:
                return None
            cycles += got
        elif g1 and not P.divides(phi, g1):
            cycles += [mult] * P.deg(phi)
        else:
            return None
    k_inf = n - P.deg(g0)
    if k_inf == 1:
        cycles.append(1)
    elif k_inf > 1:
        got = _newton_cycles(_local_bivariate(f, t0, None), k_inf)
        if got is None:
            return None
        cycles += got
    return tuple(sorted(cycles, reverse=True))


def residue_square_class(f, t0):
    """Square class of the discriminant of the largest irreducible factor of f(t0, X)."""
    g0 = P.primitive(_local_chart(f, t0)[0])
    factors = factor_over_q(g0)
    big = max(factors, key=lambda fm: (P.deg(fm[0]), fm[1]))[0]
    if P.deg(big) < 2:
        return None
    return square_class(P.discriminant(big))


def _point_minpoly(t0):
    t0 = Fraction(t0)
    return (-t0.numerator, t0.denominator)


def _label(t0):
    return "inf" if t0 is None else str(Fraction(t0))


def branch_points(f):
    """Branch points of the cover X -> t defined by f(t, X).

    Finite candidates are the irreducible factors of disc_X f; infinity is a
    candidate always. Rational candidates whose computed inertia is trivial
    are dropped; non-rational ones are kept with unresolved cycle type.
    """
    disc = P.discriminant_in_t(f)
    if not disc:
        raise InseparableFiber("f is inseparable over Q(t)")
    out = []
    for phi, _ in factor_over_q(P.primitive(P.squarefree_part(disc))):
        if P.deg(phi) == 1:
            t0 = Fraction(-phi[0], phi[1])
            ct = local_cycle_type(f, t0)
            if ct is not None and all(c == 1 for c in ct):
                continue
            rsc = residue_square_class(f, t0) if ct is not None else None
            out.append(BranchPoint(tuple(phi), ct, rsc, _label(t0)))
        else:
            out.append(BranchPoint(tuple(phi), None, None, f"root of {P.format_poly(phi, 't')}"))
    ct = local_cycle_type(f, None)
    if ct is None or any(c > 1 for c in ct):
        out.append(BranchPoint(None, ct, None, "inf"))
    return tuple(out)


def monomial_pullback(sheet, c, k, name, poly=None, exceptional=None):
    """Sheet of the pullback along t = c * u^k (k a nonzero integer).

    Over t = 0 and t = infinity the inertia generator is raised to the
    |k|-th power; elsewhere the pullback is unramified and inertia is
    inherited by every point above.
    """
    c = Fraction(c)
    out = []
    for bp in sheet.branch_points:
        if bp.cycle_type is None:
            raise ValueError("pullback needs resolved cycle types")
        val = bp.value()
        if bp.is_infinity or val == 0:
            ct = cycle_power(bp.cycle_type, abs(k))
            if all(x == 1 for x in ct):
                continue
            over_zero = (val == 0) == (k > 0)
            mp = (0, 1) if over_zero else None
            out.append(BranchPoint(mp, ct, bp.residue_square_class, "0" if over_zero else "inf"))
            continue
        if not bp.is_rational:
            raise ValueError("pullback over non-rational points is not supported")
        # c u^k = val  or  val u^|k| = c
        if k > 0:
            g = P.primitive(tuple([-val] + [0] * (k - 1) + [c]))
        else:
            g = P.primitive(tuple([-c] + [0] * (-k - 1) + [val]))
        for phi, _ in factor_over_q(g):
            label = _label(Fraction(-phi[0], phi[1])) if P.deg(phi) == 1 else f"root of {P.format_poly(phi, 'u')}"
            out.append(BranchPoint(tuple(phi), bp.cycle_type, bp.residue_square_class, label))
    if poly is None:
        u_k = P.monomial(1, abs(k))
        if k > 0:
            poly = P.substitute_t(sheet.poly, P.scale(u_k, c.numerator), (c.denominator,))
        else:
            poly = P.substitute_t(sheet.poly, (c.numerator,), P.scale(u_k, c.denominator))
    return CoverSheet(
        name,
        poly,
        sheet.degree,
        tuple(out),
        sheet.group,
        frozenset(exceptional if exceptional is not None else sheet.exceptional),
    )
