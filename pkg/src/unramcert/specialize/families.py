"""The concrete families: the degree-8 PGL_2(7) family and the degree-7 S_7 family."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..exactalg import poly as P
from .sheet import CoverSheet, branch_points, monomial_pullback

# 7^3 X^7 (X + 7) - t (X^2 + X + 7)
BASE_SL27 = ((0, 0, 0, 0, 0, 0, 0, 7**4, 7**3), (-7, -1, -1))
# X^7 - 7 t (X - 1)
BASE_2A7 = ((0, 0, 0, 0, 0, 0, 0, 1), (7, -7))

SL27_EXCEPTIONAL = frozenset({2, 3, 7, "inf"})
T0 = Fraction(-(7**10), 108)
T3 = Fraction(7**6, 6**6)
BETA = 3


def f_literal(u):
    """(7u^2)^3 X^7 (X + 7) - (X^2 + X + 7) at an integer u."""
    c = (7 * u * u) ** 3
    return P.trim((-7, -1, -1, 0, 0, 0, 0, 7 * c, c))


def f_literal_bipoly():
    """The same polynomial as a BiPoly in (u, X)."""
    rows = [(-7, -1, -1)] + [()] * 5 + [(0, 0, 0, 0, 0, 0, 0, 7**4, 7**3)]
    return P.bi_trim(rows)


def chain_sl27():
    """F(u, X) from the base family via t = 1/s^2 and then s = u^3."""
    f_s = P.substitute_t(BASE_SL27, (1,), (0, 0, 1))
    return P.substitute_t(f_s, (0, 0, 0, 1), (1,))


@lru_cache(maxsize=None)
def base_sl27_sheet():
    return CoverSheet("PGL2(7) base", BASE_SL27, 8, branch_points(BASE_SL27), "PGL2(7)", SL27_EXCEPTIONAL)


@lru_cache(maxsize=None)
def f_family_sheet():
    """Pullback along t = u^-6, i.e. the two steps t = 1/s^2 and s = u^3."""
    return monomial_pullback(base_sl27_sheet(), 1, -6, "F-family", chain_sl27(), SL27_EXCEPTIONAL)


@lru_cache(maxsize=None)
def base_2a7_sheet():
    return CoverSheet("S7 base", BASE_2A7, 7, branch_points(BASE_2A7), "S7", frozenset())


def chain_2a7():
    """3 X^7 - 7 s^2 (X - 1): the base family at t = s^2 / 3."""
    return P.substitute_t(BASE_2A7, (0, 0, 1), (BETA,))


@lru_cache(maxsize=None)
def s_family_sheet():
    return monomial_pullback(base_2a7_sheet(), Fraction(1, BETA), 2, "S7 pulled back", chain_2a7(), frozenset())


FAMILIES = {
    "sl27-base": base_sl27_sheet,
    "sl27": f_family_sheet,
    "2a7-base": base_2a7_sheet,
    "2a7": s_family_sheet,
}


@lru_cache(maxsize=None)
def sl27_inertia_data():
    """(G, tau, centralizer, D_ti) for the (2^3.1^2) branch point.

    D_ti = <tau, rho> with rho of order 3 in the centralizer of tau: the
    residue extension over the pulled-back branch points is cyclic of order 3.
    """
    from ..permgroup import pgl2

    P_ = pgl2.pgl2_action()
    G = P_.group
    tau = pgl2.Mat2.of(1, 0, 0, -1).to_perm()
    C = G.centralizer(tau)
    rho = next(g for g in C if G.element_order(g) == 3)
    return G, tau, C, G.subgroup([tau, rho], "C6")


@lru_cache(maxsize=None)
def s7_inertia_data():
    """(S7, (0 1), centralizer, <(0 1)> x Alt{2..6})."""
    from ..permgroup import perm as pm
    from ..permgroup.group import alternating_group, symmetric_group

    G = symmetric_group(7)
    tau = pm.from_cycles(7, (0, 1))
    C = G.centralizer(tau)
    A = alternating_group(range(2, 7), 7)
    return G, tau, C, G.subgroup([tau] + list(A.gens), "C2xA5")
