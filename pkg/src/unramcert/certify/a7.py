"""Setup checks for the 2.A7 construction from X^7 - 7t(X - 1)."""
from __future__ import annotations

from fractions import Fraction

from ..covers import build_spin_cover_s7, local_obstruction_check
from ..exactalg import poly as P
from ..exactalg.integers import factor_integer, is_rational_square, square_class
from ..exactalg.qfactor import factor_over_q
from ..localfields import local_invariants
from ..permgroup import perm as pm
from ..permgroup.group import symmetric_group
from ..specialize import T3, base_2a7_sheet, chain_2a7, s7_inertia_data, s_family_sheet
from .certificate import Certificate, CheckSpec, Timer, run_check
from .groupfacts import s7_centralizer_facts, spin_cover_facts

A7_CHECKS = (
    CheckSpec("branch-data", "branch points {0, inf, 7^6/6^6} with (7), (6.1), (2.1^5)", "specialize.branch_points"),
    CheckSpec("t3-square", "7^6/6^6 is a rational square", "exactalg.is_rational_square"),
    CheckSpec("residue-quintic", "f(t3, X) = c (6X - 7)^2 q(X), q irreducible quintic with disc in the class of 3", "exactalg.factor_over_q"),
    CheckSpec("centralizer", "centralizer of (1,2) in S7 is <(1,2)> x Sym{3..7}", "permgroup.centralizer"),
    CheckSpec("spin-lifts", "transpositions lift to involutions in the spin double cover of S7", "covers.lift_order"),
    CheckSpec("obstruction-table", "local obstruction vanishes for Frobenius phi or (1,2)phi iff phi is in Alt{3..7}", "covers.local_obstruction_check"),
    CheckSpec("pullback", "t = s^2/3 makes the residue field Q(sqrt 3) part of the base, leaving D = I x Alt{3..7}", "specialize.monomial_pullback"),
    CheckSpec("2a7-perfect", "preimage of A7 is perfect of order 5040 with one involution", "permgroup.is_perfect"),
)

OBSTRUCTION_PRIMES = (3, 5)


def _spec(ident):
    return next(s for s in A7_CHECKS if s.ident == ident)


def check_branch_data():
    sheet = base_2a7_sheet()
    got = {bp.label: bp.cycle_type for bp in sheet.branch_points}
    want = {"0": (7,), "inf": (6, 1), str(T3): (2, 1, 1, 1, 1, 1)}
    return got == want, {"branch_points": [bp.to_json() for bp in sheet.branch_points]}


def check_t3_square():
    return is_rational_square(T3), {"t3": str(T3), "sqrt": f"{7**3}/{6**3}"}


def check_residue_quintic():
    sheet = base_2a7_sheet()
    fiber = P.primitive(P.specialize(sheet.poly, T3))
    factors = factor_over_q(fiber)
    shape = sorted((P.deg(g), m) for g, m in factors)
    quintic = next((g for g, m in factors if P.deg(g) == 5 and m == 1), None)
    linear_ok = any(P.deg(g) == 1 and m == 2 and P.primitive(g) in ((-7, 6), (7, -6)) for g, m in factors)
    cls = square_class(P.discriminant(quintic)) if quintic else None
    bp = next(b for b in sheet.branch_points if b.value() == T3)
    ok = linear_ok and len(factors) == 2 and cls == 3 and bp.residue_square_class == 3
    return ok, {"fiber": P.to_json(fiber), "factor_shape": shape, "quintic_disc_class": cls}


def check_centralizer():
    facts = s7_centralizer_facts()
    return all(f.ok for f in facts), {"facts": [f.to_json() for f in facts]}


def check_spin_lifts():
    facts = [f for f in spin_cover_facts() if "lift" in f.name or "preimage" in f.name or "order" in f.name]
    return all(f.ok for f in facts), {"facts": [f.to_json() for f in facts]}


def obstruction_table():
    """Rows (phi, frobenius, q, unobstructed, phi_even) over phi in Sym{3..7}."""
    S = build_spin_cover_s7()
    tau = pm.from_cycles(7, (0, 1))
    rows = []
    for phi in symmetric_group(5, range(2, 7), 7):
        for frob in (phi, pm.mul(tau, phi)):
            for q in OBSTRUCTION_PRIMES:
                rows.append((phi, frob, q, local_obstruction_check(S, frob, tau, q), pm.sign(phi) == 1))
    return rows


def check_obstruction_table():
    rows = obstruction_table()
    ok = all(free == even for _, _, _, free, even in rows)
    phis = {r[0] for r in rows}
    free = {r[0] for r in rows if r[3]}
    return ok and len(phis) == 120, {
        "phi_count": len(phis),
        "unobstructed_phi_count": len(free),
        "mismatches": [[pm.format_cycles(p, 1), pm.format_cycles(f, 1), q] for p, f, q, u, e in rows if u != e],
    }


def check_pullback():
    sheet = s_family_sheet()
    over_t3 = [bp for bp in sheet.branch_points if bp.cycle_type == (2, 1, 1, 1, 1, 1)]
    ok = bool(over_t3)
    classes = []
    for bp in over_t3:
        field_class = square_class(P.discriminant(bp.minpoly)) if P.deg(bp.minpoly) == 2 else 1
        classes.append(field_class)
        ok = ok and field_class == bp.residue_square_class == 3
    D = s7_inertia_data()[3]
    ok = ok and D.order == 120
    return ok, {
        "points_over_t3": [bp.to_json() for bp in over_t3],
        "point_field_classes": classes,
        "decomposition_order": D.order,
    }


def check_perfect():
    facts = [f for f in spin_cover_facts() if f.name.startswith("2.A7")]
    return all(f.ok for f in facts), {"facts": [f.to_json() for f in facts]}


def sample(s):
    """Record data for the specialization at s (t = s^2/3); nothing here is asserted."""
    f = P.primitive(P.specialize(chain_2a7(), Fraction(s)))
    disc = P.discriminant(f)
    out = {"s": str(s), "poly": P.to_json(f), "disc_square_class": square_class(disc), "local_data": {}}
    for p, _ in factor_integer(abs(disc)).factors:
        try:
            ld = local_invariants(f, p)
            out["local_data"][str(p)] = [list(x) for x in ld.entries]
        except ArithmeticError as exc:
            out["local_data"][str(p)] = f"not determined: {exc}"
    return out


def certify_2a7_setup(t=None):
    cert = Certificate("2a7-setup", "generic" if t is None else f"s={t}")
    with Timer() as clock:
        for ident, fn in (
            ("branch-data", check_branch_data),
            ("t3-square", check_t3_square),
            ("residue-quintic", check_residue_quintic),
            ("centralizer", check_centralizer),
            ("spin-lifts", check_spin_lifts),
            ("obstruction-table", check_obstruction_table),
            ("pullback", check_pullback),
            ("2a7-perfect", check_perfect),
        ):
            run_check(cert, _spec(ident), fn)
        if t is not None:
            try:
                cert.auxiliary["sample"] = sample(t)
            except Exception as exc:
                cert.auxiliary["sample"] = {"error": f"{type(exc).__name__}: {exc}"}
    cert.wall_clock = clock.elapsed
    return cert
