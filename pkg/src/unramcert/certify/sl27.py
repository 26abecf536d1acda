"""Per-t certificate for the degree-8 family F(t, X) = (7t^2)^3 X^7 (X + 7) - (X^2 + X + 7)."""
from __future__ import annotations

import math

from ..covers import build_det_pm1_cover, lift_order, local_obstruction_check
from ..exactalg import poly as P
from ..exactalg.integers import BudgetExceeded, factor_integer, is_perfect_square, square_class, valuation
from ..exactalg.qfactor import factor_over_q
from ..localfields import factor_mod_p, frobenius_cycle_type, local_invariants, q7_sqrt7_split_check
from ..localfields.modp import PolyModP
from ..permgroup import perm as pm
from ..permgroup.pgl2 import pgl2_action
from ..specialize import (
    T0,
    admissible_candidates,
    base_sl27_sheet,
    chain_sl27,
    f_family_sheet,
    f_literal,
    f_literal_bipoly,
    kln_consistency,
    predict_ramification,
    sl27_inertia_data,
)
from ..specialize.predict import describe
from .certificate import Certificate, CheckSpec, Timer, run_check
from .groupfacts import det_cover_facts, subgroup_certificate

EXCEPTIONAL = (2, 3, 7)

SL27_CHECKS = (
    CheckSpec("construct", "F(t,X) from the base family via t = 1/s^2, s = u^3 matches the literal form", "exactalg.substitute_t"),
    CheckSpec("base-branch-data", "base family ramified at 0, inf, t0 with (7.1), (6.1^2), (2^3.1^2); f(t0,X) = quadratic x cubic^2", "specialize.branch_points"),
    CheckSpec("residue-quadratic", "residue quadratic at t0 has square class -3, equal to that of t0", "specialize.branch_points"),
    CheckSpec("disc-square", "disc_X F(t,X) / (-7 D) is a perfect square, D = 108 + 7^10 t^6", "exactalg.discriminant"),
    CheckSpec("frobenius-2", "F(t,X) irreducible mod 2, so Frobenius at 2 is an 8-cycle", "localfields.frobenius_cycle_type"),
    CheckSpec("subgroup-certificate", "no proper subgroup of PGL2(7) generated by (2^3.1^2)-involutions contains an 8-cycle", "permgroup.subgroup_generated_by_class_check"),
    CheckSpec("tame-primes", "primes of D and t outside {2,3,7}: local data admissible and unobstructed in the det +-1 cover", "localfields.local_invariants"),
    CheckSpec("prime-2", "F(t,X) separable mod 2", "localfields.frobenius_cycle_type"),
    CheckSpec("prime-3", "unramified at 3 if 3 does not divide t, else cyclic decomposition and no obstruction", "localfields.local_invariants"),
    CheckSpec("prime-7", "the scaled polynomial splits into distinct linear factors over Q_7(sqrt 7)", "localfields.q7_sqrt7_split_check"),
    CheckSpec("infinite-prime", "d < 0 and complex conjugation is a (2^3.1^2)-involution, which splits", "exactalg.real_root_count"),
    CheckSpec("cover-facts", "2B lifts to order 2; C2xC2 over 2B has dihedral preimage of order 8", "covers.subgroup_splits"),
)


def _spec(ident):
    return next(s for s in SL27_CHECKS if s.ident == ident)


def d_value(t):
    return 108 + 7**10 * t**6


def _ld_json(ld):
    return {"p": str(ld.p), "entries": [list(x) for x in ld.entries]}


def check_construct(t):
    chain = chain_sl27()
    F = f_literal(t)
    via_chain = P.specialize(chain, t)
    ok = chain == f_literal_bipoly() and via_chain == P.primitive(F)
    return ok, {"F": P.to_json(F), "chain_matches_literal": chain == f_literal_bipoly()}


def check_base_branch_data():
    sheet = base_sl27_sheet()
    got = {bp.label: bp.cycle_type for bp in sheet.branch_points}
    want = {"0": (7, 1), "inf": (6, 1, 1), str(T0): (2, 2, 2, 1, 1)}
    at_t0 = P.specialize(sheet.poly, T0)
    shape = sorted((P.deg(g), m) for g, m in factor_over_q(at_t0))
    ok = got == want and shape == [(2, 1), (3, 2)]
    return ok, {
        "branch_points": [bp.to_json() for bp in sheet.branch_points],
        "f_t0": P.to_json(at_t0),
        "f_t0_factor_shape": shape,
    }


def check_residue_quadratic():
    bp = next(b for b in base_sl27_sheet().branch_points if b.value() == T0)
    t0_class = square_class(T0)
    return bp.residue_square_class == -3 and t0_class == -3, {
        "residue_square_class": bp.residue_square_class,
        "t0_square_class": t0_class,
    }


def check_disc_square(t):
    F = f_literal(t)
    disc = P.discriminant(F)
    denom = -7 * d_value(t)
    q, r = divmod(disc, denom)
    ok = r == 0 and is_perfect_square(q)
    return ok, {"quotient_is_square": ok, "sqrt_quotient": str(math.isqrt(q)) if ok else None}


def check_frobenius_2(t):
    F = f_literal(t)
    ct = frobenius_cycle_type(F, 2)
    factors = factor_mod_p(PolyModP.from_int_poly(F, 2))
    in_pgl = any(pm.cycle_type(g) == (8,) for g in pgl2_action().group)
    return ct == (8,) and len(factors) == 1 and in_pgl, {"cycle_type": list(ct), "factors_mod_2": len(factors)}


def check_subgroup_certificate():
    ok, n = subgroup_certificate()
    return ok, {"subgroups_enumerated": n}


def _is_cyclic(H):
    return any(H.element_order(g) == H.order for g in H)


def _obstruction_report(ld, pool_name, power, q, with_matches=False):
    """Match observed local data to (D, I) candidates and check each for obstructions."""
    G, tau, C, Dti = sl27_inertia_data()
    pool = Dti.elements if pool_name == "D_ti" else C.elements
    cands = admissible_candidates(G, tau, power, pool, 8)
    ok, matches = kln_consistency(cands, ld)
    E = build_det_pm1_cover()
    unobstructed = [local_obstruction_check(E, c.decomposition[1], c.inertia[0], q) for c in matches]
    rep = {
        "local_data": _ld_json(ld),
        "admissible": ok,
        "candidates": [describe(c) for c in matches],
        "unobstructed": unobstructed,
    }
    good = ok and all(unobstructed)
    return (good, rep, matches) if with_matches else (good, rep)


def check_tame_primes(t):
    F = f_literal(t)
    preds = predict_ramification(f_family_sheet(), t)
    by_prime = {pr.p: pr for pr in preds}
    primes_t = [p for p, _ in factor_integer(t).factors] if abs(t) > 1 else []
    report = []
    ok = True
    for p in sorted(set(by_prime) | set(primes_t)):
        if p in EXCEPTIONAL:
            continue
        ld = local_invariants(F, p)
        pr = by_prime.get(p)
        if pr is None:
            # p divides t only: the pullback is unramified there
            good = ld.is_unramified()
            report.append({"p": str(p), "local_data": _ld_json(ld), "expected": "unramified", "ok": good})
        else:
            good, rep = _obstruction_report(ld, "D_ti", pr.multiplicity, p)
            rep.update({"p": str(p), "multiplicity": pr.multiplicity, "ok": good})
            report.append(rep)
        ok = ok and good
    return ok, {"primes": report}


def check_prime_2(t):
    F = f_literal(t)
    ct = frobenius_cycle_type(F, 2)  # raises NotSquarefree otherwise
    ld = local_invariants(F, 2)
    return ld.is_unramified(), {"cycle_type": list(ct), "local_data": _ld_json(ld)}


def check_prime_3(t):
    F = f_literal(t)
    ld = local_invariants(F, 3)
    if t % 3:
        return ld.is_unramified(), {"3_divides_t": False, "local_data": _ld_json(ld)}
    # 3 is exceptional: allow any Frobenius in the full centralizer
    power = valuation(d_value(t), 3)
    ok, rep, matches = _obstruction_report(ld, "centralizer", power, 3, with_matches=True)
    G = sl27_inertia_data()[0]
    cyclic = [_is_cyclic(G.subgroup(list(c.decomposition))) for c in matches]
    rep["decomposition_cyclic"] = cyclic
    rep["3_divides_t"] = True
    cyclic = any(cyclic)
    return ok and cyclic, rep


def check_prime_7(t):
    split = q7_sqrt7_split_check(t)
    evidence = {"splits_over_Q7_sqrt7": split}
    try:
        evidence["local_data_at_7"] = _ld_json(local_invariants(f_literal(t), 7))
    except ArithmeticError as exc:
        evidence["local_data_at_7"] = f"not determined: {exc}"
    return split, evidence


def check_infinite_prime(t):
    # the sign of d is the sign of -7 D, no factoring needed
    negative = -7 * d_value(t) < 0
    real = P.real_root_count(f_literal(t))
    conj_type = (2,) * ((8 - real) // 2) + (1,) * real
    E = build_det_pm1_cover()
    tau = next(g for g in E.base if pm.cycle_type(g) == conj_type and E.base.element_order(g) == 2)
    lo = lift_order(E, tau)[0]
    ok = negative and real == 2 and lo == 2
    return ok, {"d_negative": negative, "real_roots": real, "complex_conjugation_type": list(conj_type), "lift_order": lo}


def check_cover_facts():
    facts = det_cover_facts()
    return all(f.ok for f in facts), {"facts": [f.to_json() for f in facts]}


def sl27_times_c2_check(t):
    """v_7(-7 D) = 1 and D not a perfect square."""
    if t % 2 == 0:
        raise ValueError("t must be odd")
    D = d_value(t)
    return valuation(-7 * D, 7) == 1 and not is_perfect_square(D)


def certify_sl27(t):
    if t % 2 == 0:
        raise ValueError("t must be odd")
    cert = Certificate("sl27", f"t={t}")
    with Timer() as clock:
        try:
            cert.d = square_class(-7 * d_value(t))
        except BudgetExceeded as exc:
            cert.auxiliary["d_pending_cofactor"] = str(exc.cofactor)
        steps = [
            ("construct", lambda: check_construct(t)),
            ("base-branch-data", check_base_branch_data),
            ("residue-quadratic", check_residue_quadratic),
            ("disc-square", lambda: check_disc_square(t)),
            ("frobenius-2", lambda: check_frobenius_2(t)),
            ("subgroup-certificate", check_subgroup_certificate),
            ("tame-primes", lambda: check_tame_primes(t)),
            ("prime-2", lambda: check_prime_2(t)),
            ("prime-3", lambda: check_prime_3(t)),
            ("prime-7", lambda: check_prime_7(t)),
            ("infinite-prime", lambda: check_infinite_prime(t)),
            ("cover-facts", check_cover_facts),
        ]
        for ident, fn in steps:
            run_check(cert, _spec(ident), fn)
        cert.auxiliary["D"] = str(d_value(t))
        cert.auxiliary["sl2_times_c2"] = sl27_times_c2_check(t)
    cert.wall_clock = clock.elapsed
    return cert
