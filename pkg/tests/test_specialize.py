import pytest
import sympy

from unramcert.exactalg import poly as P
from unramcert.localfields import local_invariants
from unramcert.specialize import (
    T0,
    T3,
    admissible_candidates,
    base_2a7_sheet,
    base_sl27_sheet,
    branch_points,
    chain_2a7,
    chain_sl27,
    cycle_power,
    f_family_sheet,
    f_literal,
    f_literal_bipoly,
    intersection_multiplicity,
    kln_consistency,
    local_cycle_type,
    predict_ramification,
    s_family_sheet,
    sl27_inertia_data,
)

X, T = sympy.symbols("X T")


def rational_function_oracle(num, den):
    """Branch data of the map X -> num(X)/den(X) on the projective line.

    Finite branch values are the roots of disc_X(num - T den); over each,
    cycle lengths are the multiplicities of the roots of num - c den, with
    the missing degree sitting at X = infinity. Over T = infinity the cycle
    lengths are the pole orders.
    """
    n = max(sympy.degree(num, X), sympy.degree(den, X))
    disc = sympy.discriminant(sympy.Poly(num - T * den, X), X)
    out = {}
    for c in sympy.roots(sympy.Poly(disc, T), filter="Q"):
        lengths = []
        for g, m in sympy.sqf_list(sympy.expand(num - c * den), X)[1]:
            lengths += [m] * sympy.degree(g, X)
        if sum(lengths) < n:
            lengths.append(n - sum(lengths))
        out[c] = tuple(sorted(lengths, reverse=True))
    poles = []
    for g, m in sympy.sqf_list(den, X)[1]:
        poles += [m] * sympy.degree(g, X)
    if sum(poles) < n:
        poles.append(n - sum(poles))
    out["inf"] = tuple(sorted(poles, reverse=True))
    return {k: v for k, v in out.items() if any(x > 1 for x in v)}


def _as_dict(sheet):
    return {("inf" if bp.is_infinity else sympy.Rational(bp.value().numerator, bp.value().denominator)): bp.cycle_type for bp in sheet.branch_points}


def test_base_sl27_against_rational_function():
    oracle = rational_function_oracle(7**3 * X**7 * (X + 7), X**2 + X + 7)
    assert _as_dict(base_sl27_sheet()) == oracle
    assert set(oracle) == {0, "inf", sympy.Rational(-(7**10), 108)}


def test_base_2a7_against_rational_function():
    oracle = rational_function_oracle(X**7, 7 * (X - 1))
    assert _as_dict(base_2a7_sheet()) == oracle
    assert set(oracle) == {0, "inf", sympy.Rational(7**6, 6**6)}


def test_riemann_hurwitz_genus_zero():
    for sheet, n in ((base_sl27_sheet(), 8), (base_2a7_sheet(), 7)):
        total = sum(n - len(bp.cycle_type) for bp in sheet.branch_points)
        assert total == 2 * n - 2


def test_base_sl27_types_and_residue():
    got = {bp.label: bp for bp in base_sl27_sheet().branch_points}
    assert got["0"].cycle_type == (7, 1)
    assert got["inf"].cycle_type == (6, 1, 1)
    assert got[str(T0)].cycle_type == (2, 2, 2, 1, 1)
    assert got[str(T0)].residue_square_class == -3


def test_base_2a7_residue_class():
    bp = next(b for b in base_2a7_sheet().branch_points if b.value() == T3)
    assert bp.residue_square_class == 3


def test_chain_constructions():
    assert chain_sl27() == f_literal_bipoly()
    assert P.specialize(chain_sl27(), 3) == P.primitive(f_literal(3))
    assert P.specialize(chain_2a7(), 1) == P.primitive((7, -7, 0, 0, 0, 0, 0, 3))


def test_pullback_sheets_match_direct_analysis():
    for sheet in (f_family_sheet(), s_family_sheet()):
        direct = {bp.label: bp.cycle_type for bp in branch_points(sheet.poly)}
        pulled = {bp.label: bp.cycle_type for bp in sheet.branch_points if bp.is_rational}
        for label, ct in pulled.items():
            assert direct[label] == ct


def test_f_family_branch_data():
    got = {bp.label: bp.cycle_type for bp in f_family_sheet().branch_points}
    assert got["inf"] == (7, 1)
    assert (2, 2, 2, 1, 1) in got.values()
    assert "0" not in got  # (6.1^2)^6 is trivial


def test_local_cycle_type_simple_cases():
    assert local_cycle_type(((0, 0, 1), (-1,)), 0) == (2,)
    assert local_cycle_type(((0, 0, 1), (-1,)), None) == (2,)
    assert local_cycle_type(((0, 0, 1), (-1,)), 5) == (1, 1)


def test_cycle_power():
    assert cycle_power((6, 1, 1), 6) == (1,) * 8
    assert cycle_power((6, 1, 1), 2) == (3, 3, 1, 1)
    assert cycle_power((7, 1), 6) == (7, 1)


def test_intersection_multiplicity():
    bp = next(b for b in base_sl27_sheet().branch_points if b.value() == T0)
    # homogeneous form 108 A + 7^10 B at A/B = 1: 108 + 7^10
    assert intersection_multiplicity(1, bp, 1693) == 1


@pytest.mark.parametrize("t", [1, 3, 5, 7, 9])
def test_predictions_match_observed_ramification(t):
    F = f_literal(t)
    preds = {pr.p: pr for pr in predict_ramification(f_family_sheet(), t) if not pr.exceptional}
    for p, pr in preds.items():
        ld = local_invariants(F, p)
        assert ld.is_unramified() == (pr.inertia is None)


def test_predictions_known_primes():
    assert sorted(pr.p for pr in predict_ramification(f_family_sheet(), 1)) == [1693, 166849]
    assert sorted(pr.p for pr in predict_ramification(f_family_sheet(), 3)) == [3, 139, 439, 124987]


def test_admissible_patterns_c6():
    G, tau, C, D = sl27_inertia_data()
    assert C.order == 12 and D.order == 6
    patterns = {c.pattern for c in admissible_candidates(G, tau, 1, D.elements, 8)}
    assert patterns == {((1, 1), (1, 1), (2, 1), (2, 1), (2, 1)), ((1, 1), (1, 1), (2, 3))}


def test_kln_consistency_rejects_foreign_pattern():
    from unramcert.localfields import LocalData

    G, tau, C, D = sl27_inertia_data()
    cands = admissible_candidates(G, tau, 1, D.elements, 8)
    ok, _ = kln_consistency(cands, LocalData.build(5, [(1, 8)]))
    assert not ok
    ok, matches = kln_consistency(cands, LocalData.build(5, [(1, 1), (1, 1), (2, 3)]))
    assert ok and len(matches) == 1
