"""Acceptance gate: one test per criterion, each timed from cold caches.

A line per criterion is printed as it finishes and again in the terminal summary.
"""
import random
import time
from contextlib import contextmanager
from fractions import Fraction

import properties
from conftest import ACCEPTANCE, clear_caches
from unramcert.certify import PASS, CONDITIONAL, certify_2a7_setup, certify_sl27, class_number, odd_range, run_batch
from unramcert.certify.a7 import obstruction_table
from unramcert.certify.groupfacts import pgl2_facts, s7_centralizer_facts, sylow_facts, det_cover_facts, spin_cover_facts
from unramcert.covers import build_det_pm1_cover, build_spin_cover_s7, lift_order, subgroup_splits
from unramcert.covers.detcover import diag
from unramcert.exactalg import poly as P
from unramcert.exactalg.integers import is_perfect_square, is_rational_square, square_class
from unramcert.exactalg.qfactor import factor_over_q
from unramcert.localfields import PolyModP, q7_sqrt7_split_check
from unramcert.permgroup import perm as pm
from unramcert.permgroup.group import alternating_group, cyclic_group, dihedral_group, direct_product, structure_tag, symmetric_group
from unramcert.permgroup.pgl2 import Mat2
from unramcert.specialize import T0, T3, base_2a7_sheet, f_literal
from unramcert.specialize.sheet import branch_points


@contextmanager
def criterion(n, label, limit=None):
    clear_caches()
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        secs = time.perf_counter() - start
        ok = ok and (limit is None or secs < limit)
        ACCEPTANCE[n] = (ok, secs, label)
        print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'} ({secs:.2f}s) {label}")
    if limit is not None:
        assert secs < limit, f"criterion {n} took {secs:.1f}s, limit {limit}s"


def test_criterion_01_certify_t1():
    with criterion(1, "certify-sl27 --t 1: all 12 checks pass, disc/(-7*282475357) is a square", 60):
        cert = certify_sl27(1)
        assert cert.verdict == PASS
        assert len(cert.checks) == 12 and all(c.status == PASS for c in cert.checks)
        q, r = divmod(P.discriminant(f_literal(1)), -7 * 282475357)
        assert r == 0 and is_perfect_square(q)


def test_criterion_02_irreducible_mod_2():
    with criterion(2, "F(1,X) mod 2 irreducible of degree 8"):
        fp = PolyModP.from_int_poly(f_literal(1), 2)
        assert fp.degree == 8 and fp.is_irreducible()


def test_criterion_03_branch_analysis():
    with criterion(3, "base branch data {0, inf, -7^10/108}, types (7.1), (6.1^2), (2^3.1^2); quadratic x cubic^2, class -3", 10):
        f = (
            (0, 0, 0, 0, 0, 0, 0, 7**4, 7**3),
            (-7, -1, -1),
        )
        got = {bp.label: bp.cycle_type for bp in branch_points(f)}
        assert got == {"0": (7, 1), "inf": (6, 1, 1), str(Fraction(-(7**10), 108)): (2, 2, 2, 1, 1)}
        fiber = P.primitive(P.specialize(f, T0))
        factors = factor_over_q(fiber)
        assert sorted((P.deg(g), m) for g, m in factors) == [(2, 1), (3, 2)]
        cubic = next(g for g, m in factors if m == 2)
        quad = next(g for g, m in factors if m == 1)
        assert square_class(P.discriminant(cubic)) == -3
        assert square_class(P.discriminant(quad)) == -3 == square_class(T0)


def test_criterion_04_group_facts():
    with criterion(4, "group facts: 336, 12, 42, N(C3) ~ S3xC2, lattice certificate, Q16 Sylow, C(1,2) = 240 ~ C2xS5", 300):
        facts = pgl2_facts() + sylow_facts() + s7_centralizer_facts()
        assert [f.name for f in facts if not f.ok] == []
        by_name = {f.name: f.observed for f in facts}
        assert by_name["|PGL2(7)|"] == 336
        assert by_name["centralizer order of an outer involution"] == 12
        assert by_name["C7 normalizer order"] == 42
        assert by_name["C3 normalizer order"] == 12
        assert by_name["C3 normalizer census"] == structure_tag(direct_product(symmetric_group(3), cyclic_group(2)))["census"]
        assert by_name["no proper outer-involution-generated subgroup contains an 8-cycle"] is True
        assert by_name["Sylow-2 of SL2(7) shape"] == "generalized-quaternion"
        assert by_name["Sylow-2 of SL2(7) order"] == 16
        assert by_name["Sylow-2 of SL2(7) has -I as its only involution"] is True
        assert by_name["centralizer of (1,2) in S7 order"] == 240
        assert by_name["centralizer census equals C2 x S5"] == structure_tag(direct_product(cyclic_group(2), symmetric_group(5)))["census"]


def test_criterion_05_cover_suite():
    with criterion(5, "det +-1 cover 672/stem/2B lifts to 2/Klein -> D8; spin 10080, lifts 2 and 4, C2xC4; 2.A7 perfect 5040, one involution"):
        E = build_det_pm1_cover()
        assert E.cover.order == 672 and E.is_stem()
        tau = diag(1, -1).to_perm()
        assert lift_order(E, tau)[0] == 2
        split, tag = subgroup_splits(E, E.base.subgroup([tau, Mat2.of(0, 1, 1, 0).to_perm()]))
        d8 = structure_tag(dihedral_group(4))
        assert not split and tag["census"] == d8["census"]
        S = build_spin_cover_s7()
        p7 = lambda *cs: pm.from_cycles(7, *cs)
        assert S.cover.order == 10080
        assert lift_order(S, p7((0, 1)))[0] == 2
        assert lift_order(S, p7((2, 3), (4, 5)))[0] == 4
        _, tag = subgroup_splits(S, S.base.subgroup([p7((0, 1)), p7((2, 3), (4, 5))]))
        assert tag["census"] == structure_tag(direct_product(cyclic_group(2), cyclic_group(4)))["census"]
        A = S.preimage(alternating_group(range(7), 7))
        assert A.order == 5040 and A.is_perfect() and len(A.involutions()) == 1
        assert all(f.ok for f in det_cover_facts() + spin_cover_facts())


def test_criterion_06_q7_split():
    with criterion(6, "q7_sqrt7_split_check(1) and (3) true at precision <= 64, < 5 s each"):
        for u in (1, 3):
            start = time.perf_counter()
            assert q7_sqrt7_split_check(u, precision=16, cap=64) is True
            assert time.perf_counter() - start < 5


def test_criterion_07_2a7_setup():
    with criterion(7, "2.A7 setup: {0, inf, 7^6/6^6}, t3 square, quintic class 3, 120-row obstruction table", 120):
        sheet = base_2a7_sheet()
        vals = {bp.label for bp in sheet.branch_points}
        assert vals == {"0", "inf", str(Fraction(7**6, 6**6))}
        assert is_rational_square(T3)
        fiber = P.primitive(P.specialize(sheet.poly, T3))
        quintic = next(g for g, m in factor_over_q(fiber) if P.deg(g) == 5)
        assert square_class(P.discriminant(quintic)) == 3
        rows = obstruction_table()
        assert len({r[0] for r in rows}) == 120
        alt = set(alternating_group(range(2, 7), 7).elements)
        assert all(free == (phi in alt) for phi, _, _, free, _ in rows)
        assert certify_2a7_setup().verdict == PASS


def test_criterion_08_property_suites():
    with criterion(8, "property suites: round-trips, cocycle on 10^4 triples, sum ef = n, class constancy, orbit oracle"):
        rng = random.Random(20240601)
        assert properties.exactalg_roundtrips(rng, 200) == []
        assert properties.cocycle_identity(rng, 10_000) == []
        assert properties.sum_ef_is_degree(rng, 60) == []
        assert properties.class_constancy(rng, 300) == []
        assert properties.orbit_oracle(rng, 40) == []


def test_criterion_09_class_numbers():
    with criterion(9, "class numbers h(-31) = 3, h(-23) = 3, h(-3) = 1, each < 1 s"):
        for d, h in ((-31, 3), (-23, 3), (-3, 1)):
            start = time.perf_counter()
            assert class_number(d) == h
            assert time.perf_counter() - start < 1


def test_criterion_10_batch():
    with criterion(10, "batch t = 1, 3, ..., 41: pass or conditional, >= 15 distinct d"):
        rows, distinct = run_batch(odd_range(1, 41))
        assert len(rows) == 21
        assert all(v in (PASS, CONDITIONAL) for _, v, _, _ in rows)
        assert len(distinct) >= 15
