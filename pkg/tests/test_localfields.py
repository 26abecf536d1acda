import random
import time

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import factor_degrees_mod_p
from unramcert.exactalg import poly as P
from unramcert.localfields import (
    LocalData,
    NotSquarefree,
    PolyModP,
    PrecisionExhausted,
    format_cycle_type,
    frobenius_cycle_type,
    hensel_split,
    local_invariants,
    q7_roots,
    q7_sqrt7_split_check,
)
from unramcert.localfields.q7 import RamQuadElt, scaled_polynomial
from unramcert.specialize import f_literal

# monic irreducibles mod p of each degree, used to build polynomials with known local data
IRREDUCIBLE = {
    3: {1: (0, 1), 2: (1, 0, 1), 3: (1, 2, 0, 1)},
    5: {1: (0, 1), 2: (2, 0, 1), 3: (1, 1, 0, 1)},
    7: {1: (0, 1), 2: (1, 0, 1), 3: (2, 0, 0, 1)},
    11: {1: (0, 1), 2: (1, 0, 1), 3: (4, 0, 0, 1)},
}


def eisenstein_block(phi, e, p, shift=0):
    """phi(X + shift)^e - p: one prime with ramification e and residue degree deg(phi)."""
    g = P.shift(phi, shift) if shift else phi
    return P.sub(P.power(g, e), (p,))


def test_format_cycle_type():
    assert format_cycle_type((2, 2, 2, 1, 1)) == "2^3.1^2"
    assert format_cycle_type((7, 1)) == "7.1"
    assert format_cycle_type((8,)) == "8"


def test_f1_mod_2_is_irreducible_of_degree_8():
    F = f_literal(1)
    fp = PolyModP.from_int_poly(F, 2)
    assert fp.degree == 8 and fp.is_irreducible()
    assert frobenius_cycle_type(F, 2) == (8,)
    assert factor_degrees_mod_p(F, 2) == [8]


def test_frobenius_degree_drop_adds_fixed_point():
    # 5 X^2 + X + 1 mod 5 loses one degree: a root at infinity
    assert frobenius_cycle_type((1, 1, 5), 5) == (1, 1)


def test_frobenius_not_squarefree():
    with pytest.raises(NotSquarefree):
        frobenius_cycle_type((1, 2, 1), 3)
    with pytest.raises(NotSquarefree):
        frobenius_cycle_type((1, 0, 9), 3)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=3, max_size=9), st.sampled_from([3, 5, 7, 11, 13, 17]))
def test_frobenius_matches_sympy(cs, p):
    f = P.trim(tuple(cs))
    if P.deg(f) < 2 or f[-1] % p == 0:
        return
    try:
        ct = frobenius_cycle_type(f, p)
    except NotSquarefree:
        return
    assert list(ct) == factor_degrees_mod_p(f, p)


@pytest.mark.parametrize(
    "p, blocks, expected",
    [
        (3, [(1, 2), (2, 1)], [(2, 1), (1, 2)]),
        (5, [(1, 3), (2, 1), (3, 1)], [(3, 1), (1, 2), (1, 3)]),
        (7, [(1, 2), (3, 1)], [(2, 1), (1, 3)]),
        (11, [(2, 2), (1, 1)], [(2, 2), (1, 1)]),
        (5, [(1, 4)], [(4, 1)]),
    ],
)
def test_local_invariants_known_constructions(p, blocks, expected):
    # blocks: (deg phi, e); distinct residues keep the clusters apart
    f = (1,)
    for k, (d, e) in enumerate(blocks):
        phi = IRREDUCIBLE[p][d]
        f = P.mul(f, eisenstein_block(phi, e, p, shift=k if d == 1 else 0))
    ld = local_invariants(f, p)
    assert sorted(ld.entries) == sorted(expected)
    assert ld.degree() == P.deg(f)


def test_wild_eisenstein_is_handled():
    # X^2 - 2 at 2 and X^3 - 3 at 3 are wildly but regularly ramified
    assert local_invariants((-2, 0, 1), 2).entries == ((2, 1),)
    assert local_invariants((-3, 0, 0, 1), 3).entries == ((3, 1),)


def test_sl27_local_data_at_exceptional_primes():
    F1, F3 = f_literal(1), f_literal(3)
    for p in (2, 3, 11):
        assert local_invariants(F1, p).entries == ((1, 8),)
    split = ((1, 1), (1, 1), (2, 1), (2, 1), (2, 1))
    assert local_invariants(F1, 7).entries == split
    assert local_invariants(F3, 3).entries == split
    assert local_invariants(F3, 7).entries == split


def test_tame_primes_of_d_for_t1():
    F = f_literal(1)
    for p in (1693, 166849):
        ld = local_invariants(F, p)
        assert ld.degree() == 8 and not ld.is_unramified()
        # three 2-cycles of inertia: ramified part has total residue degree 3
        assert sum(f for e, f in ld.entries if e == 2) == 3
        assert all(e in (1, 2) for e, _ in ld.entries)


def test_local_data_json():
    ld = LocalData.build(5, [(2, 1), (1, 1)])
    assert ld.to_json() == {"p": 5, "entries": [[1, 1], [2, 1]]}
    assert ld.residue_degrees() == (1, 1)


def test_hensel_split_reassembles():
    f = P.mul((1, 0, 1), (2, 0, 0, 1))
    parts = hensel_split(f, 7, 10)
    assert sum(P.deg(phi) * m for phi, m, _ in parts) == 5


def test_precision_exhausted():
    with pytest.raises(PrecisionExhausted):
        q7_sqrt7_split_check(1, precision=2, cap=2)


def _orbit_oracle_cases():
    rng = random.Random(2024)
    cases = []
    while len(cases) < 25:
        f = tuple(rng.randint(-30, 30) for _ in range(rng.randint(3, 8))) + (rng.choice([1, 2, 3]),)
        p = rng.choice([3, 5, 7, 11, 13, 17, 19, 23])
        disc = P.discriminant(f)
        if disc and disc % p and f[-1] % p:
            cases.append((f, p))
    return cases


@pytest.mark.parametrize("f, p", _orbit_oracle_cases())
def test_unramified_local_data_is_frobenius(f, p):
    ld = local_invariants(f, p)
    assert ld.is_unramified()
    assert list(ld.residue_degrees()) == factor_degrees_mod_p(f, p)


# -- the 7-adic splitting check


@pytest.mark.parametrize("u", [1, 3])
def test_q7_split_true_within_budget(u):
    start = time.perf_counter()
    assert q7_sqrt7_split_check(u, precision=16, cap=64) is True
    assert time.perf_counter() - start < 5


def test_q7_roots_are_roots():
    prec = 24
    g = scaled_polynomial(1, prec)
    roots = q7_roots(1, prec)
    assert len(roots) == 8
    for r in roots:
        acc = RamQuadElt.make(0, 0, prec)
        for c in reversed(g):
            acc = acc * r + c
        v = acc.valuation()
        assert v is None or v >= 8
    residues = [(r.a % 49, r.b % 7) for r in roots]
    assert len(set(residues)) == 8


def test_q7_even_rejected():
    with pytest.raises(ValueError):
        q7_sqrt7_split_check(2)


def test_ram_quad_arithmetic():
    pi = RamQuadElt.make(0, 1, 10)
    assert (pi * pi).valuation() == 2
    assert (pi * pi).a == 7
    u = RamQuadElt.make(3, 2, 10)
    one = u * u.inverse()
    assert one.a == 1 and one.b == 0
