import itertools
import random

import pytest

from unramcert.covers import (
    WildCase,
    build_det_pm1_cover,
    build_spin_cover,
    build_spin_cover_s7,
    clifford_mul,
    cocycle,
    lift_order,
    local_obstruction_check,
    reduced_word,
    section,
    subgroup_splits,
)
from unramcert.covers.detcover import diag
from unramcert.permgroup import perm as pm
from unramcert.permgroup.group import alternating_group
from unramcert.permgroup.pgl2 import Mat2

p7 = lambda *cs: pm.from_cycles(7, *cs)


def random_perms(n, count, seed):
    rng = random.Random(seed)
    return [tuple(rng.sample(range(n), n)) for _ in range(count)]


# -- Clifford model


def test_clifford_generators_square_to_one():
    for i in range(7):
        assert clifford_mul({1 << i: 1}, {1 << i: 1}) == {0: 1}
    e0, e1 = {1: 1}, {2: 1}
    assert clifford_mul(e0, e1) == {3: 1}
    assert clifford_mul(e1, e0) == {3: -1}


def test_reduced_word_length_is_inversion_count():
    for g in random_perms(7, 200, 1):
        inversions = sum(1 for i, j in itertools.combinations(range(7), 2) if g[i] > g[j])
        word = reduced_word(g)
        assert len(word) == inversions
        h = pm.identity(7)
        for i in word:
            h = pm.mul(h, pm.from_cycles(7, (i, i + 1)))
        assert h == g


def test_cocycle_identity_on_random_triples():
    rng = random.Random(11)
    pool = random_perms(7, 400, 3)
    for _ in range(10_000):
        g, h, k = (rng.choice(pool) for _ in range(3))
        lhs = cocycle(g, h) * cocycle(pm.mul(g, h), k)
        rhs = cocycle(h, k) * cocycle(g, pm.mul(h, k))
        assert lhs == rhs


def test_section_of_transposition_squares_to_scale():
    t = p7((0, 1))
    sq = clifford_mul(section(t), section(t))
    assert sq == {0: 2}  # (e0 - e1)^2 = 2, i.e. w^2 = 1 after normalizing


# -- spin cover


def test_spin_cover_facts():
    S = build_spin_cover_s7()
    assert S.cover.order == 10080
    assert S.kernel_is_central() and S.is_stem()
    assert lift_order(S, p7((0, 1)))[0] == 2
    assert lift_order(S, p7((2, 3), (4, 5)))[0] == 4
    split, tag = subgroup_splits(S, S.base.subgroup([p7((0, 1)), p7((2, 3), (4, 5))]))
    assert not split and tag["name"] == "C2xC4"


@pytest.mark.parametrize(
    "cycles, order",
    [
        (((0, 1),), 2),
        (((0, 1), (2, 3)), 4),
        (((0, 1), (2, 3), (4, 5)), 4),
        (((0, 1, 2),), 3),
        (((0, 1, 2, 3, 4),), 5),
        (((0, 1, 2, 3),), 8),
    ],
)
def test_spin_lift_orders(cycles, order):
    assert lift_order(build_spin_cover_s7(), p7(*cycles))[0] == order


def test_spin_cover_of_s4():
    S = build_spin_cover(4)
    assert S.cover.order == 48
    A = S.preimage(alternating_group(range(4), 4))
    assert A.order == 24 and len(A.involutions()) == 1


def test_2a7():
    S = build_spin_cover_s7()
    A = S.preimage(alternating_group(range(7), 7))
    assert A.order == 5040
    assert A.is_perfect()
    assert len(A.involutions()) == 1


# -- det +-1 cover


def test_det_cover_against_matrix_count():
    E = build_det_pm1_cover()
    brute = sum(1 for a, b, c, d in itertools.product(range(7), repeat=4) if (a * d - b * c) % 7 in (1, 6))
    assert E.cover.order == brute == 672
    assert E.base.order == 336
    assert E.kernel_is_central() and E.is_stem()


def test_det_cover_2b_and_klein():
    E = build_det_pm1_cover()
    tau = diag(1, -1).to_perm()
    assert pm.cycle_type(tau) == (2, 2, 2, 1, 1)
    assert lift_order(E, tau) == (2, (2, 2))
    sigma = Mat2.of(0, 1, 1, 0).to_perm()
    split, tag = subgroup_splits(E, E.base.subgroup([tau, sigma]))
    assert not split and tag["name"] == "D8"
    assert tag["census"] == {1: 1, 2: 5, 4: 2}


def test_obstruction_checks_det_cover():
    E = build_det_pm1_cover()
    tau = diag(1, -1).to_perm()
    sigma = Mat2.of(0, 1, 1, 0).to_perm()
    assert local_obstruction_check(E, tau, tau, 3)
    assert not local_obstruction_check(E, sigma, tau, 3)
    with pytest.raises(WildCase):
        local_obstruction_check(E, sigma, tau, 2)


def test_obstruction_matches_commuting_lifts_spin():
    # for an involution tau and odd q the condition is: some lifts commute
    S = build_spin_cover_s7()
    tau = p7((0, 1))
    for phi in [p7((2, 3)), p7((2, 3), (4, 5)), p7((2, 3, 4)), p7((2, 3, 4, 5))]:
        commute = any(
            S.cover.mul(a, b) == S.cover.mul(b, a) for a in S.lifts(phi) for b in S.lifts(tau)
        )
        assert local_obstruction_check(S, phi, tau, 3) == commute == (pm.sign(phi) == 1)
