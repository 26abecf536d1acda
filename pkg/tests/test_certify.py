import json

import pytest

from oracles import class_number_analytic
from unramcert.certify import (
    CONDITIONAL,
    FAIL,
    PASS,
    CapExceeded,
    Certificate,
    CheckSpec,
    certify_2a7_setup,
    certify_sl27,
    class_number,
    d_value,
    group_facts,
    obstruction_table,
    odd_range,
    reduced_forms,
    run_batch,
    run_check,
    sl27_times_c2_check,
)
from unramcert.certify.batch import parse_range
from unramcert.certify.classnum import family_discriminant, fundamental_discriminant
from unramcert.exactalg.integers import BudgetExceeded, square_class
from unramcert.permgroup import perm as pm

SPEC = CheckSpec("x", "demo", "none")


# -- certificate model


def test_verdict_rules():
    c = Certificate("demo", "t=1")
    assert c.verdict == FAIL  # no checks
    run_check(c, SPEC, lambda: (True, {}))
    assert c.verdict == PASS
    run_check(c, SPEC, lambda: (_ for _ in ()).throw(BudgetExceeded(10, (), 10)))
    assert c.verdict == CONDITIONAL
    run_check(c, SPEC, lambda: (False, {}))
    assert c.verdict == FAIL


def test_crash_is_a_failure():
    c = Certificate("demo", "t=1")
    run_check(c, SPEC, lambda: 1 / 0)
    assert c.verdict == FAIL and "ZeroDivisionError" in c.checks[0].evidence["error"]


def test_removing_checks_never_turns_fail_into_pass():
    c = Certificate("demo", "t")
    for ok in (True, False, True):
        run_check(c, SPEC, lambda ok=ok: (ok, {}))
    assert c.verdict == FAIL
    c.checks = [ch for ch in c.checks if ch.status != FAIL] + [c.checks[1]]
    assert c.verdict == FAIL


# -- SL2(7) certificates


@pytest.fixture(scope="module")
def cert1():
    return certify_sl27(1)


def test_certificate_t1(cert1):
    assert cert1.verdict == PASS
    assert len(cert1.checks) == 12
    assert cert1.d == square_class(-7 * 282475357)
    assert cert1.auxiliary["sl2_times_c2"] is True


def test_certificate_json_deterministic(cert1):
    again = certify_sl27(1)
    assert again.dumps(with_timing=False) == cert1.dumps(with_timing=False)
    data = json.loads(cert1.dumps())
    assert data["schema"] == 1 and data["verdict"] == "pass"
    assert [c["id"] for c in data["checks"]][:2] == ["construct", "base-branch-data"]


def test_t3_exercises_prime_3():
    cert = certify_sl27(3)
    assert cert.verdict == PASS
    ev = cert.check("prime-3").evidence
    assert ev["3_divides_t"] and ev["candidates"]


def test_even_t_rejected():
    with pytest.raises(ValueError):
        certify_sl27(2)
    with pytest.raises(ValueError):
        sl27_times_c2_check(4)


@pytest.mark.parametrize("t", [1, 3, 5, 7, 9])
def test_disc_square_panel(t):
    assert certify_sl27(t).status_of("disc-square") == PASS


@pytest.mark.parametrize("t", [1, 3, 7])
def test_sl2_times_c2(t):
    assert sl27_times_c2_check(t)


def test_budget_exhaustion_gives_conditional(monkeypatch):
    # D(31) has a 17-digit cofactor that trial division alone cannot split
    monkeypatch.setenv("UNRAMCERT_FACTOR_BUDGET", "0")
    cert = certify_sl27(31)
    assert cert.verdict == CONDITIONAL
    assert cert.status_of("tame-primes") == CONDITIONAL
    assert cert.check("tame-primes").evidence["reason"] == "factorization budget exhausted"


def test_d_value():
    assert d_value(1) == 282475357


# -- 2.A7 setup


def test_2a7_setup_passes():
    cert = certify_2a7_setup()
    assert cert.verdict == PASS, cert.summary()


def test_obstruction_table_examples():
    rows = obstruction_table()
    by_phi = {}
    for phi, frob, q, free, even in rows:
        if frob == phi and q == 3:
            by_phi[phi] = free
    p7 = lambda *cs: pm.from_cycles(7, *cs)
    assert by_phi[p7((2, 3), (4, 5))] is True
    assert by_phi[p7((2, 3))] is False
    assert by_phi[p7((2, 3, 4))] is True
    assert len(by_phi) == 120 and sum(by_phi.values()) == 60


def test_2a7_sample_recorded():
    cert = certify_2a7_setup(5)
    assert cert.auxiliary["sample"]["s"] == "5"


# -- class numbers


@pytest.mark.parametrize("d, h", [(-3, 1), (-4, 1), (-23, 3), (-31, 3), (-47, 5), (-71, 7), (-20, 2), (-56, 4)])
def test_class_number_small(d, h):
    assert class_number(d) == h


@pytest.mark.parametrize("d", [-7, -15, -23, -31, -39, -43, -55, -84, -104, -211, -283, -1019])
def test_class_number_against_analytic_formula(d):
    assert class_number(d) == class_number_analytic(d)


def test_reduced_forms_are_reduced():
    for a, b, c in reduced_forms(-1019):
        assert abs(b) <= a <= c and b * b - 4 * a * c == -1019


def test_class_number_errors():
    with pytest.raises(ValueError):
        class_number(-5)
    with pytest.raises(ValueError):
        class_number(12)
    with pytest.raises(CapExceeded):
        class_number(-(10**13) - 3)


def test_family_discriminant():
    assert family_discriminant(1) == -31
    assert fundamental_discriminant(-1) == -4


# -- group facts and batch


def test_group_facts_all_hold():
    facts = group_facts()
    failing = [f.name for rows in facts.values() for f in rows if not f.ok]
    assert failing == []


def test_batch_small():
    rows, distinct = run_batch(odd_range(1, 9))
    assert [r[0] for r in rows] == [1, 3, 5, 7, 9]
    assert all(r[1] == PASS for r in rows) and len(distinct) == 5


def test_parse_range():
    assert parse_range("1..41") == (1, 41)
    assert parse_range("-3:5") == (-3, 5)
    with pytest.raises(ValueError):
        parse_range("1-")
    assert odd_range(2, 8) == [3, 5, 7]
