"""Ramification of specializations predicted from the branch-point data,
and the comparison of observed local data with the admissible orbit patterns."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..exactalg.integers import factor_integer, valuation
from ..permgroup import perm as pm
from ..permgroup.orbits import orbit_local_invariants
from .sheet import cycle_power


@dataclass(frozen=True)
class Prediction:
    p: int
    branch: str
    multiplicity: int
    inertia: tuple | None  # cycle type of tau^multiplicity, None when unramified
    exceptional: bool

    def to_json(self):
        return {
            "p": str(self.p),
            "branch": self.branch,
            "multiplicity": self.multiplicity,
            "inertia": list(self.inertia) if self.inertia else None,
            "exceptional": self.exceptional,
        }


def intersection_multiplicity(t0, bp, p):
    """v_p of the homogenized minimal polynomial of bp at t0 = a/b."""
    t0 = Fraction(t0)
    a, b = t0.numerator, t0.denominator
    val = bp.homogeneous_value(a, b)
    if val == 0:
        raise ValueError(f"{t0} is the branch point {bp.label}")
    return valuation(val, p)


def predict_ramification(sheet, t0, budget=None):
    """Predicted inertia for every prime meeting a branch point at t0.

    Primes in the sheet's exceptional set are returned flagged; they need
    direct verification. BudgetExceeded propagates from factorization.
    """
    t0 = Fraction(t0)
    a, b = t0.numerator, t0.denominator
    out = []
    for bp in sheet.branch_points:
        val = bp.homogeneous_value(a, b)
        if val == 0:
            raise ValueError(f"{t0} is the branch point {bp.label}")
        for p, m in factor_integer(val, budget).factors:
            inertia = None
            if bp.cycle_type is not None and m % bp.e:
                inertia = cycle_power(bp.cycle_type, m)
            out.append(Prediction(p, bp.label, m, inertia, p in sheet.exceptional))
    return sorted(out, key=lambda pr: (pr.p, pr.branch))


@dataclass(frozen=True)
class Candidate:
    decomposition: tuple  # generators
    inertia: tuple
    pattern: tuple


def admissible_candidates(G, tau, power, frobenius_pool, degree):
    """All (D, I) with I = <tau^power>, D = <I, g> for g in the pool, and their patterns."""
    t = G.power(tau, power)
    I = G.subgroup([t])
    seen = {}
    for g in frobenius_pool:
        D = G.subgroup([t, g])
        key = frozenset(D.elements)
        if key in seen:
            continue
        pattern = orbit_local_invariants(D, I, degree)
        seen[key] = Candidate((t, g), (t,), pattern)
    return list(seen.values())


def kln_consistency(candidates, observed):
    """Pass iff the observed (e, f) multiset is one of the candidate patterns.

    Returns (passed, matching candidates). The check is the orbit-pattern
    consequence of the decomposition-group statement, not the full statement.
    """
    pattern = tuple(sorted(observed.entries))
    matches = [c for c in candidates if c.pattern == pattern]
    return bool(matches), matches


def describe(candidate):
    return {
        "decomposition": [pm.format_cycles(g) for g in candidate.decomposition],
        "inertia": [pm.format_cycles(g) for g in candidate.inertia],
        "pattern": [list(x) for x in candidate.pattern],
    }
