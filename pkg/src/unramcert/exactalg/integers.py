"""Integer factorization, primality and square classes.

Python ints are the arbitrary-precision integers; ``fractions.Fraction`` is
the rational type used throughout the package.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass, field

TRIAL_LIMIT = 10**6
DEFAULT_BUDGET = 2_000_000
BUDGET_ENV = "UNRAMCERT_FACTOR_BUDGET"

# Deterministic for n < 3.3e24 (Sorenson & Webster).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_LIMIT = 3317044064679887385961981


class BudgetExceeded(Exception):
    """Raised when a cofactor survives the factorization budget.

    ``partial`` holds the prime powers found so far and ``cofactor`` the
    composite part that could not be split.
    """

    def __init__(self, n, partial, cofactor):
        super().__init__(f"could not split cofactor {cofactor} of {n} within budget")
        self.n = n
        self.partial = partial
        self.cofactor = cofactor


def default_budget():
    raw = os.environ.get(BUDGET_ENV)
    if raw:
        return int(raw)
    return DEFAULT_BUDGET


def _small_primes(limit):
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(limit + 1) if sieve[i]]


_PRIMES = None


def small_primes():
    """Primes below ``TRIAL_LIMIT`` (computed once, read-only afterwards)."""
    global _PRIMES
    if _PRIMES is None:
        _PRIMES = tuple(_small_primes(TRIAL_LIMIT))
    return _PRIMES


def is_probable_prime(n):
    """Miller-Rabin with a fixed base set; deterministic below 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n):
    if n < _MR_DETERMINISTIC_LIMIT:
        return is_probable_prime(n)
    # Beyond the deterministic range add a few more fixed bases; still
    # reproducible, no randomness.
    if not is_probable_prime(n):
        return False
    for a in (43, 47, 53, 59, 61, 67, 71):
        if pow(a, n - 1, n) != 1:
            return False
    return True


def _brent_rho(n, c, budget):
    """One Brent cycle-finding run with polynomial x^2 + c.

    Returns (factor or None, iterations used).
    """
    y, m, g, r, q = 2, 128, 1, 1, 1
    x = ys = y
    used = 0
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        used += r
        r *= 2
        if used > budget:
            return None, used
    if g == n:
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    return (g if g != n else None), used


@dataclass(frozen=True)
class FactoredInt:
    unit: int
    factors: tuple = field(default_factory=tuple)  # ((prime, exponent), ...) ascending

    def value(self):
        out = self.unit
        for p, e in self.factors:
            out *= p**e
        return out

    def primes(self):
        return [p for p, _ in self.factors]

    def to_json(self):
        return {"unit": self.unit, "factors": [[str(p), e] for p, e in self.factors]}


def factor_integer(n, budget=None):
    """Factor a nonzero integer completely.

    Trial division to ``TRIAL_LIMIT`` first, then Brent's variant of Pollard
    rho with the fixed constant sequence c = 1, 2, 3, ... . ``budget`` bounds
    the total number of rho iterations; exhausting it raises BudgetExceeded.
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    if budget is None:
        budget = default_budget()
    unit = -1 if n < 0 else 1
    m = abs(n)
    found = {}
    for p in small_primes():
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            found[p] = e
    stack = [m] if m > 1 else []
    remaining = budget
    stuck = []
    while stack:
        c = stack.pop()
        if c < TRIAL_LIMIT**2 or is_prime(c):
            # after trial division, anything below TRIAL_LIMIT^2 is prime
            found[c] = found.get(c, 0) + 1
            continue
        r = math.isqrt(c)
        if r * r == c:
            stack.extend([r, r])
            continue
        d = None
        k = 1
        while d is None and remaining > 0:
            d, used = _brent_rho(c, k, remaining)
            remaining -= used
            k += 1
        if d is None:
            stuck.append(c)
            continue
        stack.extend([d, c // d])
    if stuck:
        partial = FactoredInt(unit, tuple(sorted(found.items())))
        cof = 1
        for c in stuck:
            cof *= c
        raise BudgetExceeded(n, partial, cof)
    return FactoredInt(unit, tuple(sorted(found.items())))


def valuation(n, p):
    """p-adic valuation of a nonzero integer (or Fraction-like num/den pair)."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def is_perfect_square(n):
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def is_rational_square(q):
    """True iff the Fraction ``q`` is the square of a rational number."""
    if q < 0:
        return False
    return is_perfect_square(q.numerator) and is_perfect_square(q.denominator)


def square_class(n, budget=None):
    """The squarefree integer d with n/d a positive rational square.

    Accepts ints and Fractions; for a fraction a/b the class of a*b is used.
    """
    num = getattr(n, "numerator", n)
    den = getattr(n, "denominator", 1)
    m = num * den
    if m == 0:
        raise ValueError("square class of 0 is undefined")
    fac = factor_integer(m, budget)
    d = fac.unit
    for p, e in fac.factors:
        if e % 2:
            d *= p
    return d


def same_square_class(a, b):
    """Compare square classes without factoring: a/b must be a rational square."""
    from fractions import Fraction

    return is_rational_square(Fraction(a) / Fraction(b))
