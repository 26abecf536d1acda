"""Finite fields F_p and F_{p^d} = F_p[y]/(phi), and polynomials over them.

Elements of a prime field are ints in [0, p); elements of an extension are
trimmed coefficient tuples in y (constant first), zero being ``()``.
Polynomials over a field are tuples of elements, constant first, trimmed.
Factorization is the textbook pipeline: squarefree split, distinct-degree
split, then Cantor-Zassenhaus equal-degree splitting (trace map in
characteristic 2).
"""
from __future__ import annotations

import random


class GF:
    def __init__(self, p, modulus=None):
        self.p = p
        if modulus is None or len(modulus) <= 2:
            self.modulus = None
            self.d = 1
        else:
            modulus = tuple(c % p for c in modulus)
            if modulus[-1] != 1:
                raise ValueError("extension modulus must be monic")
            self.modulus = modulus
            self.d = len(modulus) - 1
        self.q = p**self.d
        self.zero = 0 if self.d == 1 else ()
        self.one = 1 if self.d == 1 else (1,)

    def __repr__(self):
        if self.d == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.d}, modulus={self.modulus})"

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))

    # -- elements -----------------------------------------------------------

    def _ytrim(self, a):
        a = list(a)
        while a and a[-1] == 0:
            a.pop()
        return tuple(a)

    def elt(self, x):
        """Coerce an int (or coefficient sequence in y) into the field."""
        if self.d == 1:
            return int(x) % self.p
        if isinstance(x, int):
            return self._ytrim([x % self.p])
        return self._reduce([c % self.p for c in x])

    def _reduce(self, a):
        a = list(a)
        m, d, p = self.modulus, self.d, self.p
        for i in range(len(a) - 1, d - 1, -1):
            c = a[i]
            if c:
                for j in range(d + 1):
                    a[i - d + j] = (a[i - d + j] - c * m[j]) % p
        return self._ytrim(a[:d])

    def add(self, a, b):
        if self.d == 1:
            return (a + b) % self.p
        n = max(len(a), len(b))
        return self._ytrim(((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % self.p for i in range(n))

    def neg(self, a):
        if self.d == 1:
            return -a % self.p
        return tuple(-c % self.p for c in a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.d == 1:
            return a * b % self.p
        if not a or not b:
            return ()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return self._reduce(out)

    def pow(self, a, n):
        if self.d == 1:
            return pow(a, n, self.p)
        out, base = self.one, a
        while n:
            if n & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            n >>= 1
        return out

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero")
        if self.d == 1:
            return pow(a, -1, self.p)
        return self.pow(a, self.q - 2)

    def pth_root(self, a):
        return self.pow(a, self.q // self.p)

    def random(self, rng):
        if self.d == 1:
            return rng.randrange(self.p)
        return self._ytrim(rng.randrange(self.p) for _ in range(self.d))

    def elements(self):
        if self.q > 10**6:
            raise ValueError("field too large to enumerate")
        if self.d == 1:
            return list(range(self.p))
        out = []
        for n in range(self.q):
            digits = []
            for _ in range(self.d):
                digits.append(n % self.p)
                n //= self.p
            out.append(self._ytrim(digits))
        return out

    def is_square(self, a):
        if a == self.zero or self.p == 2:
            return True
        return self.pow(a, (self.q - 1) // 2) == self.one


# -- polynomials over a field ---------------------------------------------------


def ptrim(F, a):
    a = list(a)
    while a and a[-1] == F.zero:
        a.pop()
    return tuple(a)


def padd(F, a, b):
    n = max(len(a), len(b))
    z = F.zero
    return ptrim(F, (F.add(a[i] if i < len(a) else z, b[i] if i < len(b) else z) for i in range(n)))


def psub(F, a, b):
    n = max(len(a), len(b))
    z = F.zero
    return ptrim(F, (F.sub(a[i] if i < len(a) else z, b[i] if i < len(b) else z) for i in range(n)))


def pscale(F, a, c):
    return ptrim(F, (F.mul(c, x) for x in a))


def pmul(F, a, b):
    if not a or not b:
        return ()
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == F.zero:
            continue
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return ptrim(F, out)


def pdivmod(F, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db = len(b) - 1
    inv = F.inv(b[-1])
    q = [F.zero] * max(len(a) - db, 0)
    for i in range(len(a) - db - 1, -1, -1):
        c = F.mul(a[i + db], inv)
        q[i] = c
        if c != F.zero:
            for j in range(db + 1):
                a[i + j] = F.sub(a[i + j], F.mul(c, b[j]))
    return ptrim(F, q), ptrim(F, a[:db])


def prem(F, a, b):
    return pdivmod(F, a, b)[1]


def pmonic(F, a):
    if not a:
        return a
    return pscale(F, a, F.inv(a[-1]))


def pgcd(F, a, b):
    while b:
        a, b = b, prem(F, a, b)
    return pmonic(F, a)


def pderiv(F, a):
    return ptrim(F, (F.mul(F.elt(i), a[i]) for i in range(1, len(a))))


def ppowmod(F, a, n, m):
    out = (F.one,)
    base = prem(F, a, m)
    while n:
        if n & 1:
            out = prem(F, pmul(F, out, base), m)
        base = prem(F, pmul(F, base, base), m)
        n >>= 1
    return out


def peval(F, a, x):
    acc = F.zero
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


def from_ints(F, coeffs):
    return ptrim(F, (F.elt(c) for c in coeffs))


def _pth_root_poly(F, a):
    """b with b^p = a, for a polynomial whose derivative vanishes."""
    p = F.p
    return ptrim(F, (F.pth_root(a[i]) for i in range(0, len(a), p)))


def squarefree_factorization(F, a):
    """Monic squarefree factors [(g, multiplicity)] of a nonzero polynomial."""
    a = pmonic(F, a)
    out = []
    mult = 1

    def rec(f, m):
        if len(f) <= 1:
            return
        da = pderiv(F, f)
        if not da:
            rec(_pth_root_poly(F, f), m * F.p)
            return
        c = pgcd(F, f, da)
        w = pdivmod(F, f, c)[0]
        i = 1
        while len(w) > 1:
            y = pgcd(F, w, c)
            z = pdivmod(F, w, y)[0]
            if len(z) > 1:
                out.append((z, i * m))
            i += 1
            w = y
            c = pdivmod(F, c, y)[0]
        if len(c) > 1:
            rec(_pth_root_poly(F, c), m * F.p)

    rec(a, mult)
    merged = {}
    for g, m in out:
        merged[m] = pmul(F, merged.get(m, (F.one,)), g)
    return sorted(((g, m) for m, g in merged.items()), key=lambda gm: gm[1])


def distinct_degree_factorization(F, a):
    """For monic squarefree a: [(g_k, k)] with g_k the product of degree-k factors."""
    out = []
    x = (F.zero, F.one)
    h = x
    f = a
    k = 0
    while len(f) - 1 >= 2 * (k + 1):
        k += 1
        h = ppowmod(F, h, F.q, f)
        g = pgcd(F, f, psub(F, h, x))
        if len(g) > 1:
            out.append((g, k))
            f = pdivmod(F, f, g)[0]
            h = prem(F, h, f)
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def _trace_poly(F, r, k, f):
    # sum_{i < d*k} r^(2^i) mod f, the absolute trace used in characteristic 2
    acc = r
    cur = r
    for _ in range(F.d * k - 1):
        cur = prem(F, pmul(F, cur, cur), f)
        acc = padd(F, acc, cur)
    return acc


def equal_degree_factorization(F, a, k, rng=None):
    """Split a monic squarefree a, all of whose irreducible factors have degree k."""
    n = len(a) - 1
    if n == k:
        return [a]
    if n == 0:
        return []
    rng = rng or random.Random(0x5EED + n * 31 + k)
    while True:
        r = ptrim(F, [F.random(rng) for _ in range(n)])
        if len(r) <= 1:
            continue
        if F.p == 2:
            s = _trace_poly(F, r, k, a)
        else:
            s = psub(F, ppowmod(F, r, (F.q**k - 1) // 2, a), (F.one,))
        g = pgcd(F, a, s)
        if 1 < len(g) < len(a):
            left = equal_degree_factorization(F, g, k, rng)
            right = equal_degree_factorization(F, pdivmod(F, a, g)[0], k, rng)
            return left + right


def factor(F, a):
    """Irreducible factorization: (leading coefficient, [(monic factor, multiplicity)]).

    Factors are sorted by degree, then by coefficients.
    """
    a = ptrim(F, a)
    if not a:
        raise ValueError("cannot factor the zero polynomial")
    lead = a[-1]
    out = []
    for g, m in squarefree_factorization(F, a):
        for h, k in distinct_degree_factorization(F, g):
            for irr in equal_degree_factorization(F, h, k):
                out.append((irr, m))
    out.sort(key=lambda fm: (len(fm[0]), _sort_key(fm[0]), fm[1]))
    return lead, out


def _sort_key(a):
    return tuple(c if isinstance(c, int) else tuple(c) for c in reversed(a))


def is_irreducible(F, a):
    """Rabin's test: a | X^(q^n) - X and gcd(a, X^(q^(n/r)) - X) = 1 for primes r | n."""
    a = pmonic(F, a)
    n = len(a) - 1
    if n < 1:
        return False
    x = (F.zero, F.one)
    if prem(F, psub(F, ppowmod(F, x, F.q**n, a), x), a) != ():
        return False
    for r in _prime_divisors(n):
        h = prem(F, psub(F, ppowmod(F, x, F.q ** (n // r), a), x), a)
        if len(pgcd(F, a, h)) > 1:
            return False
    return True


def _prime_divisors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def roots(F, a):
    """Distinct roots of a in F (via gcd with X^q - X)."""
    a = pmonic(F, a)
    if len(a) <= 1:
        return []
    x = (F.zero, F.one)
    g = pgcd(F, a, prem(F, psub(F, ppowmod(F, x, F.q, a), x), a))
    if len(g) <= 1:
        return []
    return sorted((F.neg(lin[0]) for lin in equal_degree_factorization(F, g, 1)), key=lambda c: _sort_key((c,)))
