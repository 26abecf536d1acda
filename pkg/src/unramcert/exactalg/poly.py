"""Dense univariate and bivariate polynomials with exact coefficients.

A univariate polynomial is a tuple of coefficients, constant term first,
without trailing zeros; the zero polynomial is ``()``. Coefficients are ints
(an IntPoly) or Fractions. A bivariate polynomial (BiPoly) is a tuple of
univariate polynomials in X indexed by the degree in t.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce


def trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def deg(a):
    return len(a) - 1


def lc(a):
    return a[-1] if a else 0


def add(a, b):
    n = max(len(a), len(b))
    return trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))


def sub(a, b):
    n = max(len(a), len(b))
    return trim((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n))


def neg(a):
    return tuple(-c for c in a)


def scale(a, c):
    return trim(c * x for x in a)


def mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return trim(out)


def power(a, n):
    out = (1,)
    base = a
    while n:
        if n & 1:
            out = mul(out, base)
        base = mul(base, base)
        n >>= 1
    return out


def prod(polys):
    return reduce(mul, polys, (1,))


def monomial(c, n):
    return trim([0] * n + [c])


def derivative(a):
    return trim(i * a[i] for i in range(1, len(a)))


def evaluate(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def compose(a, b):
    """a(b(X))."""
    acc = ()
    for c in reversed(a):
        acc = add(mul(acc, b), (c,) if c else ())
    return acc


def shift(a, c):
    """a(X + c)."""
    return compose(a, trim((c, 1)))


def reverse(a, n=None):
    """X^n a(1/X) with n = deg a unless given."""
    if n is None:
        n = deg(a)
    padded = list(a) + [0] * (n + 1 - len(a))
    return trim(reversed(padded))


def homogeneous_eval(a, num, den):
    """Evaluate the homogenization of a at (num, den): sum a_i num^i den^(d-i)."""
    d = deg(a)
    return sum(c * num**i * den ** (d - i) for i, c in enumerate(a))


def content(a):
    return reduce(math.gcd, (int(c) for c in a), 0)


def primitive(a):
    """Primitive integer polynomial with positive leading coefficient.

    Fraction coefficients are cleared first.
    """
    a = trim(a)
    if not a:
        return ()
    den = reduce(lambda x, y: x * y // math.gcd(x, y), (Fraction(c).denominator for c in a), 1)
    ints = [int(Fraction(c) * den) for c in a]
    g = reduce(math.gcd, ints, 0)
    if ints[-1] < 0:
        g = -g
    return tuple(c // g for c in ints)


def to_fractions(a):
    return tuple(Fraction(c) for c in a)


def divmod_q(a, b):
    """Division with remainder over the rationals."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(to_fractions(a))
    b = to_fractions(b)
    db, inv = deg(b), Fraction(1) / b[-1]
    q = [Fraction(0)] * max(len(a) - db, 0)
    for i in range(len(a) - db - 1, -1, -1):
        c = a[i + db] * inv
        q[i] = c
        if c:
            for j in range(db + 1):
                a[i + j] -= c * b[j]
    return trim(q), trim(a[:db])


def exact_div(a, b):
    """a / b for integer polynomials when the quotient is known to be integral."""
    q, r = divmod_q(a, b)
    if r:
        raise ValueError("division is not exact")
    if any(c.denominator != 1 for c in q):
        raise ValueError("quotient is not integral")
    return tuple(int(c) for c in q)


def divides(b, a):
    _, r = divmod_q(a, b)
    return not r


def gcd(a, b):
    """Greatest common divisor over Q, returned primitive with positive lc."""
    a, b = to_fractions(trim(a)), to_fractions(trim(b))
    while b:
        a, b = b, divmod_q(a, b)[1]
    return primitive(a) if a else ()


def squarefree_decomposition(a):
    """Yun's algorithm: returns [(g_i, i)] with a = c * prod g_i^i over Q."""
    a = primitive(a)
    if deg(a) < 1:
        return []
    out = []
    da = derivative(a)
    g = gcd(a, da)
    b = exact_div_q(a, g)
    c = exact_div_q(da, g)
    d = sub(c, derivative(b))
    i = 1
    while deg(b) >= 1:
        g = gcd(b, d)
        if deg(g) >= 1:
            out.append((g, i))
        b = exact_div_q(b, g)
        c = exact_div_q(d, g)
        d = sub(c, derivative(b))
        i += 1
    return out


def exact_div_q(a, b):
    q, r = divmod_q(a, b)
    if r:
        raise ValueError("division is not exact")
    return q


def squarefree_part(a):
    return primitive(prod(g for g, _ in squarefree_decomposition(a)))


def is_squarefree(a):
    return deg(gcd(a, derivative(a))) < 1


# -- resultants -------------------------------------------------------------


def _pseudo_rem(a, b):
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b over the integers."""
    a = list(a)
    db = deg(b)
    lb = b[-1]
    e = deg(a) - db + 1
    while len(a) - 1 >= db and a:
        c = a[-1]
        shift_ = len(a) - 1 - db
        a = [x * lb for x in a]
        for j in range(db + 1):
            a[shift_ + j] -= c * b[j]
        a = list(trim(a))
        e -= 1
    return tuple(x * lb**e for x in a)


def resultant(f, g):
    """Resultant of two integer polynomials via the subresultant PRS."""
    a_, b_ = trim(f), trim(g)
    if not a_ or not b_:
        return 0
    ca, cb = content(a_), content(b_)
    A = tuple(c // ca for c in a_)
    B = tuple(c // cb for c in b_)
    t = ca ** deg(B) * cb ** deg(A)
    s = 1
    if deg(A) < deg(B):
        A, B = B, A
        if deg(A) % 2 and deg(B) % 2:
            s = -1
    if deg(B) == 0:
        return s * t * B[0] ** deg(A)
    gg, h = 1, 1
    while True:
        delta = deg(A) - deg(B)
        if deg(A) % 2 and deg(B) % 2:
            s = -s
        r = _pseudo_rem(A, B)
        A = B
        div = gg * h**delta
        B = tuple(c // div for c in r)
        gg = lc(A)
        h = gg**delta // h ** (delta - 1) if delta >= 1 else h * gg**delta
        if not B:
            return 0
        if deg(B) == 0:
            break
    da = deg(A)
    h = B[0] ** da // h ** (da - 1) if da >= 1 else h
    return s * t * h


def discriminant(f):
    """(-1)^(d(d-1)/2) res(f, f') / lc(f)."""
    f = trim(f)
    d = deg(f)
    if d < 1:
        raise ValueError("discriminant needs a nonconstant polynomial")
    r = resultant(f, derivative(f))
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    q, rem = divmod(sign * r, f[-1])
    assert rem == 0
    return q


def resultant_euclid(f, g):
    """Resultant by the Euclidean recurrence over Q (an independent route).

    res(f, g) = (-1)^(deg f deg g) lc(g)^(deg f - deg r) res(g, r), r = f mod g.
    """
    f, g = to_fractions(trim(f)), to_fractions(trim(g))
    if not f or not g:
        return Fraction(0)
    acc = Fraction(1)
    while True:
        df, dg = deg(f), deg(g)
        if dg == 0:
            return acc * g[0] ** df
        _, r = divmod_q(f, g)
        if not r:
            return Fraction(0)
        dr = deg(r)
        if df * dg % 2:
            acc = -acc
        acc *= g[-1] ** (df - dr)
        f, g = g, r


def real_root_count(f):
    """Number of distinct real roots, by a Sturm sequence over Q."""
    f = to_fractions(trim(f))
    if deg(f) < 1:
        return 0
    seq = [f, to_fractions(derivative(f))]
    while deg(seq[-1]) > 0:
        _, r = divmod_q(seq[-2], seq[-1])
        if not r:
            break
        seq.append(neg(r))

    def changes(signs):
        signs = [s for s in signs if s]
        return sum(1 for x, y in zip(signs, signs[1:]) if x != y)

    at_pos = [1 if lc(p) > 0 else -1 for p in seq]
    at_neg = [(1 if lc(p) > 0 else -1) * (-1) ** deg(p) for p in seq]
    return changes(at_neg) - changes(at_pos)


# -- bivariate --------------------------------------------------------------


def bi_trim(rows):
    rows = [trim(r) for r in rows]
    while rows and not rows[-1]:
        rows.pop()
    return tuple(rows)


def bi_from_terms(terms):
    """BiPoly from a {(t_degree, x_degree): coefficient} mapping."""
    if not terms:
        return ()
    dt = max(i for i, _ in terms)
    rows = []
    for i in range(dt + 1):
        dx = max((j for (k, j) in terms if k == i), default=-1)
        rows.append(trim(terms.get((i, j), 0) for j in range(dx + 1)))
    return bi_trim(rows)


def bi_deg_t(f):
    return len(f) - 1


def bi_deg_x(f):
    return max((deg(r) for r in f), default=-1)


def bi_x_coefficient(f, j):
    """The coefficient of X^j as a polynomial in t."""
    return trim(r[j] if j < len(r) else 0 for r in f)


def bi_add(f, g):
    n = max(len(f), len(g))
    return bi_trim(add(f[i] if i < len(f) else (), g[i] if i < len(g) else ()) for i in range(n))


def bi_mul(f, g):
    if not f or not g:
        return ()
    out = [()] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = add(out[i + j], mul(a, b))
    return bi_trim(out)


def bi_scale_t(f, p):
    """Multiply every row by the univariate polynomial p(t)."""
    return bi_mul(f, tuple((c,) if c else () for c in p))


def bi_content(f):
    return reduce(math.gcd, (c for r in f for c in r), 0)


def bi_primitive(f):
    """Remove integer content; make the leading X-coefficient's leading t term positive."""
    f = bi_trim(f)
    if not f:
        return f
    g = bi_content(f)
    lead = lc(bi_x_coefficient(f, bi_deg_x(f)))
    if lead < 0:
        g = -g
    return tuple(tuple(c // g for c in r) for r in f)


def specialize(f, t0):
    """f(t0, X) for a rational t0, returned as a primitive integer polynomial.

    The numerator-cleared form den^deg_t * f(num/den, X) is used, so the
    result is well defined up to the sign/content normalization.
    """
    t0 = Fraction(t0)
    a, b = t0.numerator, t0.denominator
    n = bi_deg_t(f)
    acc = ()
    for i, row in enumerate(f):
        acc = add(acc, scale(row, a**i * b ** (n - i)))
    return primitive(acc)


def specialize_exact(f, t0):
    """f(t0, X) with Fraction coefficients and no normalization."""
    t0 = Fraction(t0)
    acc = ()
    for i, row in enumerate(f):
        acc = add(acc, scale(to_fractions(row), t0**i))
    return acc


def substitute_t(f, num, den):
    """den^deg_t(f) * f(num/den, X) as a BiPoly in the new variable, content removed."""
    if not trim(den):
        raise ZeroDivisionError("substitution with zero denominator")
    n = bi_deg_t(f)
    out = ()
    for i, row in enumerate(f):
        weight = mul(power(num, i), power(den, n - i))
        out = bi_add(out, bi_mul(tuple((c,) if c else () for c in weight), (row,)))
    return bi_primitive(out)


def swap(f):
    """Exchange the roles of t and X."""
    terms = {(j, i): c for i, r in enumerate(f) for j, c in enumerate(r) if c}
    return bi_from_terms(terms)


def bi_reverse_t(f):
    """s^deg_t f(1/s, X): the chart at t = infinity."""
    return bi_trim(reversed(f))


def bi_eval(f, t0, x0):
    return evaluate(specialize_exact(f, t0), x0)


def interpolate(points):
    """Lagrange interpolation through (x, y) pairs; returns a Fraction polynomial."""
    acc = ()
    for i, (xi, yi) in enumerate(points):
        basis = (Fraction(1),)
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j != i:
                basis = mul(basis, (-Fraction(xj), Fraction(1)))
                denom *= xi - xj
        acc = add(acc, scale(basis, Fraction(yi) / denom))
    return acc


def discriminant_in_t(f):
    """disc_X f(t, X) as an integer polynomial in t.

    Uses the generic X-degree n of f and the formula
    disc = (-1)^(n(n-1)/2) res_X(f, f_X) / lc_X(f), evaluated at enough integer
    points and interpolated exactly.
    """
    n = bi_deg_x(f)
    lead = bi_x_coefficient(f, n)
    bound = (2 * n - 1) * bi_deg_t(f) + 1
    pts = []
    x = 0
    while len(pts) < bound + 1:
        x += 1
        c = evaluate(lead, x)
        if c == 0:
            continue
        fx = tuple(evaluate(bi_x_coefficient(f, j), x) for j in range(n + 1))
        pts.append((x, Fraction(discriminant(fx))))
    q = interpolate(pts)
    if any(c.denominator != 1 for c in q):
        raise ArithmeticError("interpolated discriminant is not integral")
    return tuple(int(c) for c in q)


# -- serialization ----------------------------------------------------------


def to_json(a):
    return [str(c) for c in a]


def from_json(data):
    return trim(int(c) for c in data)


def bi_to_json(f):
    return [to_json(r) for r in f]


def bi_from_json(data):
    return bi_trim(from_json(r) for r in data)


def format_poly(a, var="X"):
    terms = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if mono and c == 1:
            s = mono
        elif mono and c == -1:
            s = "-" + mono
        else:
            s = f"{c}{'*' + mono if mono else ''}"
        terms.append(s)
    return " + ".join(terms).replace("+ -", "- ") if terms else "0"
