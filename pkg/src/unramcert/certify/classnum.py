"""Class numbers of imaginary quadratic orders by counting reduced forms."""
from __future__ import annotations

from math import gcd

from ..exactalg.integers import square_class

CLASS_NUMBER_CAP = 10**12


class CapExceeded(ValueError):
    pass


def reduced_forms(d):
    """Reduced primitive forms (a, b, c) of discriminant d < 0.

    Reduced means |b| <= a <= c, with b >= 0 whenever |b| == a or a == c.
    """
    if d >= 0 or d % 4 not in (0, 1):
        raise ValueError(f"{d} is not a negative discriminant")
    if -d > CLASS_NUMBER_CAP:
        raise CapExceeded(f"|d| = {-d} exceeds {CLASS_NUMBER_CAP}")
    out = []
    a = 1
    while 3 * a * a <= -d:
        for b in range(-a + 1, a + 1):
            if (b - d) % 2:
                continue
            num = b * b - d
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            if gcd(gcd(a, b), c) == 1:
                out.append((a, b, c))
        a += 1
    return out


def class_number(d):
    return len(reduced_forms(d))


def fundamental_discriminant(n):
    """Discriminant of Q(sqrt(n))."""
    core = square_class(n)
    return core if core % 4 == 1 else 4 * core


def family_discriminant(u):
    """Discriminant of Q(sqrt(-u(4u + 27)))."""
    return fundamental_discriminant(-u * (4 * u + 27))
