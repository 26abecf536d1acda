"""Verification toolkit for unramified SL2(7) and 2.A7 extensions of quadratic fields."""

__version__ = "0.1.0"
