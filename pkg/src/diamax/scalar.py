"""Scalar handling for the two arithmetic modes.

Polyhedral norms run on :class:`fractions.Fraction` throughout; the Euclidean
mode runs on floats and compares with the global tolerance ``TAU``.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

TAU = 1e-9


def as_fraction(x) -> Fraction:
    """Parse ints, Fractions, ``"p/q"`` strings and finite floats exactly."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational scalar")


def as_float(x) -> float:
    if isinstance(x, str):
        return float(Fraction(x.strip()))
    return float(x)


def is_exact(x) -> bool:
    return isinstance(x, Fraction)


def tol(x) -> float:
    """Comparison slack for a scalar of the given mode."""
    return 0 if isinstance(x, Fraction) else TAU


def convert(x, exact: bool):
    return as_fraction(x) if exact else as_float(x)


def fmt(x):
    """JSON form: rationals as ``"p/q"`` strings, floats as numbers."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, int):
        return str(x)
    return float(x)
