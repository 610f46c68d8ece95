"""Small shared helpers for exact rational bookkeeping."""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError


def exact_fraction(value) -> Fraction:
    """Convert a number to an exact Fraction.

    Ints, Fractions, and strings convert directly.  Floats are routed through
    their decimal repr so that 0.1 means 1/10, not the nearest binary float.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"not a rational number: {value!r}") from exc
    raise DomainError(f"not a rational number: {value!r}")


def format_fraction(value: Fraction) -> str:
    """Render a Fraction as 'num/den' with an explicit denominator."""
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: str) -> Fraction:
    """Inverse of format_fraction; also accepts plain integers."""
    return exact_fraction(text.strip())
