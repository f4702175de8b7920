"""Exact rational scalars and their wire format.

Every exact quantity in this package is a :class:`fractions.Fraction`
(arbitrary precision, always in lowest terms with positive denominator).
The wire format used by the JSON/CSV emitters is the string ``"p/q"``,
shortened to ``"p"`` when the denominator is 1.  Decimal literals such as
``"0.25"`` parse exactly (no binary-float detour).
"""

from __future__ import annotations

from decimal import Decimal
from fractions import Fraction

Rational = Fraction

__all__ = ["Rational", "as_rational", "parse_rational", "format_rational"]


def as_rational(value) -> Fraction:
    """Coerce *value* to an exact Fraction.

    Accepts Fraction, int, Decimal, or a string ("3/4", "-2", "0.25",
    "1e-3").  Binary floats are rejected: Fraction(0.1) is not 1/10, and a
    silently inexact parameter would break every exact-equality check
    downstream.  Pass a string or Fraction instead.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Decimal)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise TypeError(
            f"refusing to convert float {value!r} to an exact rational; "
            f"pass a string like {str(value)!r} or a Fraction"
        )
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse the wire format: "p/q", an integer, or an exact decimal literal."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational literal: {text!r}") from exc


def format_rational(value: Fraction) -> str:
    """Render as "p/q", or just "p" when the denominator is 1."""
    value = as_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
