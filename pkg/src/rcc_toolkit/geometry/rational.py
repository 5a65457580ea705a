"""
Exact rational coordinates

Coordinates are ``fractions.Fraction`` values; the helpers below convert
from the JSON string form "num/den" and back.
"""

from fractions import Fraction
from typing import Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]


def to_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or "num/den" string to a Fraction"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise ValueError(f"not a rational: {value!r} (floats are not accepted)")


def parse_rational(text: str) -> Fraction:
    """Parse "3/4", "-1/4" or "2" into a reduced Fraction"""
    text = text.strip()
    try:
        if "/" in text:
            num, den = text.split("/", 1)
            if int(den) <= 0:
                raise ValueError
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except ValueError:
        raise ValueError(f"malformed rational: {text!r}")


def format_rational(q: RationalLike) -> str:
    """Serialize a rational as "num/den", or as a bare integer when whole"""
    q = to_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
