"""
Exact rational text handling shared by schemas and the CLI
"""
import re
from fractions import Fraction
from typing import Union

from ..exceptions import RationalFormatError

_FRACTION_RE = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")
_DECIMAL_RE = re.compile(r"^\s*[+-]?(\d+\.\d*|\.\d+)\s*$")

RationalLike = Union[Fraction, int, str]


def parse_rational(value: RationalLike) -> Fraction:
    """Parse "a/b" (b > 0) or a decimal such as "0.6" into an exact Fraction"""
    if isinstance(value, bool):
        raise RationalFormatError(f"Not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        # floats are never exact enough to certify ties
        raise RationalFormatError(
            f"Float {value!r} rejected; pass a string such as '3/5' or '0.6'"
        )
    if not isinstance(value, str):
        raise RationalFormatError(f"Not a rational: {value!r}")

    text = value.strip()
    if _FRACTION_RE.match(text):
        if "/" in text:
            num, den = (part.strip() for part in text.split("/", 1))
            if int(den) == 0:
                raise RationalFormatError(f"Zero denominator in {value!r}")
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    if _DECIMAL_RE.match(text):
        return Fraction(text)
    raise RationalFormatError(f"Malformed rational {value!r}; expected 'a/b' or a decimal")


def format_rational(value: Fraction) -> str:
    """Always "a/b", so machine output has a single shape"""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def to_decimal(value: Fraction) -> float:
    """Display-only float conversion"""
    return float(value)
