from fractions import Fraction
from typing import Annotated

from pydantic import BeforeValidator, PlainSerializer

from ..utils.rational import parse_rational, format_rational

# Exact rational field: accepts Fraction, int, "a/b" or decimal text; dumps to "a/b" in JSON mode
Rational = Annotated[
    Fraction,
    BeforeValidator(parse_rational),
    PlainSerializer(format_rational, return_type=str, when_used="json"),
]
