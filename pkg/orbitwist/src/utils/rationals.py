"""
Exact rational text form: "p/q" with q > 0 and gcd(p, q) = 1.
"""

import re
from fractions import Fraction
from typing import Callable, Optional, Union

from orbitwist.src.errors import InvariantViolation, SchemaError

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+))?\s*$")

Number = Union[int, Fraction]


def parse_rational(
    text: Union[str, int],
    field: str = "rational",
    warn: Optional[Callable[[str], None]] = None,
) -> Fraction:
    """Parse "p/q" (or a bare integer) exactly.

    Non-canonical input such as "3/-2" or "2/4" is accepted and canonicalized;
    ``warn`` receives a note when that happens. A zero denominator is rejected.
    """
    if isinstance(text, bool):
        raise SchemaError(field, f"expected a rational, got {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise SchemaError(field, f"expected a rational string, got {text!r}")

    match = _RATIONAL_RE.match(text)
    if not match:
        raise SchemaError(field, f"not a rational: {text!r}")

    numerator = int(match.group(1))
    if match.group(2) is None:
        return Fraction(numerator)

    denominator = int(match.group(2))
    if denominator == 0:
        raise SchemaError(field, f"zero denominator in {text!r}")

    value = Fraction(numerator, denominator)
    canonical = format_rational(value)
    if warn is not None and canonical != text.strip().replace(" ", ""):
        warn(f"{field}: '{text}' canonicalized to '{canonical}'")
    return value


def format_rational(value: Number) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def as_integer(value: Number, what: str) -> int:
    """Return ``value`` as an int, raising InvariantViolation if it is not integral."""
    value = Fraction(value)
    if value.denominator != 1:
        raise InvariantViolation(f"{what} is not an integer: {format_rational(value)}")
    return value.numerator
