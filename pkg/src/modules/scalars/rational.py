"""Exact rational coefficient field.

Every space in the library is a vector space over ``Fraction``; canonical form
(positive denominator, reduced, zero as 0/1) is maintained by ``Fraction``
itself, so the helpers below only add the field vocabulary, parsing and
the text form used on the wire.
"""

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Union

from src.common.exceptions import DomainError, MalformedInputError, ScalarDivisionError

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_RATIONAL_PATTERN = re.compile(r"^[+-]?\d+(/\d+)?$")


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise MalformedInputError(f"Not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise MalformedInputError(f"Not a rational: {value!r}")


def add(a: Fraction, b: Fraction) -> Fraction:
    return a + b


def sub(a: Fraction, b: Fraction) -> Fraction:
    return a - b


def mul(a: Fraction, b: Fraction) -> Fraction:
    return a * b


def neg(a: Fraction) -> Fraction:
    return -a


def inv(a: Fraction) -> Fraction:
    if a == 0:
        raise ScalarDivisionError("Cannot invert zero")
    return 1 / Fraction(a)


def div(a: Fraction, b: Fraction) -> Fraction:
    return a * inv(b)


@lru_cache(maxsize=None)
def factorial(m: int) -> int:
    if m < 0:
        raise DomainError(f"Factorial of negative integer: {m}")
    return math.factorial(m)


def inverse_factorial(m: int) -> Fraction:
    """Return 1/m! exactly."""
    return Fraction(1, factorial(m))


def binomial(n: int, m: int) -> int:
    if n < 0 or m < 0:
        return 0
    return math.comb(n, m)


def parse_rational(text: str) -> Fraction:
    """
    Parse the text form ``p/q`` (sign on p only) or bare ``p``.

    Raises:
        MalformedInputError: for anything else, including a zero denominator
    """
    text = text.strip()
    if not _RATIONAL_PATTERN.match(text):
        raise MalformedInputError(f"Not a rational: {text!r}")
    numerator, _, denominator = text.partition("/")
    if denominator and int(denominator) == 0:
        raise MalformedInputError(f"Zero denominator: {text!r}")
    return Fraction(int(numerator), int(denominator) if denominator else 1)


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
