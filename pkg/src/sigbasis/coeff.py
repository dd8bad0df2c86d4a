"""Exact rational coefficients.

Values are ``gmpy2.mpq`` instances: arbitrary precision, always reduced,
sign carried by the numerator, zero stored as 0/1.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Optional, Union

from gmpy2 import mpq

Rational = type(mpq(0))

RationalLike = Union[int, Fraction, "Rational", str]

ZERO = mpq(0)
ONE = mpq(1)

_RAT_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


class ArithmeticDomainError(ZeroDivisionError):
    """Raised when dividing by or inverting zero."""


def rat(value: RationalLike, denom: Optional[int] = None) -> Rational:
    """Build a canonical rational from an int, Fraction, mpq or "a/b" string."""
    if denom is not None:
        if denom == 0:
            raise ArithmeticDomainError("zero denominator")
        return mpq(int(value), int(denom))
    if isinstance(value, str):
        m = _RAT_RE.match(value)
        if m is None:
            raise ValueError(f"not a rational literal: {value!r}")
        num, den = m.group(1), m.group(2)
        if den is not None and int(den) == 0:
            raise ArithmeticDomainError("zero denominator")
        return mpq(int(num), int(den) if den else 1)
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    return mpq(value)


def rat_arith(op: str, a: RationalLike, b: Optional[RationalLike] = None) -> Rational:
    """Apply one field operation: add, sub, mul, div, neg or inv."""
    a = rat(a)
    if op == "neg":
        return -a
    if op == "inv":
        if a == 0:
            raise ArithmeticDomainError("inverse of zero")
        return 1 / a
    if b is None:
        raise TypeError(f"{op} needs two operands")
    b = rat(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise ArithmeticDomainError("division by zero")
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def is_canonical(r: Rational) -> bool:
    from math import gcd

    n, d = int(r.numerator), int(r.denominator)
    return d > 0 and gcd(abs(n), d) == 1 and (n != 0 or d == 1)


def format_rational(r: Rational) -> str:
    """Render as "a/b", or just "a" when the denominator is 1."""
    n, d = int(r.numerator), int(r.denominator)
    return str(n) if d == 1 else f"{n}/{d}"
