"""Exact rational (de)serialization as reduced ``"p/q"`` strings."""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable

_RAT = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or a Python int into a Fraction.

    Floats are rejected: every quantity in this package is exact.
    """
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"not a rational: {text!r}")
    m = _RAT.match(text)
    if m is None:
        raise ValueError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rational(x) -> str:
    # Fraction keeps q > 0 and gcd(|p|, q) = 1; integers print without "/1".
    return str(Fraction(x))


def format_vector(xs: Iterable) -> list[str]:
    return [format_rational(x) for x in xs]


def format_decimal(x, digits: int = 6) -> str:
    return f"~{float(Fraction(x)):.{digits}g}"
