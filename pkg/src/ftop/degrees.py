"""Exact membership degrees: rationals in the closed unit interval.

A degree is a plain :class:`fractions.Fraction`, which already guarantees
the canonical reduced form, arbitrary precision, and exact comparison that
every downstream verdict depends on.  This module adds the range check and
the ``"p/q"`` wire format used by all serialized artifacts.  Floats are
refused everywhere: there is no tolerance anywhere in this package.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import DegreeRangeError

__all__ = ["ZERO", "ONE", "as_degree", "parse_rational", "format_rational"]

ZERO = Fraction(0)
ONE = Fraction(1)

_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/([1-9]\d*))?$")


def parse_rational(text: str) -> Fraction:
    """Parse the ``"p/q"`` (or bare ``"p"``) literal format.

    Only decimal integers with an optional positive denominator are
    accepted; anything else, including decimal-point notation, is a
    ``ValueError``.
    """
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ValueError(f"not a rational literal: {text!r} (expected p or p/q)")
    numerator, denominator = match.groups()
    return Fraction(int(numerator), int(denominator) if denominator else 1)


def format_rational(value: Fraction) -> str:
    """Render a Fraction in the reduced ``"p/q"`` (or ``"p"``) form."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def as_degree(value: Fraction | int | str) -> Fraction:
    """Coerce to an exact degree, rejecting anything outside ``[0, 1]``.

    Floats are rejected outright rather than converted: binary floats can
    silently shift a boundary comparison, and boundaries are exactly where
    openness verdicts are decided.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"degrees must be exact rationals, got {value!r}")
    degree = parse_rational(value) if isinstance(value, str) else Fraction(value)
    if degree < ZERO or degree > ONE:
        raise DegreeRangeError(f"degree {format_rational(degree)} outside [0, 1]")
    return degree
