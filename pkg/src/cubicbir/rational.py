"""Exact rational helpers shared by every module.

All numeric input and output in this package goes through these functions so
that no floating point value ever reaches a chamber boundary test.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*([+-]?\d+))?\s*$")

Rational = Fraction
Vector = tuple  # tuple[Fraction, ...] or tuple[int, ...]


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"n"``; decimals and exponents are rejected."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not an exact rational (expected p/q or n): {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def parse_vector(text: str) -> tuple[Fraction, ...]:
    """Parse a comma separated list of exact rationals."""
    parts = [p for p in text.split(",")]
    if not text.strip() or any(not p.strip() for p in parts):
        raise ValueError(f"malformed vector: {text!r}")
    return tuple(parse_rational(p) for p in parts)


def fmt(q) -> str:
    """Lowest-terms string with positive denominator; integers drop ``/1``."""
    return str(Fraction(q))


def fmt_vector(v: Iterable) -> list[str]:
    return [fmt(x) for x in v]


def as_fractions(v: Iterable) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in v)


def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise ValueError("dimension mismatch")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def primitive(v: Iterable) -> tuple[int, ...]:
    """Primitive integer vector on the same ray as ``v`` (direction kept)."""
    fr = as_fractions(v)
    if all(x == 0 for x in fr):
        raise ValueError("zero vector has no primitive representative")
    lcm = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in fr), 1)
    ints = [int(x * lcm) for x in fr]
    g = reduce(gcd, (abs(x) for x in ints))
    return tuple(x // g for x in ints)


def primitive_line(v: Iterable) -> tuple[int, ...]:
    """Primitive representative of the line through ``v``: first nonzero entry positive."""
    p = primitive(v)
    first = next(x for x in p if x != 0)
    return p if first > 0 else tuple(-x for x in p)
