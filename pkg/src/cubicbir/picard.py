"""Invariant intersection calculus on the Naruki and KSBA compactifications.

Divisor classes are exact rational coefficient vectors over a fixed, named
basis of the W(E6)-invariant Picard group of each space. Curve classes are
the invariant boundary curve types; their pairings with the basis divisors
are stored tables.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping

from .errors import IncompatibleSpacesError, UnsupportedSpaceError
from .rational import as_fractions, fmt, primitive


class Space(enum.Enum):
    Y_BAR = "Y_BAR"
    Y_TILDE = "Y_TILDE"
    M_BAR = "M_BAR"
    Y1 = "Y1"
    Y2 = "Y2"


BASIS: dict[Space, tuple[str, ...]] = {
    Space.Y_BAR: ("B_A1", "B_A23"),
    Space.Y_TILDE: ("B_a", "B_a2", "B_a3", "B_a4", "B_b"),
    # intermediate models keep the images of the non-contracted boundary types
    Space.Y2: ("B_a", "B_a3", "B_a4", "B_b"),
    Space.Y1: ("B_a", "B_a4", "B_b"),
    Space.M_BAR: ("B_A1",),
}

CURVE_TAGS: dict[Space, tuple[str, ...]] = {
    Space.Y_BAR: ("C_3A1", "C_2A1A23"),
    Space.Y_TILDE: ("aa2a3", "aa2a4", "aa3a4", "a2a3a4", "aa2b", "aa3b", "a2a3b", "aa2e"),
}

# Table 1: rows are basis divisors of Y_BAR, columns the curve tags.
TABLE1: dict[str, dict[str, int]] = {
    "B_A1": {"C_3A1": -2, "C_2A1A23": 3},
    "B_A23": {"C_3A1": 2, "C_2A1A23": -1},
}

# Table 3: rows B_a..B_b and the Eckardt sum B_e; columns in CURVE_TAGS order.
TABLE3: dict[str, tuple[int, ...]] = {
    "B_a": (0, 0, -1, 2, 0, -1, 2, 0),
    "B_a2": (0, -1, 2, -1, -3, 2, -1, -5),
    "B_a3": (-2, 2, -1, 0, 3, -1, 0, 2),
    "B_a4": (1, -1, 0, 0, 0, 0, 0, 2),
    "B_b": (2, 0, 0, 0, -1, 0, 0, 0),
    "B_e": (1, 2, 2, 2, 0, 2, 2, -1),
}


def _check_space(space: Space) -> None:
    if space not in (Space.Y_BAR, Space.Y_TILDE):
        raise UnsupportedSpaceError(f"{space.value} has no stored curve pairings")


@dataclass(frozen=True)
class DivisorClass:
    space: Space
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", as_fractions(self.coeffs))
        if len(self.coeffs) != len(BASIS[self.space]):
            raise ValueError(
                f"{self.space.value} needs {len(BASIS[self.space])} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def of(cls, space: Space, *coeffs) -> "DivisorClass":
        return cls(space, tuple(coeffs))

    @classmethod
    def zero(cls, space: Space) -> "DivisorClass":
        return cls(space, (0,) * len(BASIS[space]))

    @classmethod
    def basis_element(cls, space: Space, name: str) -> "DivisorClass":
        names = BASIS[space]
        if name not in names:
            raise KeyError(f"{name} is not a basis divisor of {space.value}")
        return cls(space, tuple(int(n == name) for n in names))

    @classmethod
    def from_mapping(cls, space: Space, coeffs: Mapping[str, object]) -> "DivisorClass":
        unknown = set(coeffs) - set(BASIS[space])
        if unknown:
            raise KeyError(f"unknown basis labels for {space.value}: {sorted(unknown)}")
        return cls(space, tuple(coeffs.get(n, 0) for n in BASIS[space]))

    def _same(self, other: "DivisorClass") -> None:
        if not isinstance(other, DivisorClass):
            raise TypeError("expected a DivisorClass")
        if other.space is not self.space:
            raise IncompatibleSpacesError(f"{self.space.value} vs {other.space.value}")

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._same(other)
        return DivisorClass(self.space, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        self._same(other)
        return DivisorClass(self.space, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(self.space, tuple(-a for a in self.coeffs))

    def __mul__(self, scalar) -> "DivisorClass":
        s = Fraction(scalar)
        return DivisorClass(self.space, tuple(s * a for a in self.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "DivisorClass":
        return self * (1 / Fraction(scalar))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)

    def labelled(self) -> dict[str, Fraction]:
        return dict(zip(BASIS[self.space], self.coeffs))

    def to_json(self) -> dict:
        return {"space": self.space.value, "coeffs": {k: fmt(v) for k, v in self.labelled().items()}}


@dataclass(frozen=True)
class CurveClass:
    space: Space
    tag: str

    def __post_init__(self):
        _check_space(self.space)
        if self.tag not in CURVE_TAGS[self.space]:
            raise KeyError(f"unknown curve tag {self.tag!r} on {self.space.value}")


def curves(space: Space) -> list[CurveClass]:
    _check_space(space)
    return [CurveClass(space, t) for t in CURVE_TAGS[space]]


def _basis_pairing(space: Space, name: str, tag: str) -> int:
    if space is Space.Y_BAR:
        return TABLE1[name][tag]
    return TABLE3[name][CURVE_TAGS[space].index(tag)]


def pair(d: DivisorClass, c: CurveClass) -> Fraction:
    """Intersection number, extended bilinearly from the stored table."""
    if d.space is not c.space:
        raise IncompatibleSpacesError(f"divisor on {d.space.value}, curve on {c.space.value}")
    _check_space(d.space)
    return sum(
        (a * _basis_pairing(d.space, n, c.tag) for n, a in zip(BASIS[d.space], d.coeffs)),
        Fraction(0),
    )


def pairings(d: DivisorClass) -> dict[str, Fraction]:
    return {c.tag: pair(d, c) for c in curves(d.space)}


def functionals(space: Space) -> list[tuple[int, ...]]:
    """Curve classes as linear functionals on the divisor basis (one per tag)."""
    _check_space(space)
    names = BASIS[space]
    return [tuple(_basis_pairing(space, n, t) for n in names) for t in CURVE_TAGS[space]]


# -- named classes --------------------------------------------------------------


def canonical_class(space: Space) -> DivisorClass:
    if space is Space.Y_BAR:
        return DivisorClass.of(space, Fraction(-1, 4), Fraction(1, 4))
    if space is Space.Y_TILDE:
        return DivisorClass(space, tuple(Fraction(x, 4) for x in (-1, 2, 5, 8, 1)))
    raise UnsupportedSpaceError(f"no canonical class stored for {space.value}")


def eckardt_class(space: Space) -> DivisorClass:
    """Class of the sum of the 45 Eckardt divisors."""
    if space is Space.Y_BAR:
        return DivisorClass.of(space, Fraction(25, 4), Fraction(27, 4))
    if space is Space.Y_TILDE:
        return DivisorClass(space, tuple(Fraction(x, 4) for x in (25, 42, 51, 52, 27)))
    raise UnsupportedSpaceError(f"no Eckardt class stored for {space.value}")


def boundary_sum(space: Space) -> DivisorClass:
    return DivisorClass(space, (1,) * len(BASIS[space]))


# -- birational maps between the models --------------------------------------------

# pullback of each basis divisor of a model to Y_TILDE
_PULLBACK: dict[Space, dict[str, tuple[int, ...]]] = {
    Space.Y_TILDE: {n: tuple(int(n == m) for m in BASIS[Space.Y_TILDE]) for n in BASIS[Space.Y_TILDE]},
    Space.Y2: {"B_a": (1, 2, 0, 0, 0), "B_a3": (0, 0, 1, 0, 0), "B_a4": (0, 0, 0, 1, 0), "B_b": (0, 0, 0, 0, 1)},
    Space.Y1: {"B_a": (1, 2, 3, 0, 0), "B_a4": (0, 0, 0, 1, 0), "B_b": (0, 0, 0, 0, 1)},
    Space.Y_BAR: {"B_A1": (1, 2, 3, 4, 0), "B_A23": (0, 0, 0, 0, 1)},
    # g^* of the image of B_A1 on M_BAR is B_A1 + 3 B_A23: it must pair to zero
    # with the 2A1A23 curves inside the contracted A2^3 divisors
    Space.M_BAR: {"B_A1": (1, 2, 3, 4, 3)},
}

# which Y_TILDE basis divisor survives as each basis divisor of the model
_STRICT: dict[Space, dict[str, str]] = {
    Space.Y_TILDE: {n: n for n in BASIS[Space.Y_TILDE]},
    Space.Y2: {"B_a": "B_a", "B_a3": "B_a3", "B_a4": "B_a4", "B_b": "B_b"},
    Space.Y1: {"B_a": "B_a", "B_a4": "B_a4", "B_b": "B_b"},
    Space.Y_BAR: {"B_A1": "B_a", "B_A23": "B_b"},
    Space.M_BAR: {"B_A1": "B_a"},
}

MODELS = (Space.M_BAR, Space.Y_BAR, Space.Y1, Space.Y2, Space.Y_TILDE)


def pushforward(d: DivisorClass, model: Space) -> DivisorClass:
    """Push a Y_TILDE class down to ``model``: contracted divisors map to zero."""
    if d.space is not Space.Y_TILDE:
        raise IncompatibleSpacesError("pushforward starts on Y_TILDE")
    if model not in _STRICT:
        raise UnsupportedSpaceError(f"unknown model {model!r}")
    coeffs = d.labelled()
    return DivisorClass(model, tuple(coeffs[_STRICT[model][n]] for n in BASIS[model]))


def pullback(d: DivisorClass) -> DivisorClass:
    """Pull a class on any model back to Y_TILDE."""
    table = _PULLBACK[d.space]
    out = [Fraction(0)] * 5
    for name, a in zip(BASIS[d.space], d.coeffs):
        out = [x + a * y for x, y in zip(out, table[name])]
    return DivisorClass(Space.Y_TILDE, tuple(out))


def pullback_to_tilde(d: DivisorClass) -> DivisorClass:
    if d.space is not Space.Y_BAR:
        raise IncompatibleSpacesError(f"expected a Y_BAR class, got {d.space.value}")
    return pullback(d)


def roundtrip(d: DivisorClass, model: Space) -> DivisorClass:
    """``pi^* pi_* d`` for the contraction of Y_TILDE onto ``model``."""
    return pullback(pushforward(d, model))


# -- integrality on Y_BAR ------------------------------------------------------------


def is_integral(d: DivisorClass) -> bool:
    """A Q-divisor on Y_BAR is integral iff it pairs integrally with both boundary curves."""
    if d.space is not Space.Y_BAR:
        raise IncompatibleSpacesError("integrality test is for Y_BAR classes")
    return all(v.denominator == 1 for v in pairings(d).values())


def first_lattice_point(ray: DivisorClass) -> DivisorClass:
    """Smallest positive multiple of ``ray`` that is an integral divisor."""
    if ray.space is not Space.Y_BAR:
        raise IncompatibleSpacesError("first lattice point is for Y_BAR rays")
    if ray.is_zero():
        raise ValueError("zero ray")
    v = DivisorClass(Space.Y_BAR, primitive(ray.coeffs))
    vals = [int(x) for x in pairings(v).values()]
    g = gcd(*vals)
    # the pairing is nondegenerate, so g > 0
    return v / g


def parse_named(space: Space, text: str) -> DivisorClass:
    """``K``, ``E``, ``B``, ``0`` or a basis label, as a divisor class."""
    key = text.strip()
    if key == "K":
        return canonical_class(space)
    if key == "E":
        return eckardt_class(space)
    if key == "B":
        return boundary_sum(space)
    if key == "0":
        return DivisorClass.zero(space)
    return DivisorClass.basis_element(space, key)


def linear_combination(terms: Iterable[tuple[object, DivisorClass]]) -> DivisorClass:
    items = list(terms)
    if not items:
        raise ValueError("empty combination")
    total = DivisorClass.zero(items[0][1].space)
    for a, d in items:
        total = total + d * a
    return total
