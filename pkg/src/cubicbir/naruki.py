"""Stable base loci and birational models of invariant divisors on Y_BAR.

A class ``x B_A1 + y B_A23`` is located by its slope ``y / x`` against the
rays (0,1), (1,3), (1,1), (5,3), (1,0) of the effective cone.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .rational import parse_rational


class SblRegion(enum.Enum):
    EMPTY = "EMPTY"
    B_A23 = "B_A23"
    B_2A1 = "B_2A1"
    B_A1 = "B_A1"
    NOT_EFFECTIVE = "NOT_EFFECTIVE"


class ModelLabel(enum.Enum):
    Y_BAR_AMPLE = "Y_BAR_AMPLE"
    M_BAR = "M_BAR"
    W_CONTRACTION = "W_CONTRACTION"
    X_FLIP = "X_FLIP"
    POINT = "POINT"
    NONE = "NONE"


# base locus strata ordered by inclusion along each side of the nef cone
SBL_POSET = {
    SblRegion.EMPTY: 0,
    SblRegion.B_A23: 1,
    SblRegion.B_2A1: 1,
    SblRegion.B_A1: 2,
}
SBL_CHAINS = ((SblRegion.EMPTY, SblRegion.B_A23), (SblRegion.EMPTY, SblRegion.B_2A1, SblRegion.B_A1))


def _coords(x, y) -> tuple[Fraction, Fraction]:
    x = parse_rational(x) if isinstance(x, str) else Fraction(x)
    y = parse_rational(y) if isinstance(y, str) else Fraction(y)
    if x == 0 and y == 0:
        raise ValueError("the zero class has no chamber")
    return x, y


def _effective(x: Fraction, y: Fraction) -> bool:
    return x >= 0 and y >= 0


def classify_sbl(x, y) -> SblRegion:
    """Chamber of ``x B_A1 + y B_A23``.

    Closed nef chamber [(1,3), (1,1)]; (1,3)..(0,1] is B_A23; (1,1)..(5,3] is B_2A1;
    (5,3)..(1,0] is B_A1.
    """
    x, y = _coords(x, y)
    if not _effective(x, y):
        return SblRegion.NOT_EFFECTIVE
    # compare slopes by cross multiplication so x = 0 needs no special case
    if y > 3 * x:
        return SblRegion.B_A23
    if y >= x:
        return SblRegion.EMPTY
    if 5 * y >= 3 * x:
        return SblRegion.B_2A1
    return SblRegion.B_A1


def classify_model(x, y) -> ModelLabel:
    """Birational model ``Proj R(D)`` attached to ``x B_A1 + y B_A23``.

    The two boundary rays of the effective cone are sent to a point.
    """
    x, y = _coords(x, y)
    if not _effective(x, y):
        return ModelLabel.NONE
    if x == 0 or y == 0:
        return ModelLabel.POINT
    if y >= 3 * x:
        return ModelLabel.M_BAR
    if y > x:
        return ModelLabel.Y_BAR_AMPLE
    if y == x:
        return ModelLabel.W_CONTRACTION
    return ModelLabel.X_FLIP


@dataclass(frozen=True)
class FanRay:
    vector: tuple[int, int]
    label: str


@dataclass(frozen=True)
class FanChamber:
    between: tuple[tuple[int, int], tuple[int, int]]
    region: SblRegion
    label: str


FIGURE1_RAYS = (
    FanRay((0, 1), "B_A23"),
    FanRay((1, 3), "B_A1+3B_A23"),
    FanRay((1, 1), "B_A1+B_A23"),
    FanRay((5, 3), "5B_A1+3B_A23"),
    FanRay((1, 0), "B_A1"),
)


def figure1_data() -> tuple[tuple[FanRay, ...], tuple[FanChamber, ...]]:
    """Rays of the chamber fan and the base locus on each chamber between them."""
    chambers = []
    for r1, r2 in zip(FIGURE1_RAYS, FIGURE1_RAYS[1:]):
        mid = (r1.vector[0] + r2.vector[0], r1.vector[1] + r2.vector[1])
        region = classify_sbl(*mid)
        label = "empty" if region is SblRegion.EMPTY else region.value
        chambers.append(FanChamber((r1.vector, r2.vector), region, label))
    return FIGURE1_RAYS, tuple(chambers)


def figure1_json() -> dict:
    rays, chambers = figure1_data()
    return {
        "rays": [{"vector": list(r.vector), "label": r.label} for r in rays],
        "chambers": [{"between": [list(v) for v in c.between], "region": c.region.value} for c in chambers],
    }
