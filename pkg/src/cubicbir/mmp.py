"""Log minimal model program for (Y_TILDE, cB + dE).

``classify`` reads the model off five affine forms in (c, d). ``verify`` reaches
the same answer independently: it tests each candidate contraction for an
effective discrepancy and a pushforward that is positive exactly off the
contracted curves.
"""
from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import picard
from .errors import InternalInconsistencyError
from .picard import DivisorClass, Space
from .rational import fmt, parse_rational

C_MAX = Fraction(1)
D_MAX = Fraction(2, 3)


class MmpLabel(enum.Enum):
    NOT_EFFECTIVE = "NOT_EFFECTIVE"
    POINT = "POINT"
    M_BAR = "M_BAR"
    Y_BAR = "Y_BAR"
    Y1 = "Y1"
    Y2 = "Y2"
    Y_TILDE = "Y_TILDE"


@dataclass(frozen=True)
class MmpModel:
    label: MmpLabel
    contracted_curves: frozenset[str]
    space: Space | None = None


def _model(label: MmpLabel, space: Space | None, tags: Iterable[str]) -> MmpModel:
    return MmpModel(label, frozenset(tags), space)


MODELS: dict[MmpLabel, MmpModel] = {
    MmpLabel.M_BAR: _model(
        MmpLabel.M_BAR, Space.M_BAR, ("aa2a4", "aa3a4", "aa3b", "a2a3a4", "a2a3b", "aa2b")
    ),
    MmpLabel.Y_BAR: _model(MmpLabel.Y_BAR, Space.Y_BAR, ("aa2a4", "aa3a4", "aa3b", "a2a3a4", "a2a3b")),
    MmpLabel.Y1: _model(MmpLabel.Y1, Space.Y1, ("aa3a4", "aa3b", "a2a3a4", "a2a3b")),
    MmpLabel.Y2: _model(MmpLabel.Y2, Space.Y2, ("a2a3a4", "a2a3b")),
    MmpLabel.Y_TILDE: _model(MmpLabel.Y_TILDE, Space.Y_TILDE, ()),
}
MODEL_CHAIN = (MmpLabel.M_BAR, MmpLabel.Y_BAR, MmpLabel.Y1, MmpLabel.Y2, MmpLabel.Y_TILDE)
NOT_EFFECTIVE = _model(MmpLabel.NOT_EFFECTIVE, None, ())
POINT = _model(MmpLabel.POINT, None, ())


def model(label: MmpLabel) -> MmpModel:
    if label is MmpLabel.NOT_EFFECTIVE:
        return NOT_EFFECTIVE
    if label is MmpLabel.POINT:
        return POINT
    return MODELS[label]


@dataclass(frozen=True)
class LogPair:
    c: Fraction
    d: Fraction

    def __post_init__(self):
        c = parse_rational(self.c) if isinstance(self.c, str) else Fraction(self.c)
        d = parse_rational(self.d) if isinstance(self.d, str) else Fraction(self.d)
        if not (0 <= c <= C_MAX and 0 <= d <= D_MAX):
            raise ValueError(f"(c, d) = ({c}, {d}) lies outside [0, 1] x [0, 2/3]")
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)


def delta_class(p: LogPair) -> DivisorClass:
    """K + cB + dE on Y_TILDE, written out coefficientwise."""
    c, d = p.c, p.d
    num = (-1 + 4 * c + 25 * d, 2 + 4 * c + 42 * d, 5 + 4 * c + 51 * d, 8 + 4 * c + 52 * d, 1 + 4 * c + 27 * d)
    return DivisorClass(Space.Y_TILDE, tuple(x / 4 for x in num))


@dataclass(frozen=True)
class LcReport:
    c: Fraction
    d: Fraction
    log_canonical: bool
    # log discrepancy of the blowup of a triple Eckardt point
    discrepancy: Fraction
    threshold_ok: bool

    def to_json(self) -> dict:
        return {
            "c": fmt(self.c),
            "d": fmt(self.d),
            "log_canonical": self.log_canonical,
            "discrepancy": fmt(self.discrepancy),
            "threshold_ok": self.threshold_ok,
        }


def lc_check(c, d) -> LcReport:
    c = parse_rational(c) if isinstance(c, str) else Fraction(c)
    d = parse_rational(d) if isinstance(d, str) else Fraction(d)
    disc = 1 - 3 * d
    return LcReport(c, d, c <= C_MAX and d <= D_MAX, disc, disc >= -1)


# -- closed-form classifier ----------------------------------------------------------


def region_predicates(p: LogPair) -> dict[MmpLabel, bool]:
    c, d = p.c, p.d
    f1, f2, f3, f4, f5 = 4 * c + 25 * d, 2 * c + 12 * d, c + 4 * d, c + 3 * d, c + 2 * d
    return {
        MmpLabel.NOT_EFFECTIVE: f1 < 1,
        MmpLabel.POINT: f1 == 1,
        MmpLabel.M_BAR: f2 <= 1 and f1 > 1,
        MmpLabel.Y_BAR: f3 <= 1 and f2 > 1,
        MmpLabel.Y1: f4 <= 1 and f3 > 1,
        MmpLabel.Y2: f5 <= 1 and f4 > 1,
        MmpLabel.Y_TILDE: f5 > 1,
    }


def classify(p: LogPair) -> MmpModel:
    hits = [label for label, ok in region_predicates(p).items() if ok]
    if len(hits) != 1:
        raise InternalInconsistencyError(f"regions overlap or leave a gap at ({p.c}, {p.d}): {hits}")
    return model(hits[0])


# -- certificate-based verifier ----------------------------------------------------------


@dataclass(frozen=True)
class Candidate:
    label: MmpLabel
    roundtrip: tuple[Fraction, ...]
    discrepancy: tuple[Fraction, ...]
    pairings: dict[str, Fraction]
    discrepancy_effective: bool
    nef: bool
    zero_set: frozenset[str]
    certified: bool

    def to_json(self) -> dict:
        return {
            "model": self.label.value,
            "roundtrip": [fmt(x) for x in self.roundtrip],
            "discrepancy": [fmt(x) for x in self.discrepancy],
            "pairings": {k: fmt(v) for k, v in self.pairings.items()},
            "discrepancy_effective": self.discrepancy_effective,
            "nef": self.nef,
            "zero_set": sorted(self.zero_set),
            "certified": self.certified,
        }


@dataclass(frozen=True)
class Certificate:
    c: Fraction
    d: Fraction
    delta: tuple[Fraction, ...]
    candidates: tuple[Candidate, ...] = field(default=())
    reason: str = ""

    def to_json(self) -> dict:
        return {
            "c": fmt(self.c),
            "d": fmt(self.d),
            "delta": [fmt(x) for x in self.delta],
            "reason": self.reason,
            "candidates": [cand.to_json() for cand in self.candidates],
        }


def examine(delta: DivisorClass, label: MmpLabel) -> Candidate:
    m = MODELS[label]
    rt = picard.roundtrip(delta, m.space)
    disc = delta - rt
    pairs = picard.pairings(rt)
    zero = frozenset(t for t, v in pairs.items() if v == 0)
    eff = all(x >= 0 for x in disc.coeffs)
    nef = all(v >= 0 for v in pairs.values())
    return Candidate(label, rt.coeffs, disc.coeffs, pairs, eff, nef, zero, eff and nef and zero == m.contracted_curves)


def verify(p: LogPair) -> tuple[MmpModel, Certificate]:
    """Select the model whose contraction certifies ``delta_class(p)``."""
    delta = delta_class(p)
    if any(x < 0 for x in delta.coeffs):
        return NOT_EFFECTIVE, Certificate(p.c, p.d, delta.coeffs, reason="delta not effective")
    if picard.roundtrip(delta, Space.M_BAR).is_zero():
        return POINT, Certificate(p.c, p.d, delta.coeffs, reason="pushforward to M_BAR vanishes")
    cands = tuple(examine(delta, label) for label in MODEL_CHAIN)
    good = [cand for cand in cands if cand.certified]
    cert = Certificate(p.c, p.d, delta.coeffs, cands)
    if len(good) != 1:
        raise InternalInconsistencyError(
            f"{len(good)} models certified at ({p.c}, {p.d})", certificate=cert.to_json()
        )
    return MODELS[good[0].label], Certificate(p.c, p.d, delta.coeffs, cands, reason="certified")


def grid(ni: int = 40, nj: int = 40, di: int = 40, dj: int = 60) -> list[LogPair]:
    """Points (i/di, j/dj) in row-major order."""
    return [LogPair(Fraction(i, di), Fraction(j, dj)) for i in range(ni + 1) for j in range(nj + 1)]


def _agree(p: LogPair) -> tuple[str, str]:
    return classify(p).label.value, verify(p)[0].label.value


def sweep(points: Sequence[LogPair], jobs: int = 1) -> list[tuple[LogPair, str, str]]:
    """(point, classify label, verify label) for every point, in input order."""
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            labels = list(ex.map(_agree, points, chunksize=64))
    else:
        labels = [_agree(p) for p in points]
    return [(p, a, b) for p, (a, b) in zip(points, labels)]


# -- Figure 2 ----------------------------------------------------------------------------------

Point = tuple[Fraction, Fraction]
# a half-plane a*c + b*d <= k
HalfPlane = tuple[Fraction, Fraction, Fraction]

BOUNDARY_FORMS: tuple[tuple[str, int, int], ...] = (
    ("4c+25d=1", 4, 25),
    ("2c+12d=1", 2, 12),
    ("c+4d=1", 1, 4),
    ("c+3d=1", 1, 3),
    ("c+2d=1", 1, 2),
)

RECTANGLE: tuple[Point, ...] = (
    (Fraction(0), Fraction(0)),
    (C_MAX, Fraction(0)),
    (C_MAX, D_MAX),
    (Fraction(0), D_MAX),
)


def _clip(poly: list[Point], hp: HalfPlane) -> list[Point]:
    """Sutherland-Hodgman step keeping a*c + b*d <= k."""
    a, b, k = hp
    out: list[Point] = []
    n = len(poly)
    for i in range(n):
        p, q = poly[i], poly[(i + 1) % n]
        fp, fq = a * p[0] + b * p[1] - k, a * q[0] + b * q[1] - k
        if fp <= 0:
            out.append(p)
        if (fp < 0 < fq) or (fq < 0 < fp):
            t = fp / (fp - fq)
            out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    dedup: list[Point] = []
    for pt in out:
        if not dedup or dedup[-1] != pt:
            dedup.append(pt)
    if len(dedup) > 1 and dedup[0] == dedup[-1]:
        dedup.pop()
    return dedup


def _below(a: int, b: int) -> HalfPlane:
    return (Fraction(a), Fraction(b), Fraction(1))


def _above(a: int, b: int) -> HalfPlane:
    return (Fraction(-a), Fraction(-b), Fraction(-1))


REGION_CONSTRAINTS: dict[MmpLabel, tuple[HalfPlane, ...]] = {
    MmpLabel.NOT_EFFECTIVE: (_below(4, 25),),
    MmpLabel.M_BAR: (_above(4, 25), _below(2, 12)),
    MmpLabel.Y_BAR: (_above(2, 12), _below(1, 4)),
    MmpLabel.Y1: (_above(1, 4), _below(1, 3)),
    MmpLabel.Y2: (_above(1, 3), _below(1, 2)),
    MmpLabel.Y_TILDE: (_above(1, 2),),
}


def region_polygon(label: MmpLabel) -> list[Point]:
    poly = list(RECTANGLE)
    for hp in REGION_CONSTRAINTS[label]:
        poly = _clip(poly, hp)
    return poly


def boundary_segment(a: int, b: int) -> tuple[Point, Point]:
    """The part of a*c + b*d = 1 inside the rectangle."""
    pts: set[Point] = set()
    for c in (Fraction(0), C_MAX):
        d = (1 - a * c) / b
        if 0 <= d <= D_MAX:
            pts.add((c, d))
    for d in (Fraction(0), D_MAX):
        c = (1 - b * d) / a
        if 0 <= c <= C_MAX:
            pts.add((c, d))
    lo, hi = min(pts), max(pts)
    return lo, hi


def axis_hits(a: int, b: int) -> dict[str, Fraction]:
    return {"c": Fraction(1, a), "d": Fraction(1, b)}


@dataclass(frozen=True)
class Figure2:
    lines: tuple[tuple[str, tuple[Point, Point], dict[str, Fraction]], ...]
    regions: tuple[tuple[MmpLabel, tuple[Point, ...]], ...]


def figure2_data() -> Figure2:
    lines = tuple((name, boundary_segment(a, b), axis_hits(a, b)) for name, a, b in BOUNDARY_FORMS)
    regions = tuple((label, tuple(region_polygon(label))) for label in REGION_CONSTRAINTS)
    return Figure2(lines, regions)


def figure2_json() -> dict:
    fig = figure2_data()

    def pt(p: Point) -> list[str]:
        return [fmt(p[0]), fmt(p[1])]

    return {
        "rectangle": [pt(p) for p in RECTANGLE],
        "lines": [
            {"equation": name, "segment": [pt(s[0]), pt(s[1])], "axis_hits": {k: fmt(v) for k, v in hits.items()}}
            for name, s, hits in fig.lines
        ],
        "regions": [{"model": label.value, "vertices": [pt(p) for p in poly]} for label, poly in fig.regions],
    }
