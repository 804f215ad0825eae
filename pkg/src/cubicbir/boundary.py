"""Picard lattices of boundary strata, restriction dictionaries, effectivity criteria.

The restriction dictionaries are stored data. The normal-bundle arguments that
produce them (for example N = O(-1)^2 for the curves blown up in Y_BAR) are not
recomputed here; Table 3 is re-derived from the dictionaries by pairing on the
host divisor, which catches transcription errors in either direction.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from . import picard
from .errors import IncompatibleSpacesError
from .picard import DivisorClass, Space
from .rational import as_fractions, fmt


# -- lattices ------------------------------------------------------------------------


@dataclass(frozen=True)
class SurfaceLattice:
    """A surface Picard lattice with a diagonal intersection form."""

    name: str
    labels: tuple[str, ...]
    form: tuple[int, ...]

    def vector(self, **coeffs) -> tuple[Fraction, ...]:
        unknown = set(coeffs) - set(self.labels)
        if unknown:
            raise KeyError(f"unknown labels for {self.name}: {sorted(unknown)}")
        return tuple(Fraction(coeffs.get(n, 0)) for n in self.labels)

    def pair(self, d: Sequence, c: Sequence) -> Fraction:
        return sum((f * Fraction(x) * Fraction(y) for f, x, y in zip(self.form, d, c)), Fraction(0))


def blown_plane(k: int, h: str = "h", name: str | None = None) -> SurfaceLattice:
    """Bl_k P^2 with basis (h, e1..ek) and form diag(1, -1, ..., -1)."""
    return SurfaceLattice(name or f"Bl{k}", (h,) + tuple(f"e{i}" for i in range(1, k + 1)), (1,) + (-1,) * k)


@dataclass(frozen=True)
class BlownPlaneLattice:
    """Named curve configurations on a blown-up plane."""

    lattice: SurfaceLattice

    @property
    def h(self) -> str:
        return self.lattice.labels[0]

    def e(self, i: int) -> tuple[Fraction, ...]:
        return self.lattice.vector(**{f"e{i}": 1})

    def line_through(self, *points: int) -> tuple[Fraction, ...]:
        """Strict transform of the line through the given blown-up points."""
        kw = {self.h: 1}
        kw.update({f"e{i}": -1 for i in points})
        return self.lattice.vector(**kw)


# Bl7: four general points, then three on the diagonal lines; the six lines through
# three points and the three lines through two of the last three points
BL7_TRIPLE_LINES = ((1, 2, 5), (3, 4, 5), (1, 3, 6), (2, 4, 6), (1, 4, 7), (2, 3, 7))
BL7_PAIR_LINES = ((5, 6), (5, 7), (6, 7))
BL3_LINES = ((1, 2), (1, 3), (2, 3))


@dataclass(frozen=True)
class ProductLattice:
    """``S x P^1``: classes are S-classes plus a multiple of ``line_label`` (the class of S x pt)."""

    name: str
    surface: SurfaceLattice
    line_label: str

    @property
    def labels(self) -> tuple[str, ...]:
        return self.surface.labels + (self.line_label,)

    def vector(self, **coeffs) -> tuple[Fraction, ...]:
        line = Fraction(coeffs.pop(self.line_label, 0))
        return self.surface.vector(**coeffs) + (line,)

    def pair(self, d: Sequence, curve: "ProductCurve") -> Fraction:
        d = as_fractions(d)
        if curve.surface_class is None:
            return d[-1]
        return self.surface.pair(d[:-1], curve.surface_class)


@dataclass(frozen=True)
class ProductCurve:
    """``C_S x pt`` when ``surface_class`` is set, otherwise the fiber ``pt x P^1``."""

    lattice: str
    surface_class: tuple[Fraction, ...] | None


@dataclass(frozen=True)
class TripleLineLattice:
    """(P^1)^3 with hyperplane classes h1, h2, h3; curves are h_i h_j."""

    name: str = "A23"
    labels: tuple[str, ...] = ("h1", "h2", "h3")

    def pair(self, d: Sequence, i: int, j: int) -> Fraction:
        (k,) = {1, 2, 3} - {i, j}
        return Fraction(d[k - 1])


@dataclass(frozen=True)
class SymmetricLattice:
    """Lattice known only through sums of symmetric classes (no pairing stored)."""

    name: str
    labels: tuple[str, ...]


BL7 = BlownPlaneLattice(blown_plane(7, "h1", "Bl7"))
BL3 = BlownPlaneLattice(blown_plane(3, "h2", "Bl3"))
D_A2 = ProductLattice("a2", BL7.lattice, "h2")
D_A3 = ProductLattice("a3", BL3.lattice, "h1")
A23_LATTICE = TripleLineLattice()
A1_LATTICE = SymmetricLattice("A1", ("B2", "B3"))
# D_a: blowup of M_0,6-bar at 15 points and 45 lines
MZeroSixBlowupLattice = SymmetricLattice("a", ("F_ij,kl,mn", "F_ij,kl", "F_ij", "F_ijk"))
# D_b: blowup of (P^1)^3 at 27 points and 27 lines
BBlowupLattice = SymmetricLattice("b", ("F_p", "F_l", "F_s"))

LATTICES = {
    "a2": D_A2,
    "a3": D_A3,
    "a": MZeroSixBlowupLattice,
    "A1": A1_LATTICE,
    "A23": A23_LATTICE,
}
TARGETS = {Space.Y_TILDE: ("a", "a2", "a3"), Space.Y_BAR: ("A1", "A23")}


@dataclass(frozen=True)
class BoundaryClass:
    lattice: str
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", as_fractions(self.coeffs))

    def __add__(self, other: "BoundaryClass") -> "BoundaryClass":
        if other.lattice != self.lattice:
            raise IncompatibleSpacesError(f"{self.lattice} vs {other.lattice}")
        return BoundaryClass(self.lattice, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, s) -> "BoundaryClass":
        return BoundaryClass(self.lattice, tuple(Fraction(s) * a for a in self.coeffs))

    __rmul__ = __mul__

    def labelled(self) -> dict[str, Fraction]:
        return dict(zip(LATTICES[self.lattice].labels, self.coeffs))

    def to_json(self) -> dict:
        return {"lattice": self.lattice, "coeffs": {k: fmt(v) for k, v in self.labelled().items()}}


# -- restriction dictionaries -----------------------------------------------------


def _sum_triple_lines() -> tuple[Fraction, ...]:
    total = (Fraction(0),) * len(BL7.lattice.labels)
    for ijk in BL7_TRIPLE_LINES:
        total = tuple(a + b for a, b in zip(total, BL7.line_through(*ijk)))
    return total


def _a2(**kw) -> tuple[Fraction, ...]:
    return D_A2.vector(**kw)


def _a3(**kw) -> tuple[Fraction, ...]:
    return D_A3.vector(**kw)


E1_4 = {f"e{i}": 1 for i in range(1, 5)}
E5_7 = {f"e{i}": 1 for i in range(5, 8)}


def _scaled(d: Mapping[str, int], s: int) -> dict[str, int]:
    return {k: s * v for k, v in d.items()}


# B_a3 on D_a2 is the sum of the six lines l_ijk, 6h1 - 3(e1+..+e4) - 2(e5+e6+e7)
B_A3_ON_A2 = _sum_triple_lines() + (Fraction(0),)
# the form without the e5..e7 terms; kept to document that it does not reproduce Table 3
B_A3_ON_A2_UNCORRECTED = _a2(h1=6, **_scaled(E1_4, -3))

RESTRICTIONS: dict[str, dict[str, tuple[Fraction, ...]]] = {
    "a2": {
        "B_a": _a2(h2=2),
        "B_a2": _a2(h1=-7, h2=-1, **_scaled(E1_4, 3), **E5_7),
        "B_a3": B_A3_ON_A2,
        "B_a4": _a2(**E5_7),
        "B_b": _a2(**E1_4),
        "B_e": _a2(h1=3, h2=2, **_scaled(E5_7, -2)),
    },
    "a3": {
        "B_a": _a3(h2=3, e1=-2, e2=-2, e3=-2),
        "B_a2": _a3(e1=1, e2=1, e3=1),
        "B_a3": _a3(h1=-2, h2=-1),
        "B_a4": _a3(h1=1),
        "B_b": _a3(h1=2),
        "B_e": _a3(h1=1, h2=6, e1=-2, e2=-2, e3=-2),
    },
    # D_a: the self class of B_a is (-8, -7, -6, -3)/5 on the symmetric F-sums
    "a": {
        "B_a": as_fractions((Fraction(-8, 5), Fraction(-7, 5), Fraction(-6, 5), Fraction(-3, 5))),
        "B_a2": as_fractions((0, 0, 1, 0)),
        "B_a3": as_fractions((0, 1, 0, 0)),
        "B_a4": as_fractions((1, 0, 0, 0)),
        "B_b": as_fractions((0, 0, 0, 1)),
    },
    "A1": {
        "B_A1": (Fraction(4, 5), Fraction(-3, 5)),
        "B_A23": (Fraction(0), Fraction(1)),
    },
    "A23": {
        "B_A1": as_fractions((3, 3, 3)),
        "B_A23": as_fractions((-1, -1, -1)),
    },
}

# self-intersection class of an A1 divisor, (-B2 - 3B3)/5
A1_SELF_CLASS = (Fraction(-1, 5), Fraction(-3, 5))


def restrict(d: DivisorClass, target: str) -> BoundaryClass:
    """Restrict an invariant divisor to a boundary divisor of the given type."""
    if target not in RESTRICTIONS:
        raise KeyError(f"unknown boundary divisor type {target!r}")
    if target not in TARGETS.get(d.space, ()):
        raise IncompatibleSpacesError(f"no {target} divisor on {d.space.value}")
    table = RESTRICTIONS[target]
    n = len(LATTICES[target].labels)
    out = [Fraction(0)] * n
    for name, a in d.labelled().items():
        out = [x + a * y for x, y in zip(out, table[name])]
    return BoundaryClass(target, tuple(out))


def restrict_named(name: str, target: str) -> BoundaryClass:
    """Restriction of a named class (a basis divisor or ``B_e``)."""
    return BoundaryClass(target, RESTRICTIONS[target][name])


# -- curves on the host divisors ---------------------------------------------------


HOST_CURVES: dict[str, ProductCurve] = {
    "aa2a3": ProductCurve("a2", BL7.line_through(1, 2, 5)),
    "aa2a4": ProductCurve("a2", BL7.e(5)),
    "a2a3a4": ProductCurve("a2", None),
    "aa2b": ProductCurve("a2", BL7.e(1)),
    "aa2e": ProductCurve("a2", BL7.line_through(5, 6)),
    "aa3a4": ProductCurve("a3", BL3.line_through(1, 2)),
    "aa3b": ProductCurve("a3", BL3.line_through(1, 2)),
    "a2a3b": ProductCurve("a3", BL3.e(1)),
}


def pair_on_divisor(cls: BoundaryClass, curve: ProductCurve) -> Fraction:
    if cls.lattice != curve.lattice:
        raise IncompatibleSpacesError(f"class on {cls.lattice}, curve on {curve.lattice}")
    lattice = LATTICES[cls.lattice]
    if not isinstance(lattice, ProductLattice):
        raise IncompatibleSpacesError(f"{cls.lattice} has no stored curve pairing")
    return lattice.pair(cls.coeffs, curve)


def derive_table3() -> dict[str, tuple[Fraction, ...]]:
    """All 48 entries of the Y_TILDE pairing table, from the restriction dictionaries."""
    tags = picard.CURVE_TAGS[Space.Y_TILDE]
    rows = {}
    for name in picard.BASIS[Space.Y_TILDE] + ("B_e",):
        rows[name] = tuple(
            pair_on_divisor(restrict_named(name, HOST_CURVES[t].lattice), HOST_CURVES[t]) for t in tags
        )
    return rows


def derive_table1_a23_column() -> dict[str, Fraction]:
    """Pairings with the 2A1A23 curve, the curve h1 h2 inside an A23 divisor."""
    return {name: A23_LATTICE.pair(RESTRICTIONS["A23"][name], 1, 2) for name in picard.BASIS[Space.Y_BAR]}


def restrict_to_a(coeffs: Sequence) -> tuple[Fraction, ...]:
    """Closed form of the restriction of (c_a, c_a2, c_a3, c_a4, c_b) to D_a."""
    ca, ca2, ca3, ca4, cb = as_fractions(coeffs)
    return ((5 * ca4 - 8 * ca) / 5, (5 * ca3 - 7 * ca) / 5, (5 * ca2 - 6 * ca) / 5, (5 * cb - 3 * ca) / 5)


# -- effective cones ---------------------------------------------------------------------


@dataclass(frozen=True)
class EffectivityReport:
    lattice: str
    coeffs: tuple[Fraction, ...]
    effective: bool
    # inequalities a class with no fixed boundary component must satisfy
    necessary: dict[str, bool]
    # pairing with a moving curve, which is >= 0 for effective classes
    witness: tuple[str, Fraction] | None = None

    def to_json(self) -> dict:
        out = {
            "lattice": self.lattice,
            "coeffs": [fmt(c) for c in self.coeffs],
            "effective": self.effective,
            "necessary": self.necessary,
        }
        if self.witness is not None:
            out["witness"] = {"curve": self.witness[0], "value": fmt(self.witness[1])}
        return out


# tag -> (symmetric classes, necessary conditions, moving-curve witness)
def _bl9(c):
    return {"c2+c3>=c1": c[1] + c[2] >= c[0], "c1>=c2": c[0] >= c[1], "c1>=c3": c[0] >= c[2]}


def _da(c):
    return {"6c2>=7c3": 6 * c[1] >= 7 * c[2], "6c4>=3c3": 6 * c[3] >= 3 * c[2], "6c1>=8c3": 6 * c[0] >= 8 * c[2]}


def _db(c):
    return {
        "3c3>=c1": 3 * c[2] >= c[0],
        "3c2>=2c1": 3 * c[1] >= 2 * c[0],
        "c1>=c2": c[0] >= c[1],
        "2c3>=c2": 2 * c[2] >= c[1],
    }


EFFECTIVE_LATTICES: dict[str, tuple[tuple[str, ...], object, object]] = {
    "Bl7": (("sum e1..e4", "sum e5..e7", "sum l_ijk", "sum l_ij"), None, None),
    "Bl9P1xP1": (("sum e_pq", "sum h_p", "sum k_q"), _bl9, None),
    "P1xP1": (("h1", "h2"), None, None),
    "Bl3": (("sum e_i", "sum l_ij"), None, None),
    "BlP3": (("sum e_i", "sum e_ij", "sum h_ijk"), None, None),
    "P1xBl3": (("h1", "sum e_i", "sum l_ij"), None, None),
    "Bl7xP1": (("sum e1..e4", "sum e5..e7", "sum l_ijk", "sum l_ij", "h2"), None, None),
    "D_a": (MZeroSixBlowupLattice.labels, _da, ("C_conic", lambda c: 5 * c[2])),
    "D_b": (BBlowupLattice.labels, _db, None),
    "Y_TILDE": (picard.BASIS[Space.Y_TILDE], None, ("C_line", lambda c: 12 * c[0])),
}
BOUNDARY_LATTICE_TAGS = tuple(t for t in EFFECTIVE_LATTICES if t != "Y_TILDE")


def effective_test(tag: str, coeffs: Sequence) -> EffectivityReport:
    """Effectivity of a symmetric class: every listed lattice has the all-nonnegative criterion."""
    if tag not in EFFECTIVE_LATTICES:
        raise KeyError(f"unknown lattice tag {tag!r}")
    labels, necessary, witness = EFFECTIVE_LATTICES[tag]
    c = as_fractions(coeffs)
    if len(c) != len(labels):
        raise ValueError(f"{tag} takes {len(labels)} coefficients ({', '.join(labels)}), got {len(c)}")
    return EffectivityReport(
        lattice=tag,
        coeffs=c,
        effective=all(x >= 0 for x in c),
        necessary=necessary(c) if necessary else {},
        witness=(witness[0], witness[1](c)) if witness else None,
    )


def dictionaries_json() -> dict:
    """All restriction dictionaries with labelled coefficients, for audit."""
    return {
        target: {
            name: {k: fmt(v) for k, v in zip(LATTICES[target].labels, vec)} for name, vec in table.items()
        }
        for target, table in RESTRICTIONS.items()
    }
