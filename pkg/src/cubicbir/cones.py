"""Exact rational polyhedral cones: double description, duality, membership."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import picard
from .errors import UnsupportedSpaceError
from .linalg import independent_rows, inverse, nullspace, rank, row_space_basis
from .picard import DivisorClass, Space
from .rational import as_fractions, dot, primitive, primitive_line

IntVec = tuple[int, ...]


@dataclass(frozen=True)
class RationalCone:
    """Cone spanned by ``rays`` plus the linear subspace spanned by ``lineality``.

    ``rays`` are primitive integer vectors (direction kept). ``lineality`` holds a
    basis of the lineality space, normalized with first nonzero entry positive.
    """

    dim: int
    rays: tuple[IntVec, ...]
    lineality: tuple[IntVec, ...] = ()
    _facets: list = field(default_factory=list, compare=False, repr=False)

    @classmethod
    def from_generators(cls, dim: int, gens: Sequence[Sequence]) -> "RationalCone":
        clean = []
        for g in gens:
            if len(g) != dim:
                raise ValueError(f"generator {tuple(g)} is not of dimension {dim}")
            if any(x != 0 for x in g):
                clean.append(primitive(g))
        return cls(dim, tuple(sorted(set(clean))))

    @property
    def pointed(self) -> bool:
        return not self.lineality

    def generators(self) -> list[IntVec]:
        """Rays together with both signs of each lineality basis vector."""
        out = set(self.rays)
        for v in self.lineality:
            out.add(v)
            out.add(tuple(-x for x in v))
        return sorted(out)

    def facet_normals(self) -> list[IntVec]:
        """Functionals cutting out the cone (computed once, on demand)."""
        if not self._facets:
            gens = self.generators()
            if gens:
                self._facets.append(dual(gens, dim=self.dim).generators())
            else:
                # the zero cone: every coordinate functional and its negative
                unit = [tuple(int(i == j) for j in range(self.dim)) for i in range(self.dim)]
                self._facets.append(sorted(unit + [tuple(-x for x in u) for u in unit]))
        return self._facets[0]

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "rays": [list(r) for r in self.rays],
            "lineality": [list(v) for v in self.lineality],
        }


def _check_dims(vectors: Sequence[Sequence], dim: int | None) -> int:
    if not vectors:
        raise ValueError("need at least one functional")
    n = len(vectors[0]) if dim is None else dim
    if any(len(v) != n for v in vectors):
        raise ValueError("functionals have inconsistent dimensions")
    return n


def _dd_pointed(a: list[list[Fraction]]) -> list[list[Fraction]]:
    """Extreme rays of the pointed cone ``{y : a y >= 0}`` with ``a`` of full column rank."""
    r = len(a[0])
    basis_idx = independent_rows(a)
    start = [a[i] for i in basis_idx]
    inv = inverse(start)
    # columns of the inverse are the rays of the initial simplicial cone
    rays = [[inv[i][j] for i in range(r)] for j in range(r)]
    processed = list(basis_idx)
    for k in range(len(a)):
        if k in basis_idx:
            continue
        row = a[k]
        vals = [dot(row, y) for y in rays]
        pos = [y for y, v in zip(rays, vals) if v > 0]
        zero = [y for y, v in zip(rays, vals) if v == 0]
        neg = [(y, v) for y, v in zip(rays, vals) if v < 0]
        new = pos + zero
        for p, vp in ((y, v) for y, v in zip(rays, vals) if v > 0):
            for n, vn in neg:
                common = [a[i] for i in processed if dot(a[i], p) == 0 and dot(a[i], n) == 0]
                if rank(common) != r - 2:
                    continue
                # vp > 0 > vn, so this combination is a nonnegative one lying on the hyperplane
                new.append([vp * x - vn * y for x, y in zip(n, p)])
        rays = new
        processed.append(k)
    return rays


def dual(functionals: Sequence[Sequence], dim: int | None = None) -> RationalCone:
    """The cone ``{x : f . x >= 0 for every f}`` by double description."""
    n = _check_dims(functionals, dim)
    f = [list(as_fractions(v)) for v in functionals]
    lin = nullspace(f, n)
    lineality = tuple(sorted(primitive_line(v) for v in lin))
    span = row_space_basis(f)
    if not span:
        return RationalCone(n, (), lineality)
    # coordinates y on the row space: x = span^T y
    a = [[dot(fi, s) for s in span] for fi in f]
    ys = _dd_pointed(a)
    rays = set()
    for y in ys:
        x = [sum((yi * s[j] for yi, s in zip(y, span)), Fraction(0)) for j in range(n)]
        if any(x):
            rays.add(primitive(x))
    return RationalCone(n, tuple(sorted(rays)), lineality)


def contains(cone: RationalCone, v: Sequence) -> bool:
    if len(v) != cone.dim:
        raise ValueError(f"vector of dimension {len(v)} tested against a cone of dimension {cone.dim}")
    x = as_fractions(v)
    return all(dot(h, x) >= 0 for h in cone.facet_normals())


def same_cone(c1: RationalCone, c2: RationalCone) -> bool:
    """Equality as sets of points, via mutual containment of generators."""
    if c1.dim != c2.dim:
        return False
    return all(contains(c2, g) for g in c1.generators()) and all(contains(c1, g) for g in c2.generators())


def active_functionals(ray: Sequence, functionals: Sequence[Sequence]) -> list[int]:
    """Indices of the functionals vanishing on ``ray``."""
    return [i for i, f in enumerate(functionals) if dot(f, ray) == 0]


def is_extreme(ray: Sequence, functionals: Sequence[Sequence]) -> bool:
    """Certificate: nonnegative on all functionals and tight on ``dim - 1`` independent ones."""
    if any(dot(f, ray) < 0 for f in functionals):
        return False
    tight = [functionals[i] for i in active_functionals(ray, functionals)]
    return rank(tight) == len(ray) - 1


# -- the cones of the invariant divisor theory ---------------------------------------


def curve_functionals(space: Space) -> list[IntVec]:
    return picard.functionals(space)


def nef_cone(space: Space) -> RationalCone:
    return dual(curve_functionals(space))


def mori_cone(space: Space) -> RationalCone:
    """Cone of curves, in the coordinates dual to the divisor basis."""
    n = len(picard.BASIS[space])
    return RationalCone.from_generators(n, curve_functionals(space))


def effective_cone(space: Space) -> RationalCone:
    if space not in (Space.Y_BAR, Space.Y_TILDE):
        raise UnsupportedSpaceError(f"effective cone not available on {space.value}")
    n = len(picard.BASIS[space])
    return RationalCone.from_generators(n, [tuple(int(i == j) for j in range(n)) for i in range(n)])


def is_nef(d: DivisorClass) -> bool:
    return all(v >= 0 for v in picard.pairings(d).values())


def is_ample(d: DivisorClass) -> bool:
    return all(v > 0 for v in picard.pairings(d).values())


def is_effective(d: DivisorClass) -> bool:
    return contains(effective_cone(d.space), d.coeffs)
