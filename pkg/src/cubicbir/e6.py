"""E6 root system and the 27 lines on a cubic surface.

Everything lives in the rank 7 lattice ``Pic S = <h, e1, ..., e6>`` with the
form ``diag(+1, -1, ..., -1)``. Nothing here is a hardcoded count: the roots,
lines, tritangent planes and root subsystems are all produced by enumeration,
and the tests compare the sizes with the known values.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cache
from typing import Iterable, Sequence

from . import kernels

Vec = tuple[int, ...]

_LABEL_CLASS = {"ij": 0, "ijk": 1, "beta": 2}
_LINE_CLASS = {"e": 0, "c": 1, "l": 2}


@dataclass(frozen=True)
class PicLattice:
    """Picard lattice of a cubic surface (the blowup of 6 points in the plane)."""

    rank: int = 7
    labels: tuple[str, ...] = ("h", "e1", "e2", "e3", "e4", "e5", "e6")
    signature: tuple[int, ...] = (1, -1, -1, -1, -1, -1, -1)

    @property
    def canonical(self) -> Vec:
        return (-3, 1, 1, 1, 1, 1, 1)

    def pair(self, u: Sequence[int], v: Sequence[int]) -> int:
        return sum(s * a * b for s, a, b in zip(self.signature, u, v))

    def vector(self, h: int = 0, **es: int) -> Vec:
        v = [h] + [0] * 6
        for name, coeff in es.items():
            v[int(name[1:])] = coeff
        return tuple(v)


PIC = PicLattice()


def pair(u: Sequence[int], v: Sequence[int]) -> int:
    return PIC.pair(u, v)


@dataclass(frozen=True)
class Root:
    """Positive root, labelled ``ij`` (e_i - e_j), ``ijk`` (h - e_i - e_j - e_k) or ``beta``."""

    label: str
    vector: Vec

    @property
    def kind(self) -> str:
        if self.label == "beta":
            return "beta"
        return "ij" if len(self.label) == 2 else "ijk"

    @property
    def sort_key(self) -> tuple:
        idx = () if self.label == "beta" else tuple(int(ch) for ch in self.label)
        return (_LABEL_CLASS[self.kind], idx)

    def to_json(self) -> dict:
        return {"label": self.label, "vector": list(self.vector)}


@dataclass(frozen=True)
class LineClass:
    """One of the 27 lines: ``e_i``, ``c_i`` or ``l_ij``."""

    label: str
    vector: Vec

    @property
    def sort_key(self) -> tuple:
        return (_LINE_CLASS[self.label[0]], tuple(int(ch) for ch in self.label[1:]))

    def to_json(self) -> dict:
        return {"label": self.label, "vector": list(self.vector)}


@dataclass(frozen=True)
class TritangentTriple:
    lines: tuple[LineClass, LineClass, LineClass]

    @property
    def labels(self) -> tuple[str, str, str]:
        return tuple(ln.label for ln in self.lines)  # type: ignore[return-value]

    @property
    def shape(self) -> str:
        return "ecl" if self.lines[0].label[0] == "e" else "lll"

    def to_json(self) -> dict:
        return {"lines": [ln.to_json() for ln in self.lines]}


@dataclass(frozen=True)
class OrthogonalA1Tuple:
    roots: tuple[Root, ...]

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(r.label for r in self.roots)


@dataclass(frozen=True)
class A23Subsystem:
    """Three mutually orthogonal A2 subsystems; ``components`` hold positive roots."""

    components: tuple[tuple[Root, Root, Root], ...]

    @property
    def roots(self) -> tuple[Root, ...]:
        return tuple(sorted((r for comp in self.components for r in comp), key=lambda r: r.sort_key))

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(r.label for r in self.roots)


@dataclass(frozen=True)
class WeylElement:
    """Permutation of the 27 lines (indices into ``enumerate_lines()``)."""

    perm: tuple[int, ...]

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        # (self * other)(i) = self(other(i))
        return WeylElement(tuple(self.perm[j] for j in other.perm))

    def apply(self, line: LineClass) -> LineClass:
        lines = enumerate_lines()
        return lines[self.perm[_line_index()[line.vector]]]


# -- enumeration ---------------------------------------------------------------


@cache
def enumerate_roots() -> tuple[Root, ...]:
    """The 36 positive roots, ordered ij < ijk < beta then by indices."""
    roots = []
    for i, j in itertools.combinations(range(1, 7), 2):
        roots.append(Root(f"{i}{j}", PIC.vector(**{f"e{i}": 1, f"e{j}": -1})))
    for i, j, k in itertools.combinations(range(1, 7), 3):
        roots.append(Root(f"{i}{j}{k}", PIC.vector(1, **{f"e{i}": -1, f"e{j}": -1, f"e{k}": -1})))
    roots.append(Root("beta", (2, -1, -1, -1, -1, -1, -1)))
    K = PIC.canonical
    for r in roots:
        if pair(r.vector, r.vector) != -2 or pair(r.vector, K) != 0:
            raise AssertionError(f"{r.label} is not a root")
    return tuple(sorted(roots, key=lambda r: r.sort_key))


@cache
def _root_index() -> dict[Vec, int]:
    return {r.vector: i for i, r in enumerate(enumerate_roots())}


def root(label: str) -> Root:
    for r in enumerate_roots():
        if r.label == label:
            return r
    raise KeyError(f"unknown root label {label!r}")


def positive_index(v: Vec) -> int:
    """Index of the positive root equal to ``v`` or ``-v``."""
    idx = _root_index()
    if v in idx:
        return idx[v]
    return idx[tuple(-x for x in v)]


def all_root_vectors() -> list[Vec]:
    """All 72 roots, found by brute force over a bounded box (used as a cross-check)."""
    K = PIC.canonical
    found = []
    for v in itertools.product(range(-2, 3), *([range(-1, 2)] * 6)):
        if pair(v, v) == -2 and pair(v, K) == 0:
            found.append(tuple(v))
    return found


@cache
def enumerate_lines() -> tuple[LineClass, ...]:
    lines = []
    for i in range(1, 7):
        lines.append(LineClass(f"e{i}", PIC.vector(**{f"e{i}": 1})))
    for i in range(1, 7):
        v = [2] + [-1] * 6
        v[i] = 0
        lines.append(LineClass(f"c{i}", tuple(v)))
    for i, j in itertools.combinations(range(1, 7), 2):
        lines.append(LineClass(f"l{i}{j}", PIC.vector(1, **{f"e{i}": -1, f"e{j}": -1})))
    K = PIC.canonical
    for ln in lines:
        if pair(ln.vector, ln.vector) != -1 or pair(ln.vector, K) != -1:
            raise AssertionError(f"{ln.label} is not a line class")
    return tuple(sorted(lines, key=lambda ln: ln.sort_key))


@cache
def _line_index() -> dict[Vec, int]:
    return {ln.vector: i for i, ln in enumerate(enumerate_lines())}


def line(label: str) -> LineClass:
    for ln in enumerate_lines():
        if ln.label == label:
            return ln
    raise KeyError(f"unknown line label {label!r}")


@cache
def enumerate_tritangents() -> tuple[TritangentTriple, ...]:
    """Triples of pairwise meeting lines whose classes sum to -K."""
    lines = enumerate_lines()
    minus_k = tuple(-x for x in PIC.canonical)
    out = []
    for a, b, c in itertools.combinations(lines, 3):
        if tuple(x + y + z for x, y, z in zip(a.vector, b.vector, c.vector)) != minus_k:
            continue
        if pair(a.vector, b.vector) == pair(a.vector, c.vector) == pair(b.vector, c.vector) == 1:
            out.append(TritangentTriple((a, b, c)))
    return tuple(out)


def tritangent(labels: Iterable[str]) -> TritangentTriple:
    want = frozenset(labels)
    for t in enumerate_tritangents():
        if frozenset(t.labels) == want:
            return t
    raise KeyError(f"not a tritangent triple: {sorted(want)}")


@cache
def _orthogonality() -> tuple[frozenset[int], ...]:
    roots = enumerate_roots()
    return tuple(
        frozenset(j for j, s in enumerate(roots) if pair(r.vector, s.vector) == 0)
        for r in roots
    )


def orthogonality_degree(r: Root) -> int:
    """Number of positive roots orthogonal to ``r`` (``r`` itself never counts)."""
    return len(_orthogonality()[_root_index()[r.vector]])


@cache
def _orthogonal_index_tuples(k: int) -> tuple[tuple[int, ...], ...]:
    nbrs = _orthogonality()
    n = len(nbrs)
    out: list[tuple[int, ...]] = []

    def extend(current: tuple[int, ...], candidates: frozenset[int]) -> None:
        if len(current) == k:
            out.append(current)
            return
        for j in sorted(candidates):
            extend(current + (j,), frozenset(x for x in candidates & nbrs[j] if x > j))

    extend((), frozenset(range(n)))
    return tuple(out)


def enumerate_orthogonal_tuples(k: int) -> list[OrthogonalA1Tuple]:
    """All unordered k-sets of pairwise orthogonal positive roots, 1 <= k <= 4."""
    if not isinstance(k, int) or not 1 <= k <= 4:
        raise ValueError(f"k must be in 1..4, got {k!r}")
    roots = enumerate_roots()
    return [OrthogonalA1Tuple(tuple(roots[i] for i in t)) for t in _orthogonal_index_tuples(k)]


@cache
def enumerate_a2() -> tuple[tuple[int, int, int], ...]:
    """A2 subsystems as sorted triples of positive-root indices."""
    roots = enumerate_roots()
    found = set()
    for i, j in itertools.combinations(range(len(roots)), 2):
        p = pair(roots[i].vector, roots[j].vector)
        if p not in (1, -1):
            continue
        # a +- b is a root exactly when (a +- b)^2 = -2
        sign = 1 if p == 1 else -1
        third = tuple(a + sign * b for a, b in zip(roots[i].vector, roots[j].vector))
        found.add(tuple(sorted((i, j, positive_index(third)))))
    return tuple(sorted(found))


@cache
def _a23_index_triples() -> tuple[tuple[tuple[int, int, int], ...], ...]:
    a2s = enumerate_a2()
    ortho = _orthogonality()

    def orthogonal(x, y) -> bool:
        return all(b in ortho[a] for a in x for b in y)

    out = []
    for trip in itertools.combinations(a2s, 3):
        if orthogonal(trip[0], trip[1]) and orthogonal(trip[0], trip[2]) and orthogonal(trip[1], trip[2]):
            out.append(trip)
    return tuple(out)


def enumerate_a23() -> list[A23Subsystem]:
    roots = enumerate_roots()
    return [
        A23Subsystem(tuple(tuple(roots[i] for i in comp) for comp in trip))  # type: ignore[misc]
        for trip in _a23_index_triples()
    ]


def a23_containment() -> dict[str, list[int]]:
    """Root label -> indices of the A2^3 subsystems containing that A1."""
    index: dict[str, list[int]] = {r.label: [] for r in enumerate_roots()}
    for n, sub in enumerate(enumerate_a23()):
        for r in sub.roots:
            index[r.label].append(n)
    return index


# -- tritangent incidence ----------------------------------------------------------


def _meets(a: LineClass, b: LineClass) -> bool:
    return pair(a.vector, b.vector) == 1


def is_triad(t1: TritangentTriple, t2: TritangentTriple, t3: TritangentTriple) -> bool:
    """Pairwise line-disjoint tritangents whose nine lines regroup into three more tritangents.

    Each line of ``t1`` meets exactly one line of ``t2`` and one of ``t3``, and
    those three lines span a tritangent plane.
    """
    s1, s2, s3 = set(t1.labels), set(t2.labels), set(t3.labels)
    if s1 & s2 or s1 & s3 or s2 & s3:
        return False
    planes = {frozenset(t.labels) for t in enumerate_tritangents()}
    for x in t1.lines:
        ys = [y for y in t2.lines if _meets(x, y)]
        zs = [z for z in t3.lines if _meets(x, z)]
        if len(ys) != 1 or len(zs) != 1:
            return False
        if frozenset((x.label, ys[0].label, zs[0].label)) not in planes:
            return False
    return True


@cache
def _triad_indices() -> tuple[tuple[int, int, int], ...]:
    tris = enumerate_tritangents()
    label_sets = [set(t.labels) for t in tris]
    out = []
    for i, j in itertools.combinations(range(len(tris)), 2):
        if label_sets[i] & label_sets[j]:
            continue
        for k in range(j + 1, len(tris)):
            if not (label_sets[k] & label_sets[i]) and not (label_sets[k] & label_sets[j]):
                if is_triad(tris[i], tris[j], tris[k]):
                    out.append((i, j, k))
    return tuple(out)


def enumerate_triads() -> list[tuple[TritangentTriple, TritangentTriple, TritangentTriple]]:
    tris = enumerate_tritangents()
    return [(tris[i], tris[j], tris[k]) for i, j, k in _triad_indices()]


def tritangent_incidence(t: TritangentTriple) -> tuple[int, int, int]:
    """(others sharing a line, others sharing none, triads through ``t``)."""
    tris = enumerate_tritangents()
    me = tris.index(t)
    mine = set(t.labels)
    common = sum(1 for s in tris if s != t and mine & set(s.labels))
    disjoint = sum(1 for s in tris if not mine & set(s.labels))
    triads = sum(1 for tr in _triad_indices() if me in tr)
    return common, disjoint, triads


# -- Weyl group -----------------------------------------------------------------


def reflect(v: Sequence[int], alpha: Sequence[int]) -> Vec:
    """Reflection in the root ``alpha``: v + (v.alpha) alpha (alpha^2 = -2)."""
    c = pair(v, alpha)
    return tuple(a + c * b for a, b in zip(v, alpha))


@cache
def reflection_permutations() -> tuple[tuple[int, ...], ...]:
    """The 36 root reflections as permutations of the 27 lines."""
    lines = enumerate_lines()
    index = _line_index()
    perms = []
    for r in enumerate_roots():
        perms.append(tuple(index[reflect(ln.vector, r.vector)] for ln in lines))
    return tuple(perms)


def reflection_on_roots(alpha: Root) -> tuple[int, ...]:
    return tuple(positive_index(reflect(r.vector, alpha.vector)) for r in enumerate_roots())


@dataclass(frozen=True)
class WeylClosure:
    order: int
    orbit_sizes: dict[str, list[int]]
    backend: str


def _induced(perm: Sequence[int], items: Sequence[tuple[int, ...]]) -> tuple[int, ...]:
    where = {frozenset(x): n for n, x in enumerate(items)}
    return tuple(where[frozenset(perm[i] for i in x)] for x in items)


def weyl_closure() -> WeylClosure:
    """Order of the reflection group and its orbit sizes on several families."""
    line_gens = reflection_permutations()
    elements = kernels.group_closure(line_gens, 27)
    root_gens = [reflection_on_roots(r) for r in enumerate_roots()]
    line_idx = _line_index()
    tri_items = [tuple(line_idx[ln.vector] for ln in t.lines) for t in enumerate_tritangents()]
    tri_gens = [_induced(g, tri_items) for g in line_gens]
    quad_items = _orthogonal_index_tuples(4)
    quad_gens = [_induced(g, quad_items) for g in root_gens]

    def sizes(gens, n):
        return sorted((len(o) for o in kernels.orbit_partition(gens, n)), reverse=True)

    return WeylClosure(
        order=len(elements),
        orbit_sizes={
            "roots": sizes(root_gens, 36),
            "lines": sizes(line_gens, 27),
            "tritangents": sizes(tri_gens, len(tri_items)),
            "quadruples": sizes(quad_gens, len(quad_items)),
        },
        backend=kernels.BACKEND,
    )


def preserves_pairing(perm: Sequence[int]) -> bool:
    lines = enumerate_lines()
    return all(
        pair(lines[perm[i]].vector, lines[perm[j]].vector) == pair(lines[i].vector, lines[j].vector)
        for i in range(27)
        for j in range(27)
    )


# -- summaries ------------------------------------------------------------------


def counts() -> dict[str, int]:
    return {
        "roots": len(enumerate_roots()),
        "a23": len(enumerate_a23()),
        "tritangents": len(enumerate_tritangents()),
        "pairs": len(enumerate_orthogonal_tuples(2)),
        "triples": len(enumerate_orthogonal_tuples(3)),
        "quadruples": len(enumerate_orthogonal_tuples(4)),
    }


def to_json() -> str:
    return json.dumps(
        {
            "roots": [r.to_json() for r in enumerate_roots()],
            "lines": [ln.to_json() for ln in enumerate_lines()],
            "tritangents": [list(t.labels) for t in enumerate_tritangents()],
        },
        sort_keys=True,
    )
