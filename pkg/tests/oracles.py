"""Independent reference computations.

Nothing here imports the package under test. Each oracle recomputes a derived
quantity by brute force or symbolically (sympy); the frozen outputs live in
``frozen.py`` and both the oracles and the package are checked against them.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import cache, reduce
from math import gcd

import sympy
from sympy.combinatorics import Permutation, PermutationGroup

SIG = (1, -1, -1, -1, -1, -1, -1)
K = (-3, 1, 1, 1, 1, 1, 1)


def form(u, v):
    return sum(s * a * b for s, a, b in zip(SIG, u, v))


@cache
def all_roots():
    """Every vector in a box with v.K = 0 and v.v = -2 (both signs)."""
    box = itertools.product(range(-2, 3), repeat=7)
    return tuple(v for v in box if form(v, K) == 0 and form(v, v) == -2)


@cache
def positive_roots():
    # positive: h > 0, or h = 0 with first nonzero e-coefficient positive
    out = []
    for v in all_roots():
        if v[0] > 0 or (v[0] == 0 and next(x for x in v[1:] if x) > 0):
            out.append(v)
    return tuple(sorted(out))


@cache
def lines():
    box = itertools.product(range(-1, 3), *[range(-1, 2)] * 6)
    return tuple(sorted(v for v in box if form(v, v) == -1 and form(v, K) == -1))


@cache
def tritangents():
    minus_k = tuple(-x for x in K)
    return tuple(
        t
        for t in itertools.combinations(lines(), 3)
        if tuple(map(sum, zip(*t))) == minus_k
    )


def lines_per_tritangent_count():
    return sorted({sum(1 for t in tritangents() if ln in t) for ln in lines()})


def steiner_trihedra():
    """Triples of disjoint tritangents whose 9 lines also split into 3 other tritangents."""
    tris = [frozenset(t) for t in tritangents()]
    count = 0
    for a, b, c in itertools.combinations(tris, 3):
        if a & b or a & c or b & c:
            continue
        nine = a | b | c
        inside = [t for t in tris if t <= nine and t not in (a, b, c)]
        # look for a second partition of the nine lines
        if any(not (x & y or x & z or y & z) for x, y, z in itertools.combinations(inside, 3)):
            count += 1
    return count


def tritangent_signature(labels_vectors):
    t = frozenset(labels_vectors)
    tris = [frozenset(s) for s in tritangents()]
    common = sum(1 for s in tris if s != t and s & t)
    disjoint = sum(1 for s in tris if not s & t)
    return common, disjoint


def _reflect(v, a):
    c = form(v, a)
    return tuple(x + c * y for x, y in zip(v, a))


def weyl_order():
    ls = lines()
    idx = {v: i for i, v in enumerate(ls)}
    gens = [Permutation([idx[_reflect(v, a)] for v in ls]) for a in positive_roots()]
    return PermutationGroup(gens).order()


def orthogonal_tuple_counts():
    rs = positive_roots()
    out = []
    for k in range(1, 5):
        out.append(sum(1 for t in itertools.combinations(rs, k) if all(form(a, b) == 0 for a, b in itertools.combinations(t, 2))))
    return out


def a2_subsystems():
    """Rank-2 root subsystems with 6 roots, as frozensets of positive roots."""
    rs = set(all_roots())
    pos = set(positive_roots())
    found = set()
    for a, b in itertools.combinations(all_roots(), 2):
        if form(a, b) != 1:
            continue
        s = tuple(x + y for x, y in zip(a, b))
        if s in rs:
            found.add(frozenset(v for v in (a, b, s, *(tuple(-x for x in w) for w in (a, b, s))) if v in pos))
    return found


def a23_count():
    a2 = list(a2_subsystems())

    def orth(x, y):
        return all(form(u, v) == 0 for u in x for v in y)

    return sum(1 for x, y, z in itertools.combinations(a2, 3) if orth(x, y) and orth(x, z) and orth(y, z))


# -- cones -----------------------------------------------------------------------------


def _primitive(v):
    den = reduce(lambda a, b: a * b // gcd(a, b), (Fraction(x).denominator for x in v), 1)
    ints = [int(Fraction(x) * den) for x in v]
    g = reduce(gcd, (abs(x) for x in ints))
    return tuple(x // g for x in ints)


def brute_dual_rays(functionals):
    """Extreme rays of {x : f.x >= 0} for a pointed full-dimensional cone."""
    n = len(functionals[0])
    rays = set()
    for sub in itertools.combinations(functionals, n - 1):
        m = sympy.Matrix(sub)
        if m.rank() != n - 1:
            continue
        (v,) = m.nullspace()
        v = [sympy.Rational(x) for x in v]
        for sign in (1, -1):
            w = [sign * x for x in v]
            if all(sum(f_i * w_i for f_i, w_i in zip(f, w)) >= 0 for f in functionals):
                rays.add(_primitive([Fraction(int(x.p), int(x.q)) for x in w]))
    return sorted(rays)


# -- symbolic MMP tables ---------------------------------------------------------------

TABLE3_ROWS = {
    "B_a": (0, 0, -1, 2, 0, -1, 2, 0),
    "B_a2": (0, -1, 2, -1, -3, 2, -1, -5),
    "B_a3": (-2, 2, -1, 0, 3, -1, 0, 2),
    "B_a4": (1, -1, 0, 0, 0, 0, 0, 2),
    "B_b": (2, 0, 0, 0, -1, 0, 0, 0),
}
TAGS = ("aa2a3", "aa2a4", "aa3a4", "a2a3a4", "aa2b", "aa3b", "a2a3b", "aa2e")


def symbolic_table6():
    """Pairings of the printed pushforward-pullback formulas, as sympy expressions."""
    c, d = sympy.symbols("c d")
    A = -1 + 4 * c + 25 * d
    A2, A3, A4, B = 2 + 4 * c + 42 * d, 5 + 4 * c + 51 * d, 8 + 4 * c + 52 * d, 1 + 4 * c + 27 * d
    rows = {
        "M_BAR": (A, 2 * A, 3 * A, 4 * A, 3 * A),
        "Y_BAR": (A, 2 * A, 3 * A, 4 * A, B),
        "Y1": (A, 2 * A, 3 * A, A4, B),
        "Y2": (A, 2 * A, A3, A4, B),
        "Y_TILDE": (A, A2, A3, A4, B),
    }
    names = ("B_a", "B_a2", "B_a3", "B_a4", "B_b")
    out = {}
    for model, coeffs in rows.items():
        out[model] = {
            t: sympy.expand(sum(co * TABLE3_ROWS[n][k] for co, n in zip(coeffs, names)) / 4)
            for k, t in enumerate(TAGS)
        }
    return out, c, d


def symbolic_table6_affine():
    """The same table as (const, c, d) triples of Fractions."""
    table, c, d = symbolic_table6()
    out = {}
    for model, row in table.items():
        out[model] = {}
        for t, e in row.items():
            p = sympy.Poly(e, c, d)
            out[model][t] = tuple(
                Fraction(int(sympy.Rational(x).p), int(sympy.Rational(x).q))
                for x in (p.coeff_monomial(1), p.coeff_monomial(c), p.coeff_monomial(d))
            )
    return out


def brute_sbl_chamber(x, y):
    """Chamber by the sign of cross products with the fan rays, walked from (0,1) clockwise."""
    if x < 0 or y < 0:
        return "NOT_EFFECTIVE"

    def cross(r):
        return r[0] * y - r[1] * x  # > 0: (x,y) is counterclockwise of r

    # rays in clockwise order with the chamber ending at (and including) each ray
    if cross((1, 3)) > 0:
        return "B_A23"
    if cross((1, 1)) >= 0:
        return "EMPTY"
    if cross((5, 3)) >= 0:
        return "B_2A1"
    return "B_A1"


if __name__ == "__main__":  # pragma: no cover - prints the values frozen in frozen.py
    print("roots", len(positive_roots()), "lines", len(lines()), "tritangents", len(tritangents()))
    print("orthogonal tuples", orthogonal_tuple_counts())
    print("a23", a23_count(), "a2", len(a2_subsystems()))
    print("lines per tritangent", lines_per_tritangent_count())
    print("steiner trihedra", steiner_trihedra())
    e5 = (0, 0, 0, 0, 0, 1, 0)
    c6 = (2, -1, -1, -1, -1, -1, 0)
    l56 = (1, 0, 0, 0, 0, -1, -1)
    print("signature e5 c6 l56", tritangent_signature((e5, c6, l56)))
    print("weyl", weyl_order())
    tilde = [tuple(TABLE3_ROWS[n][k] for n in TABLE3_ROWS) for k in range(8)]
    print("nef tilde", brute_dual_rays(tilde))
    print("nef bar", brute_dual_rays([(-2, 2), (3, -1)]))
    for m, row in symbolic_table6()[0].items():
        print(m, row)
