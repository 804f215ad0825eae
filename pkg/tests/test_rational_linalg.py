from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from cubicbir import linalg
from cubicbir.rational import fmt, parse_rational, parse_vector, primitive, primitive_line

small = st.integers(-6, 6)


class TestParse:
    @pytest.mark.parametrize("text,value", [("3", F(3)), ("-2/6", F(-1, 3)), (" 7 / 21 ", F(1, 3)), ("+4/2", F(2))])
    def test_accepts(self, text, value):
        assert parse_rational(text) == value

    @pytest.mark.parametrize("text", ["0.5", "1e3", "1/0", "", "a/b", "1//2", "nan"])
    def test_rejects(self, text):
        with pytest.raises(ValueError):
            parse_rational(text)

    def test_vector(self):
        assert parse_vector("1/2, -3") == (F(1, 2), F(-3))
        with pytest.raises(ValueError):
            parse_vector("1,,2")

    @given(st.fractions())
    def test_roundtrip(self, q):
        assert parse_rational(fmt(q)) == q


class TestPrimitive:
    def test_examples(self):
        assert primitive((2, 6)) == (1, 3)
        assert primitive((F(1, 4), F(3, 4))) == (1, 3)
        assert primitive((0, -2)) == (0, -1)
        assert primitive_line((0, -2)) == (0, 1)

    def test_zero(self):
        with pytest.raises(ValueError):
            primitive((0, 0))

    @given(st.lists(small, min_size=2, max_size=5).filter(any), st.integers(1, 9))
    def test_scale_invariant(self, v, s):
        assert primitive(v) == primitive([s * x for x in v])


class TestLinalg:
    @given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=1, max_size=5))
    def test_rank_nullspace_vs_sympy(self, rows):
        m = sympy.Matrix(rows)
        assert linalg.rank(rows) == m.rank()
        ns = linalg.nullspace(rows, 4)
        assert len(ns) == 4 - m.rank()
        for v in ns:
            assert all(sum(F(a) * b for a, b in zip(r, v)) == 0 for r in rows)

    def test_inverse_solve(self):
        a = [[2, 1], [1, 1]]
        inv = linalg.inverse(a)
        assert inv == [[1, -1], [-1, 2]]
        assert linalg.solve(a, [3, 2]) == [1, 1]

    def test_independent_rows(self):
        assert linalg.independent_rows([(1, 0), (2, 0), (0, 1)]) == [0, 2]
