from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubicbir import picard
from cubicbir.errors import IncompatibleSpacesError, UnsupportedSpaceError
from cubicbir.picard import CurveClass, DivisorClass, Space

YB, YT = Space.Y_BAR, Space.Y_TILDE
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=12)


def div(space, *c):
    return DivisorClass(space, c)


class TestPairing:
    def test_table_entries(self):
        assert picard.pair(DivisorClass.basis_element(YB, "B_A1"), CurveClass(YB, "C_3A1")) == -2
        assert picard.pair(DivisorClass.basis_element(YT, "B_a2"), CurveClass(YT, "aa2e")) == -5

    def test_zero(self):
        for c in picard.curves(YT):
            assert picard.pair(DivisorClass.zero(YT), c) == 0

    def test_space_mismatch(self):
        with pytest.raises(IncompatibleSpacesError):
            picard.pair(DivisorClass.zero(YB), CurveClass(YT, "aa2a3"))
        with pytest.raises(IncompatibleSpacesError):
            DivisorClass.zero(YB) + DivisorClass.zero(YT)

    def test_unknown_tag(self):
        with pytest.raises(KeyError):
            CurveClass(YT, "C_3A1")
        with pytest.raises(UnsupportedSpaceError):
            CurveClass(Space.Y1, "aa2a3")

    def test_merged_columns_agree_on_basis(self):
        for name in picard.BASIS[YT]:
            d = DivisorClass.basis_element(YT, name)
            p = picard.pairings(d)
            assert p["aa3a4"] == p["aa3b"]
            assert p["a2a3a4"] == p["a2a3b"]

    @given(st.tuples(*[rationals] * 5), st.tuples(*[rationals] * 5), rationals, rationals)
    def test_bilinear(self, u, v, a, b):
        d1, d2 = DivisorClass(YT, u), DivisorClass(YT, v)
        for c in picard.curves(YT):
            assert picard.pair(d1 * a + d2 * b, c) == a * picard.pair(d1, c) + b * picard.pair(d2, c)


class TestNamedClasses:
    def test_canonical(self):
        assert picard.canonical_class(YB).coeffs == (F(-1, 4), F(1, 4))
        assert picard.canonical_class(YT).coeffs == tuple(F(x, 4) for x in (-1, 2, 5, 8, 1))
        assert picard.pair(picard.canonical_class(YB), CurveClass(YB, "C_2A1A23")) == -1

    def test_eckardt(self):
        assert picard.eckardt_class(YB).coeffs == (F(25, 4), F(27, 4))
        e = picard.pairings(picard.eckardt_class(YT))
        assert e["aa2a3"] == 1
        assert tuple(e.values()) == picard.TABLE3["B_e"]

    def test_unsupported(self):
        with pytest.raises(UnsupportedSpaceError):
            picard.canonical_class(Space.M_BAR)
        with pytest.raises(UnsupportedSpaceError):
            picard.eckardt_class(Space.Y1)

    def test_log_canonical_identity(self):
        lhs = picard.canonical_class(YB) + picard.boundary_sum(YB) / 2
        assert lhs == div(YB, 1, 3) / 4


class TestPullbackRoundtrip:
    def test_pullback(self):
        assert picard.pullback_to_tilde(div(YB, 1, 0)).coeffs == (1, 2, 3, 4, 0)
        assert picard.pullback_to_tilde(div(YB, 0, 1)).coeffs == (0, 0, 0, 0, 1)
        with pytest.raises(IncompatibleSpacesError):
            picard.pullback_to_tilde(DivisorClass.zero(YT))

    def test_m_bar_polarization(self):
        pol = picard.pullback_to_tilde(div(YB, 1, 3))
        assert pol.coeffs == (1, 2, 3, 4, 3)
        assert picard.pairings(pol)["aa2a4"] == 0

    def test_projection_compatibility(self):
        contracted = ("aa2a4", "aa3a4", "aa3b", "a2a3a4", "a2a3b")
        for name in picard.BASIS[YB]:
            p = picard.pairings(picard.pullback_to_tilde(DivisorClass.basis_element(YB, name)))
            assert all(p[t] == 0 for t in contracted)

    @pytest.mark.parametrize("model", picard.MODELS)
    @given(u=st.tuples(*[rationals] * 5))
    def test_idempotent(self, model, u):
        d = DivisorClass(YT, u)
        once = picard.roundtrip(d, model)
        assert picard.roundtrip(once, model) == once

    def test_identity(self):
        d = div(YT, 1, 2, 3, 4, 5)
        assert picard.roundtrip(d, YT) == d

    def test_chain(self):
        a, a2, a3, a4, b = (F(x) for x in (3, 5, 7, 11, 13))
        d = div(YT, a, a2, a3, a4, b)
        assert picard.roundtrip(d, Space.Y2).coeffs == (a, 2 * a, a3, a4, b)
        assert picard.roundtrip(d, Space.Y1).coeffs == (a, 2 * a, 3 * a, a4, b)
        assert picard.roundtrip(d, YB).coeffs == (a, 2 * a, 3 * a, 4 * a, b)
        assert picard.roundtrip(d, Space.M_BAR).coeffs == (a, 2 * a, 3 * a, 4 * a, 3 * a)


class TestIntegrality:
    @pytest.mark.parametrize(
        "v,ok", [((F(1, 4), F(3, 4)), True), ((F(1, 2), F(1, 2)), True), ((F(1, 4), F(1, 4)), False)]
    )
    def test_examples(self, v, ok):
        assert picard.is_integral(DivisorClass(YB, v)) is ok

    @pytest.mark.parametrize(
        "ray,first", [((1, 3), (F(1, 4), F(3, 4))), ((1, 1), (F(1, 2), F(1, 2))), ((2, 6), (F(1, 4), F(3, 4)))]
    )
    def test_first_lattice_point(self, ray, first):
        assert picard.first_lattice_point(div(YB, *ray)).coeffs == first

    def test_zero_ray(self):
        with pytest.raises(ValueError):
            picard.first_lattice_point(DivisorClass.zero(YB))

    @given(st.integers(1, 6), st.integers(0, 6))
    def test_first_point_is_minimal(self, x, y):
        p = picard.first_lattice_point(div(YB, x, y))
        assert picard.is_integral(p)
        for k in range(2, 7):
            assert not picard.is_integral(p / k)


class TestJson:
    def test_labels(self):
        assert picard.canonical_class(YB).to_json() == {"space": "Y_BAR", "coeffs": {"B_A1": "-1/4", "B_A23": "1/4"}}
