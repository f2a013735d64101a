from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from rmzv.laurent import (
    EmptyWindow,
    LaurentSeries,
    OutOfWindow,
    coeff_at,
    project_pole,
    project_power,
    series_add,
    series_mul,
)
from rmzv.ratfunc import DeltaSeries, RatFunc

d = RatFunc.delta()

rats = st.fractions(min_value=-4, max_value=4, max_denominator=5)
coeffs = st.one_of(
    rats.map(RatFunc.const),
    st.tuples(rats, rats).map(lambda t: t[0] * d + t[1]),
)


@st.composite
def series(draw, lo_min=-3, lo_max=0, min_len=7, max_len=8):
    lo = draw(st.integers(lo_min, lo_max))
    cs = draw(st.lists(coeffs, min_size=min_len, max_size=max_len))
    return LaurentSeries(lo, cs)


def test_spec_examples():
    a = LaurentSeries(-1, [1, 0, 0])
    b = LaurentSeries(0, [1, 1, 0])
    s = series_add(a, b)
    assert s.window == (-1, 2) or s.window == (-1, 1)
    assert s[-1] == 1 and s[0] == 1 and s[1] == 1
    p = series_mul(LaurentSeries(-1, [1, 2, 3]), LaurentSeries(-1, [1, 0, 0]))
    assert p.window == (-2, 0)
    assert [p[k] for k in (-2, -1, 0)] == [1, 2, 3]


def test_projection_examples():
    a = LaurentSeries(-2, [1, 2, 3, 4])
    assert project_pole(a) == LaurentSeries(-2, [1, 2, 0, 0])
    assert project_power(a) == LaurentSeries(-2, [0, 0, 3, 4])
    assert project_pole(a, 4).window == (-2, 4)


def test_window_errors():
    with pytest.raises(EmptyWindow):
        series_add(LaurentSeries(-3, [1]), LaurentSeries(0, [1]))
    with pytest.raises(OutOfWindow):
        coeff_at(LaurentSeries(0, [1, 2]), 2)
    assert coeff_at(LaurentSeries(0, [1, 2]), -5) == 0
    with pytest.raises(OutOfWindow):
        project_pole(LaurentSeries(-3, [1]), 0)
    with pytest.raises(EmptyWindow):
        LaurentSeries(0, [])


def test_render():
    assert str(LaurentSeries(-1, [-1, Fraction(-1, 2), Fraction(-1, 12)])) == "-1*e^-1 - 1/2 - 1/12*e"
    assert str(LaurentSeries(0, [0])) == "0"
    assert str(LaurentSeries(0, [d + 1])) == "(d + 1)"


@settings(max_examples=100)
@given(series())
def test_projectors_are_complementary_idempotents(a):
    P, Q = project_pole, project_power
    assert P(P(a)) == P(a)
    assert Q(Q(a)) == Q(a)
    assert series_add(P(a), Q(a)) == a
    assert P(Q(a)).valuation() is None


@settings(max_examples=100)
@given(series(), series())
def test_rota_baxter_weight_minus_one(a, b):
    P = project_pole
    lhs = series_mul(P(a), P(b))
    rhs = series_add(
        series_add(P(series_mul(a, P(b))), P(series_mul(P(a), b))),
        -P(series_mul(a, b)),
    )
    assert min(lhs.hi, rhs.hi) >= -1
    assert lhs.agrees_with(rhs)


@given(series(), series(), series())
def test_ring_laws(a, b, c):
    assert series_mul(a, b) == series_mul(b, a)
    assert series_mul(series_mul(a, b), c).agrees_with(series_mul(a, series_mul(b, c)))
    assert series_add(a, b) == series_add(b, a)
    left = series_mul(a, series_add(b, c))
    right = series_add(series_mul(a, b), series_mul(a, c))
    assert left.agrees_with(right)


@given(series(), st.integers(-3, 3))
def test_scalar_multiplication(a, k):
    assert (a * k).agrees_with(series_mul(a, LaurentSeries.scalar(RatFunc.const(k), 0, a.hi - a.lo)))


def test_delta_series_coefficients():
    one = DeltaSeries.const(1)
    a = LaurentSeries(-1, [one, DeltaSeries.affine_power(0, 1, -1, 2), one])
    b = a * 2
    assert b[0].agrees_with(2 / d)
    assert not project_pole(b)[0]
    assert project_pole(b)[-1] == 2
