import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rmzv.exact import Composition, NumericFailure, bernoulli, mzv_numeric, zeta_nonpositive


def bernoulli_by_series(n):
    """B_0..B_n from inverting (e^x - 1)/x = sum x^k/(k+1)!."""
    h = [Fraction(1, math.factorial(k + 1)) for k in range(n + 1)]
    inv = [Fraction(1)]
    for k in range(1, n + 1):
        inv.append(-sum(h[j] * inv[k - j] for j in range(1, k + 1)))
    return [inv[k] * math.factorial(k) for k in range(n + 1)]


def test_bernoulli_small_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(12) == Fraction(-691, 2730)


def test_bernoulli_matches_generating_series():
    assert [bernoulli(n) for n in range(41)] == bernoulli_by_series(40)


@pytest.mark.parametrize("n", range(1, 41))
def test_bernoulli_recurrence(n):
    assert sum(math.comb(n + 1, k) * bernoulli(k) for k in range(n + 1)) == 0


@given(st.integers(min_value=1, max_value=60).map(lambda k: 2 * k + 1))
def test_odd_bernoulli_vanish(n):
    assert bernoulli(n) == 0


def test_bernoulli_rejects_negative():
    with pytest.raises(ValueError):
        bernoulli(-1)


def test_zeta_nonpositive_examples():
    assert zeta_nonpositive(0) == Fraction(-1, 2)
    assert zeta_nonpositive(-1) == Fraction(-1, 12)
    assert zeta_nonpositive(-2) == 0
    assert zeta_nonpositive(-3) == Fraction(1, 120)
    assert zeta_nonpositive(-11) == Fraction(691, 32760)


@given(st.integers(min_value=1, max_value=40))
def test_trivial_zeros(k):
    assert zeta_nonpositive(-2 * k) == 0


def test_zeta_nonpositive_rejects_positive():
    with pytest.raises(ValueError):
        zeta_nonpositive(1)


def test_composition_flags():
    assert Composition((2, 1)).convergent
    assert not Composition((1, 2)).convergent
    assert not Composition((2, 0)).convergent
    assert Composition((-1, -3)).weight == 4
    with pytest.raises(ValueError):
        Composition(())


def direct_zeta2_bounds(N=20000):
    s = sum(1.0 / (n * n) for n in range(1, N + 1))
    return s + 1.0 / (N + 1), s + 1.0 / N


def test_mzv_numeric_zeta2_against_direct_sum():
    lo, hi = direct_zeta2_bounds()
    v = mzv_numeric((2,))
    assert lo - 1e-12 <= v <= hi + 1e-12
    assert abs(v - math.pi**2 / 6) < 1e-12


def test_mzv_numeric_known_values():
    assert abs(mzv_numeric((3,)) - 1.2020569031595942) < 1e-12
    assert abs(mzv_numeric((4,)) - math.pi**4 / 90) < 1e-12
    assert abs(mzv_numeric((2, 2)) - math.pi**4 / 120) < 1e-12
    assert abs(mzv_numeric((3, 1)) - math.pi**4 / 360) < 1e-12


def test_euler_identity():
    tol = 1e-12
    assert abs(mzv_numeric((2, 1), tol) - mzv_numeric((3,), tol)) <= 2 * tol


def test_depth_three_sum_formula():
    # z(2,1,1) = z(4)
    assert abs(mzv_numeric((2, 1, 1)) - mzv_numeric((4,))) < 1e-11


def test_mzv_numeric_rejects_divergent_and_tight_tol():
    with pytest.raises(ValueError):
        mzv_numeric((1, 2))
    with pytest.raises(ValueError):
        mzv_numeric((2,), tol=1e-15)


def test_numeric_failure_is_arithmetic_error():
    assert issubclass(NumericFailure, ArithmeticError)
