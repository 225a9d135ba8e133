from fractions import Fraction

import pytest

from quartic_galois.series import (
    TruncatedSeries,
    abc_from_counts,
    series_exp,
    series_log,
    series_mul,
    series_of_log_counts,
)


def test_exp_of_zero_is_one():
    z = TruncatedSeries([0], 4)
    assert series_exp(z) == TruncatedSeries.one(4)


def test_exp_of_t():
    e = series_exp(TruncatedSeries([0, 1], 3))
    assert e.coeffs == (
        Fraction(1),
        Fraction(1),
        Fraction(1, 2),
        Fraction(1, 6),
    )


def test_exp_requires_zero_constant_term():
    with pytest.raises(ValueError):
        series_exp(TruncatedSeries([1, 1], 3))


def test_log_requires_unit_constant_term():
    with pytest.raises(ValueError):
        series_log(TruncatedSeries([0, 1], 3))


def test_exp_log_round_trip():
    for trunc in range(1, 7):
        s = TruncatedSeries([1, 2, -3, Fraction(1, 5), 7, 0, -2], trunc)
        assert series_exp(series_log(s)) == s
        t = TruncatedSeries([0, -1, Fraction(2, 3), 4, -5, 6, 7], trunc)
        assert series_log(series_exp(t)) == t


def test_mul_truncates():
    a = TruncatedSeries([1, 1, 1], 2)
    b = TruncatedSeries([1, -1], 2)
    assert series_mul(a, b) == TruncatedSeries([1, 0, 0], 2)


def test_log_counts_series():
    s = series_of_log_counts([6, 8, 12], 3)
    assert s.coeffs == (Fraction(0), Fraction(6), Fraction(4), Fraction(4))


def test_abc_from_counts_p2():
    # counts verified by exhaustive enumeration of P^2(F_2), P^2(F_4),
    # P^2(F_8) on the bundled curve
    assert abc_from_counts(2, [6, 8, 9]) == (3, 6, 9)


def test_abc_from_counts_p3():
    # counts derived by Newton power sums from (a,b,c) = (1,2,3) at p=3:
    # s1 = -1, s2 = -3, s3 = -4 -> N_m = 3^m + 1 - s_m
    assert abc_from_counts(3, [5, 13, 32]) == (1, 2, 3)


def test_abc_from_counts_needs_three_counts():
    with pytest.raises(ValueError):
        abc_from_counts(2, [6, 8])
