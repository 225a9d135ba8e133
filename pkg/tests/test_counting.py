import pytest

from quartic_galois.counting import (
    BadReductionError,
    BudgetExceededError,
    _brute_count,
    count_points,
    l_polynomial,
)
from quartic_galois.curve import TernaryQuarticForm

CURVE = TernaryQuarticForm.bundled_curve()
FERMAT = TernaryQuarticForm({(4, 0, 0): 1, (0, 4, 0): 1, (0, 0, 4): 1})
KLEIN = TernaryQuarticForm({(3, 1, 0): 1, (0, 3, 1): 1, (1, 0, 3): 1})


def test_counts_match_brute_enumeration():
    for p, m in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1), (5, 2)]:
        assert count_points(CURVE, p, m) == _brute_count(CURVE, p, m)


def test_counts_match_brute_on_other_curves():
    for form in (FERMAT, KLEIN):
        for p, m in [(3, 1), (5, 1), (3, 2), (13, 1)]:
            assert count_points(form, p, m) == _brute_count(form, p, m)


def test_small_counts_exact():
    assert count_points(CURVE, 2, 1) == 6
    assert count_points(CURVE, 2, 2) == 8
    assert count_points(CURVE, 3, 1) == 5


def test_l_polynomial_small_primes():
    assert l_polynomial(CURVE, 2).triple() == (3, 6, 9)
    assert l_polynomial(CURVE, 3).triple() == (1, 2, 3)
    assert l_polynomial(CURVE, 5).triple() == (4, 10, 17)
    assert l_polynomial(CURVE, 17).triple() == (2, 9, 120)


def test_l_polynomial_counts_round_trip():
    for p in (2, 3, 5):
        lp = l_polynomial(CURVE, p)
        for m in (1, 2, 3):
            assert lp.point_count(m) == count_points(CURVE, p, m)


def test_weil_bound_on_counts():
    for p, m in [(2, 1), (3, 1), (5, 1), (5, 2), (17, 1)]:
        n = count_points(CURVE, p, m)
        q = p ** m
        assert abs(n - (q + 1)) ** 2 <= 36 * q


def test_l_polynomial_rejects_bad_reduction():
    for p in (7, 11, 83):
        with pytest.raises(BadReductionError):
            l_polynomial(CURVE, p)


def test_budget_enforced():
    with pytest.raises(BudgetExceededError):
        count_points(CURVE, 101, 4)


def test_worker_count_does_not_change_answer():
    for workers in (2, 4):
        assert count_points(CURVE, 17, 2, workers=workers) == count_points(
            CURVE, 17, 2
        )


def test_degenerate_chart_falls_back_to_enumeration():
    # no pure fourth power at all: every projective point has a zero
    # coordinate contribution; small fields go through brute enumeration
    form = TernaryQuarticForm({(3, 1, 0): 1, (1, 3, 0): 1, (0, 2, 2): 1})
    assert count_points(form, 3, 1) == _brute_count(form, 3, 1)
    with pytest.raises(BudgetExceededError):
        count_points(form, 101, 2)
