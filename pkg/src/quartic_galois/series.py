"""Truncated formal power series over Q.

A :class:`TruncatedSeries` stores rational coefficients c_0..c_D; every
operation discards all terms of degree greater than D.  The only client
is the zeta-function congruence that turns point counts into the three
unknown L-polynomial coefficients, so the API is intentionally small:
multiplication, exponential, logarithm, and the count-to-coefficient
helper ``abc_from_counts``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Tuple


class TruncatedSeries:
    """Power series over Q truncated at degree D (inclusive)."""

    __slots__ = ("coeffs", "trunc")

    def __init__(self, coeffs: Sequence, trunc: int):
        if trunc < 0:
            raise ValueError("truncation degree must be >= 0")
        cs = [Fraction(c) for c in coeffs[: trunc + 1]]
        cs += [Fraction(0)] * (trunc + 1 - len(cs))
        self.coeffs = tuple(cs)
        self.trunc = trunc

    @classmethod
    def one(cls, trunc: int) -> "TruncatedSeries":
        return cls([1], trunc)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncatedSeries)
            and self.trunc == other.trunc
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.trunc, self.coeffs))

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        t = min(self.trunc, other.trunc)
        return TruncatedSeries(
            [a + b for a, b in zip(self.coeffs, other.coeffs)], t
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        t = min(self.trunc, other.trunc)
        return TruncatedSeries(
            [a - b for a, b in zip(self.coeffs, other.coeffs)], t
        )

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        t = min(self.trunc, other.trunc)
        out = [Fraction(0)] * (t + 1)
        for i, a in enumerate(self.coeffs[: t + 1]):
            if a:
                for j in range(t + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
        return TruncatedSeries(out, t)

    def __repr__(self):
        return "TruncatedSeries(%r, trunc=%d)" % (
            [str(c) for c in self.coeffs],
            self.trunc,
        )


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def series_exp(s: TruncatedSeries) -> TruncatedSeries:
    """Formal exponential; requires constant term 0.

    Uses the recursion (exp s)' = s' exp s, i.e.
    n e_n = sum_{k=1..n} k s_k e_{n-k}.
    """
    if s.coeffs[0] != 0:
        raise ValueError("series_exp requires zero constant term")
    t = s.trunc
    e = [Fraction(0)] * (t + 1)
    e[0] = Fraction(1)
    for n in range(1, t + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            acc += k * s.coeffs[k] * e[n - k]
        e[n] = acc / n
    return TruncatedSeries(e, t)


def series_log(s: TruncatedSeries) -> TruncatedSeries:
    """Formal logarithm; requires constant term 1.

    Uses n l_n = n s_n - sum_{k=1..n-1} k l_k s_{n-k}.
    """
    if s.coeffs[0] != 1:
        raise ValueError("series_log requires constant term 1")
    t = s.trunc
    l = [Fraction(0)] * (t + 1)
    for n in range(1, t + 1):
        acc = n * s.coeffs[n]
        for k in range(1, n):
            acc -= k * l[k] * s.coeffs[n - k]
        l[n] = acc / n
    return TruncatedSeries(l, t)


def series_of_log_counts(counts: Sequence[int], trunc: int) -> TruncatedSeries:
    """The log of the zeta function: sum_m N_m T^m / m, truncated."""
    coeffs = [Fraction(0)]
    for m, n_m in enumerate(counts, start=1):
        coeffs.append(Fraction(n_m, m))
    return TruncatedSeries(coeffs, trunc)


def abc_from_counts(p: int, counts: Sequence[int]) -> Tuple[int, int, int]:
    """Solve the zeta congruence for (a, b, c).

    Given N_m = |C(F_{p^m})| for m = 1, 2, 3, the numerator of the zeta
    function satisfies

        1 + a T + b T^2 + c T^3
            = (1 - T)(1 - pT) exp(sum_m N_m T^m / m)   (mod T^4).

    Returns the integer triple (a, b, c); raises if the series
    coefficients fail to be integers (a counting inconsistency).
    """
    if len(counts) < 3:
        raise ValueError("need counts over F_p, F_{p^2}, F_{p^3}")
    z = series_exp(series_of_log_counts(counts[:3], 3))
    denom = TruncatedSeries([1, -1], 3) * TruncatedSeries([1, -p], 3)
    num = denom * z
    out = []
    for c in num.coeffs[1:4]:
        if c.denominator != 1:
            raise ArithmeticError(
                "zeta congruence produced non-integer coefficient %s" % c
            )
        out.append(int(c))
    return tuple(out)  # type: ignore[return-value]
