import random
from math import prod

import pytest

from quartic_galois.fields import make_field
from quartic_galois.polys import (
    FqPoly,
    IntPoly,
    RatPoly,
    factor_fq,
    fq_resultant,
    int_resultant,
    is_irreducible_fq,
    is_irreducible_mod,
    multiplicative_order,
    rat_resultant,
)

F2 = make_field(2, 1)
F3 = make_field(3, 1)


def lpoly_int(p, a, b, c):
    """P_p(T) = T^6 + aT^5 + bT^4 + cT^3 + pbT^2 + p^2 a T + p^3."""
    return IntPoly([p ** 3, p ** 2 * a, p * b, c, b, a, 1])


P2 = lpoly_int(2, 3, 6, 9)
P17 = lpoly_int(17, 2, 9, 120)
P23 = lpoly_int(23, 5, 19, 53)
P73 = lpoly_int(73, -4, -43, 581)


# ---------------------------------------------------------------------------
# resultants


def test_resultant_trivial():
    assert int_resultant(IntPoly([0, 1]), IntPoly([-1, 1])) == -1


def test_resultant_rational_roots_case():
    # roots of x^2 - 1 are +-1; product of g there is (1+3-3)(-1+3-3) = -1
    f = IntPoly([-1, 0, 1])
    g = IntPoly([-3, 0, 3, 1])
    assert int_resultant(f, g) == -1


def test_resultant_swap_sign_and_multiplicativity():
    rng = random.Random(7)
    for _ in range(25):
        f = IntPoly([rng.randint(-5, 5) for _ in range(rng.randint(2, 5))])
        g = IntPoly([rng.randint(-5, 5) for _ in range(rng.randint(2, 5))])
        h = IntPoly([rng.randint(-5, 5) for _ in range(rng.randint(2, 5))])
        if f.is_zero() or g.is_zero() or h.is_zero() or f.degree < 1:
            continue
        sign = (-1) ** (f.degree * g.degree)
        assert int_resultant(f, g) == sign * int_resultant(g, f)
        if not (g * h).is_zero():
            assert int_resultant(f, g * h) == int_resultant(f, g) * int_resultant(
                f, h
            )


def _splitting_field_resultant_mod(f: IntPoly, g: IntPoly, ell: int) -> int:
    """Oracle: Res(f, g) mod ell by evaluating g at the roots of f in
    splitting extensions of F_ell (conjugates via Frobenius)."""
    Fl = make_field(ell, 1)
    fl = f.reduce_mod(ell, Fl)
    gl_int = [c % ell for c in g.coeffs]
    res = pow(f.lc(), g.degree, ell)
    for factor, mult in factor_fq(fl):
        d = factor.degree
        if d == 0:
            continue
        K = make_field(ell, d) if d > 1 else Fl
        fk = FqPoly.from_ints(K, factor.to_ints())
        gk = FqPoly.from_ints(K, gl_int)
        root = next(e for e in K.elements() if K.is_zero(fk(e)))
        val = K.one()
        r = root
        for _ in range(d):
            val = K.mul(val, gk(r))
            r = K.frobenius(r)
        v = val[0] if d == 1 or all(c == 0 for c in val[1:]) else None
        assert v is not None, "resultant value must lie in the prime field"
        res = res * pow(v, mult, ell) % ell
    # unit from the leading coefficient of f being absorbed per factor
    lead = fl.lc()[0]
    # factor_fq returns monic factors: f = lead * prod factors, so the
    # product over all roots of f is already covered; adjust nothing else.
    assert lead == f.lc() % ell
    return res % ell


def test_resultant_against_splitting_field_oracle():
    rng = random.Random(20260826)
    primes = [7, 11, 13, 17]  # small, so splitting-field scans stay cheap
    for _ in range(15):
        f = IntPoly([rng.randint(-9, 9) for _ in range(rng.randint(2, 5))])
        g = IntPoly([rng.randint(-9, 9) for _ in range(rng.randint(2, 5))])
        if f.degree < 1 or g.degree < 1:
            continue
        r = int_resultant(f, g)
        for ell in primes:
            if f.lc() % ell == 0 or g.lc() % ell == 0:
                continue
            assert r % ell == _splitting_field_resultant_mod(f, g, ell)


def test_resultant_reduction_compatibility():
    f, g = P2, P17
    for ell in (3, 5, 7, 13):
        r = int_resultant(f, g) % ell
        Fl = make_field(ell, 1)
        rl = fq_resultant(f.reduce_mod(ell, Fl), g.reduce_mod(ell, Fl))
        assert rl == (r % ell,)


def test_resultant_large_monic_fast_path():
    # (x-2)^70 against Q_2 = x^3 + 3x^2 - 3: the resultant is Q_2(2)^70
    h = IntPoly([1])
    lin = IntPoly([-2, 1])
    for _ in range(70):
        h = h * lin
    q = IntPoly([-3, 0, 3, 1])
    assert int_resultant(h, q) == 17 ** 70
    assert int_resultant(q, h) == 17 ** 70  # even degree product: same sign


def test_resultant_zero_poly_rejected():
    with pytest.raises(ValueError):
        int_resultant(IntPoly([]), IntPoly([1, 1]))


def test_rat_resultant_matches_scaled_int():
    from fractions import Fraction

    f = RatPoly([Fraction(1, 2), Fraction(1)])  # x + 1/2, root -1/2
    g = RatPoly([1, 0, 1])  # x^2 + 1
    # Res = lc(f)^2 * g(-1/2) = 5/4
    assert rat_resultant(f, g) == Fraction(5, 4)


# ---------------------------------------------------------------------------
# factorization over finite fields


def test_factor_p23_mod_2():
    f23 = P23.reduce_mod(2, F2)
    assert f23.to_ints() == [1, 1, 1, 1, 1, 1, 1]
    factors = factor_fq(f23)
    # x^6+...+1 = (x^3+x^2+1)(x^3+x+1) over F_2, in coefficient-sort order
    assert [(g.to_ints(), e) for g, e in factors] == [
        ([1, 0, 1, 1], 1),
        ([1, 1, 0, 1], 1),
    ]


def test_factor_p73_mod_2():
    f73 = P73.reduce_mod(2, F2)
    factors = factor_fq(f73)
    assert [(g.to_ints(), e) for g, e in factors] == [
        ([1, 1, 1], 1),
        ([1, 1, 1, 1, 1], 1),
    ]


def test_factor_x2_minus_1_mod_3():
    f = IntPoly([-1, 0, 1]).reduce_mod(3, F3)
    factors = factor_fq(f)
    assert [(g.to_ints(), e) for g, e in factors] == [([1, 1], 1), ([2, 1], 1)]


def test_factor_round_trip_random():
    rng = random.Random(99)
    for field in (F2, F3, make_field(3, 2), make_field(5, 1)):
        for _ in range(20):
            coeffs = [
                field.element_from_index(rng.randrange(field.order))
                for _ in range(rng.randint(2, 9))
            ]
            f = FqPoly(field, coeffs)
            if f.degree < 1:
                continue
            factors = factor_fq(f)
            rebuilt = FqPoly(field, [f.lc()])
            for g, e in factors:
                for _ in range(e):
                    rebuilt = rebuilt * g
            assert rebuilt == f
            assert all(is_irreducible_fq(g) for g, _ in factors)


def test_factor_pth_power():
    # (x^2 + 1)^3 over F_3 has zero derivative; the radical path must
    # still recover the base factor with multiplicity 3
    f = FqPoly.from_ints(F3, [1, 0, 1])
    cube = f * f * f
    factors = factor_fq(cube)
    assert [(g.to_ints(), e) for g, e in factors] == [([1, 0, 1], 3)]


def test_factor_zero_rejected():
    with pytest.raises(ValueError):
        factor_fq(FqPoly.zero(F2))


# ---------------------------------------------------------------------------
# irreducibility mod ell


def test_is_irreducible_mod_known_witnesses():
    assert is_irreducible_mod(P17, 3)
    assert is_irreducible_mod(P2, 7)
    assert is_irreducible_mod(P2, 11)
    assert is_irreducible_mod(P2, 41)
    assert not is_irreducible_mod(IntPoly([-1, 0, 1]), 5)


def test_is_irreducible_mod_agrees_with_factor_count():
    rng = random.Random(5)
    for _ in range(30):
        f = IntPoly([rng.randint(-6, 6) for _ in range(rng.randint(2, 6))])
        for ell in (3, 5, 7):
            if f.degree < 1 or f.lc() % ell == 0:
                continue
            factors = factor_fq(f.reduce_mod(ell))
            single = len(factors) == 1 and factors[0][1] == 1
            assert is_irreducible_mod(f, ell) == (
                single and factors[0][0].degree == f.degree
            )


def test_is_irreducible_mod_lc_vanishes():
    with pytest.raises(ValueError):
        is_irreducible_mod(IntPoly([1, 3]), 3)


# ---------------------------------------------------------------------------
# multiplicative order


def test_order_f23_is_7():
    assert multiplicative_order(P23.reduce_mod(2, F2)) == 7


def test_order_f73_is_15():
    assert multiplicative_order(P73.reduce_mod(2, F2)) == 15


def test_order_trivial():
    assert multiplicative_order(FqPoly.from_ints(F2, [1, 1])) == 1


def test_order_divides_and_is_minimal():
    for f, n in [
        (P23.reduce_mod(2, F2), 7),
        (P73.reduce_mod(2, F2), 15),
        (FqPoly.from_ints(F3, [1, 1]), 2),  # x + 1 divides x^2 - 1, not x - 1
    ]:
        F = f.field
        x = FqPoly.x(F)
        assert x.pow_mod(n, f) == FqPoly.one(F)
        for d in range(1, n):
            if n % d == 0:
                assert x.pow_mod(d, f) != FqPoly.one(F)


def test_order_rejects_bad_input():
    with pytest.raises(ValueError):
        multiplicative_order(FqPoly.from_ints(F2, [0, 1]))
    with pytest.raises(ValueError):
        multiplicative_order(FqPoly.from_ints(F2, [1, 0, 1]))  # (x+1)^2


# ---------------------------------------------------------------------------
# basic poly plumbing


def test_fqpoly_divmod_round_trip():
    rng = random.Random(3)
    F = make_field(5, 2)
    for _ in range(20):
        a = FqPoly(
            F, [F.element_from_index(rng.randrange(25)) for _ in range(6)]
        )
        b = FqPoly(
            F, [F.element_from_index(rng.randrange(25)) for _ in range(3)]
        )
        if b.is_zero():
            continue
        q, r = a.divmod(b)
        assert q * b + r == a
        assert r.degree < b.degree


def test_intpoly_pretty():
    assert P2.pretty() == "T^6 + 3*T^5 + 6*T^4 + 9*T^3 + 12*T^2 + 12*T + 8"
    assert IntPoly([]).pretty() == "0"
    assert IntPoly([-1, 1]).pretty("x") == "x - 1"
