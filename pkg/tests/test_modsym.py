from fractions import Fraction

import pytest
import sympy

from quartic_galois.etaproducts import ETA_NEWFORMS, newform_ap
from quartic_galois.modsym import (
    cuspidal_space,
    genus_x0,
    hecke_charpoly,
    hecke_charpolys_multimodular,
    hecke_matrix,
    p1_list,
    p1_normalize,
)

KNOWN_GENERA = {1: 0, 2: 0, 6: 0, 11: 1, 14: 1, 15: 1, 22: 2, 37: 2, 50: 2, 6391: 669}


def test_genus_known_values():
    for N, g in KNOWN_GENERA.items():
        assert genus_x0(N) == g


def test_genus_batch_under_200():
    # dimension of S_2(Gamma_0(N)) is nonnegative and grows roughly like N/12
    for N in range(1, 201):
        g = genus_x0(N)
        assert g >= 0
        assert g <= N // 6 + 1


def test_p1_size_is_psi():
    # |P^1(Z/N)| = N * prod_{p | N} (1 + 1/p)
    for N in (2, 6, 11, 12, 30, 49):
        psi = N
        for p in sympy.primefactors(N):
            psi = psi // p * (p + 1)
        assert len(p1_list(N)) == psi


def test_p1_normalize_is_canonical():
    N = 30
    for c, d in p1_list(N):
        for u in range(1, N):
            if sympy.gcd(u, N) == 1:
                assert p1_normalize(N, u * c % N, u * d % N) == (c, d)


def test_cuspidal_dimension_matches_genus():
    for N in (11, 14, 15, 22, 37, 50):
        space = cuspidal_space(N)
        assert space.genus == genus_x0(N)


def test_hecke_agrees_with_eta_newforms():
    # genus-1 levels: T_p acts as the scalar a_p of the unique newform
    for N, factors in ETA_NEWFORMS.items():
        space = cuspidal_space(N)
        for p in (2, 3, 5, 7, 11, 13):
            if N % p == 0:
                continue
            m = hecke_matrix(space, p)
            assert m == [[Fraction(newform_ap(factors, p))]]


def test_hecke_operators_commute():
    space = cuspidal_space(37)
    t2 = sympy.Matrix(hecke_matrix(space, 2))
    t3 = sympy.Matrix(hecke_matrix(space, 3))
    assert t2 * t3 == t3 * t2


def test_charpoly_level_37():
    space = cuspidal_space(37)
    # S_2(37) has two rational newforms with a_2 = -2 and 0:
    # charpoly(T_2) = (x+2)x = x^2 + 2x
    assert hecke_charpoly(space, 2).coeffs == (0, 2, 1)
    assert hecke_charpoly(space, 3).coeffs == (-3, 2, 1)


def test_multimodular_matches_exact():
    for N in (37, 67):
        space = cuspidal_space(N)
        exact = {p: hecke_charpoly(space, p).coeffs for p in (2, 3, 5)}
        multi = hecke_charpolys_multimodular(N, (2, 3, 5))
        assert {p: cp.coeffs for p, cp in multi.items()} == exact


def test_charpoly_satisfies_eichler_shimura_bound():
    # all roots of charpoly(T_p) lie in [-2 sqrt(p), 2 sqrt(p)]
    space = cuspidal_space(50)
    for p in (3, 7):
        cp = hecke_charpoly(space, p)
        x = sympy.symbols("x")
        poly = sum(c * x ** i for i, c in enumerate(cp.coeffs))
        for root in sympy.real_roots(poly):
            assert abs(float(root)) <= 2 * p ** 0.5 + 1e-9
