import pytest

from quartic_galois.curve import LPolynomial, TernaryQuarticForm

# the nine (a, b, c) triples of the bundled curve's L-polynomial table
LPOLY_TABLE = {
    2: (3, 6, 9),
    3: (1, 2, 3),
    5: (4, 10, 17),
    17: (2, 9, 120),
    19: (4, 18, 91),
    23: (5, 19, 53),
    41: (0, 42, -212),
    43: (3, -1, -43),
    73: (-4, -43, 581),
}


@pytest.fixture(scope="session")
def curve():
    return TernaryQuarticForm.bundled_curve()


@pytest.fixture(scope="session")
def lpolys():
    return [
        LPolynomial(p=p, a=a, b=b, c=c)
        for p, (a, b, c) in sorted(LPOLY_TABLE.items())
    ]


@pytest.fixture(scope="session")
def lpoly_map(lpolys):
    return {lp.p: lp for lp in lpolys}
