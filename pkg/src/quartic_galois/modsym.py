"""Weight-2 modular symbols for Gamma_0(N), plus-quotient.

The space is presented by Manin symbols (c:d) over P^1(Z/N), subject to
the 2-term relation x + xS = 0, the 3-term relation x + xT + xT^2 = 0
(S = [[0,-1],[1,0]], T = [[0,-1],[1,-1]]), and the star identification
x = x.eta with eta = [[-1,0],[0,1]].  The involution relations are pure
sign bookkeeping (union-find); the 3-term relations are a sparse linear
system whose cokernel is the plus-quotient, of dimension
genus + (star-merged cusps) - 1.  The cuspidal subspace is the kernel
of the boundary map to star-merged cusp classes, of dimension equal to
the genus of X_0(N).

Hecke operators T_p (p not dividing N) act through the degeneracy coset
family [[1,k],[0,p]] (k = 0..p-1) and [[p,0],[0,1]], with each image
path {alpha, beta} re-expressed in Manin symbols by the
continued-fraction convergents of its endpoints (Manin's trick); the
path decomposition is integral and field-independent, so it is computed
once and reused by every arithmetic backend.

Two backends share the symbolic skeleton: an exact one over Fraction
for small levels, and a mod-q numpy backend whose characteristic
polynomials are CRT-lifted with verification moduli for the
hours-scale level 6391.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt, prod
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import sympy

from .polys import IntPoly

# ---------------------------------------------------------------------------
# genus of X_0(N)


def genus_x0(N: int) -> int:
    """1 + mu/12 - nu2/4 - nu3/3 - nu_inf/2 for Gamma_0(N)."""
    if N < 1:
        raise ValueError("level must be >= 1")
    ps = sympy.primefactors(N)
    mu = N
    for p in ps:
        mu = mu // p * (p + 1)
    if N % 4 == 0:
        nu2 = 0
    else:
        nu2 = 1
        for p in ps:
            nu2 *= 1 if p == 2 else (2 if p % 4 == 1 else 0)
    if N % 9 == 0:
        nu3 = 0
    else:
        nu3 = 1
        for p in ps:
            nu3 *= 1 if p == 3 else (2 if p % 3 == 1 else 0)
    nu_inf = sum(
        sympy.totient(gcd(d, N // d)) for d in sympy.divisors(N)
    )
    g = Fraction(12 + mu, 12) - Fraction(nu2, 4) - Fraction(nu3, 3) - Fraction(
        nu_inf, 2
    )
    assert g.denominator == 1
    return int(g)


# ---------------------------------------------------------------------------
# P^1(Z/N)


def p1_normalize(N: int, c: int, d: int) -> Optional[Tuple[int, int]]:
    """Canonical representative of (c:d) in P^1(Z/N), or None if the
    pair is not a projective point (gcd(c, d, N) > 1)."""
    if N == 1:
        return (0, 0)
    c %= N
    d %= N
    if gcd(gcd(c, d), N) != 1:
        return None
    if c == 0:
        return (0, 1)
    g = gcd(c, N)
    # scale c to g: s*c = g (mod N) for some unit s
    s = (sympy.mod_inverse(c // g, N // g) * 1) % (N // g)
    # any lift of s coprime to N works; adjust modulo N/g
    step = N // g
    while gcd(s, N) != 1:
        s += step
    d1 = s * d % N
    if g == 1:
        return (1, d1)
    # remaining freedom: units t = 1 (mod N/g) act by d1 -> t*d1
    best = d1
    for k in range(1, g):
        t = 1 + k * step
        if gcd(t, N) != 1:
            continue
        cand = t * d1 % N
        if cand < best:
            best = cand
    return (g, best)


def p1_list(N: int) -> List[Tuple[int, int]]:
    """All canonical representatives of P^1(Z/N), sorted."""
    if N == 1:
        return [(0, 0)]
    out = {(0, 1)}
    for d in range(N):
        out.add((1, d))
    for g in sympy.divisors(N):
        if g in (1, N):
            continue
        for d in range(N):
            if gcd(gcd(g, d), N) == 1:
                out.add(p1_normalize(N, g, d))
    return sorted(out)


def _lift_to_sl2z(N: int, c: int, d: int) -> Tuple[int, int, int, int]:
    """A matrix [[a,b],[c0,d0]] in SL_2(Z) with (c0, d0) = (c, d) mod N.

    Assumes a canonical P^1 representative, for which gcd(c, d) = 1 as
    integers (with (0,1) and (1,0) as the degenerate forms).
    """
    if N == 1:
        return (1, 0, 0, 1)
    if c == 0:
        return (1, 0, 0, 1) if d == 1 else (1, 0, 0, d)
    if d == 0:
        return (0, -1, 1, 0) if c == 1 else (0, -1, c, 0)
    x, y, g = sympy.gcdex(c, d)
    assert g == 1, "canonical representative should be a coprime pair"
    # x*c + y*d = 1 -> det [[y, -x], [c, d]] = y*d + x*c = 1
    return (int(y), int(-x), c, d)


# ---------------------------------------------------------------------------
# cusps


def _cusps_equivalent(
    N: int, a: Tuple[int, int], b: Tuple[int, int]
) -> bool:
    """Gamma_0(N)-equivalence of reduced cusps p/q (q >= 0, infinity =
    (1,0)): s1*q2 = s2*q1 (mod gcd(q1*q2, N)) with p_i*s_i = 1 mod q_i."""
    (p1, q1), (p2, q2) = a, b

    def s_of(p, q):
        if q == 0:
            return p  # p = +-1; p*p = 1
        if q == 1:
            return 0
        return int(sympy.mod_inverse(p % q, q))

    m = gcd(q1 * q2, N)
    if m == 0:
        m = N
    return (s_of(p1, q1) * q2 - s_of(p2, q2) * q1) % m == 0


def _reduce_cusp(num: int, den: int) -> Tuple[int, int]:
    if den == 0:
        return (1, 0)
    g = gcd(num, den)
    num, den = num // g, den // g
    if den < 0:
        num, den = -num, -den
    return (num, den)


# ---------------------------------------------------------------------------
# the field-independent skeleton


@dataclass
class _Skeleton:
    N: int
    symbols: List[Tuple[int, int]]
    index: Dict[Tuple[int, int], int]
    cls: List[int]  # symbol -> class id, or -1 if forced zero
    sgn: List[int]  # symbol -> sign relative to class representative
    n_classes: int
    class_rep: List[int]  # class id -> a symbol index with sign +1
    rows: List[Tuple[Tuple[int, int], ...]]  # 3-term relations, (class, coeff)
    cusp_reps: List[Tuple[int, int]]  # star-merged cusp classes
    boundary: List[Tuple[Tuple[int, int], ...]]  # class id -> (cusp, coeff)

    def sym_class(self, c: int, d: int) -> Tuple[int, int]:
        """(class id, sign) of the symbol (c:d); class -1 means zero."""
        key = p1_normalize(self.N, c, d)
        if key is None:
            return (-1, 0)
        i = self.index[key]
        return (self.cls[i], self.sgn[i])


def _build_sign_classes(symbols, index, N):
    n = len(symbols)
    parent = list(range(n))
    rel = [1] * n
    zero = [False] * n

    def find(i):
        path = []
        while parent[i] != i:
            path.append(i)
            i = parent[i]
        s = 1
        for j in reversed(path):
            s *= rel[j]
            parent[j] = i
            rel[j] = s
        return i

    def union(i, j, s):
        # impose value(i) = s * value(j)
        ri, rj = find(i), find(j)
        si, sj = rel[i], rel[j]
        if ri == rj:
            if si != s * sj:
                zero[ri] = True
            return
        parent[rj] = ri
        rel[rj] = si * s * sj
        if zero[rj]:
            zero[ri] = True

    for i, (c, d) in enumerate(symbols):
        xs = p1_normalize(N, d, -c)  # x.S
        union(i, index[xs], -1)  # x = -x.S
        xe = p1_normalize(N, -c, d)  # x.eta
        union(i, index[xe], 1)  # x = x.eta (plus quotient)

    cls = [-1] * n
    sgn = [0] * n
    class_rep: List[int] = []
    root_to_class: Dict[int, int] = {}
    for i in range(n):
        r = find(i)
        if zero[r]:
            continue
        if r not in root_to_class:
            root_to_class[r] = len(class_rep)
            class_rep.append(r)  # rel[r] = 1 by construction
        cls[i] = root_to_class[r]
        sgn[i] = rel[i]
    return cls, sgn, class_rep


@lru_cache(maxsize=None)
def skeleton(N: int) -> _Skeleton:
    symbols = p1_list(N)
    index = {s: i for i, s in enumerate(symbols)}
    cls, sgn, class_rep = _build_sign_classes(symbols, index, N)
    n_classes = len(class_rep)

    def sym_class(c, d):
        key = p1_normalize(N, c, d)
        i = index[key]
        return cls[i], sgn[i]

    rows = set()
    for (c, d) in symbols:
        acc: Dict[int, int] = {}
        for (cc, dd) in ((c, d), (d, -c - d), (-c - d, c)):
            k, s = sym_class(cc, dd)
            if k >= 0:
                acc[k] = acc.get(k, 0) + s
        row = tuple(sorted((k, v) for k, v in acc.items() if v))
        if not row:
            continue
        if row[0][1] < 0:
            row = tuple((k, -v) for k, v in row)
        rows.add(row)

    # boundary of each class representative
    cusp_reps: List[Tuple[int, int]] = []

    def cusp_class(num, den):
        cu = _reduce_cusp(num, den)
        for j, rep in enumerate(cusp_reps):
            if _cusps_equivalent(N, cu, rep) or _cusps_equivalent(
                N, (-cu[0], cu[1]), rep
            ):
                return j
        cusp_reps.append(cu)
        return len(cusp_reps) - 1

    boundary = []
    for r in class_rep:
        c, d = symbols[r]
        a, b, c0, d0 = _lift_to_sl2z(N, c, d)
        acc = {}
        # boundary of {g0, g inf} = [a/c0] - [b/d0]
        j1 = cusp_class(a, c0)
        acc[j1] = acc.get(j1, 0) + 1
        j2 = cusp_class(b, d0)
        acc[j2] = acc.get(j2, 0) - 1
        boundary.append(tuple(sorted((k, v) for k, v in acc.items() if v)))

    return _Skeleton(
        N=N,
        symbols=symbols,
        index=index,
        cls=cls,
        sgn=sgn,
        n_classes=n_classes,
        class_rep=class_rep,
        rows=sorted(rows),
        cusp_reps=cusp_reps,
        boundary=boundary,
    )


# ---------------------------------------------------------------------------
# Hecke path decomposition (field-independent, cached)


def _infty_path(num: int, den: int) -> List[Tuple[int, int]]:
    """Symbols (c, d) with {infinity, num/den} = sum of [(c:d)]."""
    if den == 0:
        return []
    quotients = []
    a, b = num, den
    while b:
        q = a // b
        quotients.append(q)
        a, b = b, a - q * b
    terms = []
    q_before = 0  # q_(-1)
    q_last = None  # q_(j-1) during iteration
    for j, aj in enumerate(quotients):
        if j == 0:
            q_j = 1
        else:
            q_j = aj * q_last + q_before
        # symbol for the path {p_(j-1)/q_(j-1), p_j/q_j}
        prev_q = q_last if j > 0 else 0  # q_(j-1); for j=0 it is q_(-1)=0
        s = 1 if (j - 1) % 2 == 0 else -1  # (-1)^(j-1)
        terms.append((q_j, s * prev_q))
        if j > 0:
            q_before = q_last
        q_last = q_j
    return terms


@lru_cache(maxsize=None)
def _hecke_paths(N: int, p: int, sym_index: int) -> Tuple[Tuple[int, int], ...]:
    """T_p applied to the sym_index-th canonical symbol, as a list of
    (symbol index, +-1) contributions; independent of the coefficient
    field."""
    sk = skeleton(N)
    c, d = sk.symbols[sym_index]
    a, b, c0, d0 = _lift_to_sl2z(N, c, d)
    # the underlying path is {alpha, beta} with alpha = g.0 = b/d0,
    # beta = g.infinity = a/c0 (denominator 0 means infinity)
    contributions: List[Tuple[int, int]] = []

    def add_endpoint(num, den, sign):
        if den < 0:
            num, den = -num, -den
        for (cc, dd) in _infty_path(num, den):
            key = p1_normalize(N, cc, dd)
            if key is None:
                continue
            contributions.append((sk.index[key], sign))

    for k in range(p):
        # [[1,k],[0,p]]: x -> (x + k)/p
        add_endpoint(a + k * c0, p * c0, 1)  # m.beta
        add_endpoint(b + k * d0, p * d0, -1)  # m.alpha
    # [[p,0],[0,1]]: x -> p*x
    add_endpoint(p * a, c0, 1)
    add_endpoint(p * b, d0, -1)
    return tuple(contributions)


# ---------------------------------------------------------------------------
# exact backend (Fraction linear algebra)


def _rref_exact(rows: List[List[Fraction]], ncols: int):
    mat = [row[:] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(mat)):
            if mat[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = Fraction(1) / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[: len(pivots)], pivots


@dataclass
class HeckeSpace:
    """Plus-quotient modular-symbol space of weight 2 for Gamma_0(N),
    with the cuspidal subspace isolated (exact backend)."""

    N: int
    manin_generators: List[Tuple[int, int]]
    dimension_plus: int
    genus: int
    _sk: _Skeleton
    _expr: List[List[Fraction]]  # class id -> coords in the quotient basis
    _free_classes: List[int]
    _kernel: List[List[Fraction]]  # D x g cuspidal basis (columns)
    _kernel_free_rows: List[int]

    @property
    def cuspidal_dimension(self) -> int:
        return self.genus


def cuspidal_space(N: int) -> HeckeSpace:
    """Exact plus-quotient cuspidal space; dimension = genus of X_0(N)."""
    sk = skeleton(N)
    ncls = sk.n_classes
    dense = [
        [Fraction(0)] * ncls for _ in range(len(sk.rows))
    ]
    for i, row in enumerate(sk.rows):
        for k, v in row:
            dense[i][k] = Fraction(v)
    rref, pivots = _rref_exact(dense, ncls)
    pivset = set(pivots)
    free = [c for c in range(ncls) if c not in pivset]
    D = len(free)
    pos = {c: j for j, c in enumerate(free)}
    expr = [[Fraction(0)] * D for _ in range(ncls)]
    for c in free:
        expr[c][pos[c]] = Fraction(1)
    for row, c in zip(rref, pivots):
        expr[c] = [-row[f] for f in free]

    # boundary matrix on the quotient basis: rows = free classes
    ncusp = len(sk.cusp_reps)
    bmat = [[Fraction(0)] * ncusp for _ in range(D)]
    for j, c in enumerate(free):
        for k, v in sk.boundary[c]:
            bmat[j][k] += v
    # cuspidal = null space of the transpose
    bt = [[bmat[j][k] for j in range(D)] for k in range(ncusp)]
    rref_b, piv_b = _rref_exact(bt, D)
    pivset_b = set(piv_b)
    free_b = [j for j in range(D) if j not in pivset_b]
    g = len(free_b)
    kernel = [[Fraction(0)] * g for _ in range(D)]
    for col, j in enumerate(free_b):
        kernel[j][col] = Fraction(1)
    for row, pj in zip(rref_b, piv_b):
        for col, j in enumerate(free_b):
            kernel[pj][col] = -row[j]

    expected = genus_x0(N)
    if g != expected:
        raise AssertionError(
            "cuspidal dimension %d at level %d does not match the genus "
            "formula value %d" % (g, N, expected)
        )
    return HeckeSpace(
        N=N,
        manin_generators=list(sk.symbols),
        dimension_plus=D,
        genus=g,
        _sk=sk,
        _expr=expr,
        _free_classes=free,
        _kernel=kernel,
        _kernel_free_rows=free_b,
    )


def _hecke_on_quotient_exact(space: HeckeSpace, p: int) -> List[List[Fraction]]:
    """T_p as a D x D matrix (columns = images of the basis generators)."""
    sk = space._sk
    D = space.dimension_plus
    cols = []
    for c in space._free_classes:
        rep = sk.class_rep[c]
        acc = [Fraction(0)] * D
        for sym_idx, sign in _hecke_paths(space.N, p, rep):
            k, s = sk.cls[sym_idx], sk.sgn[sym_idx]
            if k < 0:
                continue
            coeff = sign * s
            vec = space._expr[k]
            for t in range(D):
                if vec[t]:
                    acc[t] += coeff * vec[t]
        cols.append(acc)
    # matrix with columns cols
    return [[cols[j][i] for j in range(D)] for i in range(D)]


def hecke_matrix(space: HeckeSpace, p: int) -> List[List[Fraction]]:
    """T_p restricted to the cuspidal subspace (g x g, exact)."""
    if space.N % p == 0:
        raise ValueError("p = %d divides the level %d" % (p, space.N))
    T = _hecke_on_quotient_exact(space, p)
    D, g = space.dimension_plus, space.genus
    K = space._kernel
    # M = T.K (D x g)
    M = [
        [sum(T[i][j] * K[j][col] for j in range(D)) for col in range(g)]
        for i in range(D)
    ]
    # K has the identity on its free rows, so A = M restricted there
    A = [M[j] for j in space._kernel_free_rows]
    # verify stability: K.A == M
    for i in range(D):
        for col in range(g):
            v = sum(K[i][j] * A[j][col] for j in range(g))
            if v != M[i][col]:
                raise AssertionError(
                    "cuspidal subspace is not T_%d-stable at level %d"
                    % (p, space.N)
                )
    return A


@dataclass(frozen=True)
class HeckeCharPoly:
    N: int
    p: int
    coeffs: Tuple[int, ...]  # low degree first, monic

    def to_int_poly(self) -> IntPoly:
        return IntPoly(list(self.coeffs))


def hecke_charpoly(space: HeckeSpace, p: int) -> HeckeCharPoly:
    """Exact characteristic polynomial of T_p on the cuspidal space."""
    A = hecke_matrix(space, p)
    if not A:
        return HeckeCharPoly(N=space.N, p=p, coeffs=(1,))
    x = sympy.Symbol("x")
    poly = sympy.Matrix(A).charpoly(x)
    coeffs = list(reversed(poly.all_coeffs()))
    out = []
    for v in coeffs:
        r = sympy.Rational(v)
        if r.q != 1:
            raise AssertionError("non-integral Hecke characteristic polynomial")
        out.append(int(r))
    return HeckeCharPoly(N=space.N, p=p, coeffs=tuple(out))


# ---------------------------------------------------------------------------
# modular backend with CRT lifting


def _rref_mod(M: np.ndarray, q: int):
    M = M % q
    nrows, ncols = M.shape
    pivots = []
    r = 0
    for c in range(ncols):
        col = M[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        inv = pow(int(M[r, c]), -1, q)
        M[r] = M[r] * inv % q
        factors = M[:, c].copy()
        factors[r] = 0
        nzr = np.nonzero(factors)[0]
        if nzr.size:
            M[nzr] = (M[nzr] - factors[nzr, None] * M[r]) % q
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return M[: len(pivots)], pivots


def _charpoly_hessenberg_mod(A: np.ndarray, q: int) -> np.ndarray:
    """Characteristic polynomial coefficients (low degree first) of A
    mod q via Hessenberg reduction; q must be < 2^26 so int64 dot
    products cannot overflow."""
    H = A.copy() % q
    n = H.shape[0]
    if n == 0:
        return np.array([1], dtype=np.int64)
    for j in range(n - 2):
        col = H[j + 1 :, j]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        piv = j + 1 + int(nz[0])
        if piv != j + 1:
            H[[j + 1, piv]] = H[[piv, j + 1]]
            H[:, [j + 1, piv]] = H[:, [piv, j + 1]]
        inv = pow(int(H[j + 1, j]), -1, q)
        f = H[j + 2 :, j] * inv % q
        nzf = np.nonzero(f)[0]
        if nzf.size:
            rows = j + 2 + nzf
            H[rows] = (H[rows] - f[nzf, None] * H[j + 1]) % q
            H[:, j + 1] = (H[:, j + 1] + H[:, rows] @ f[nzf]) % q
    # p_0 = 1; p_m = (x - H[m-1,m-1]) p_(m-1)
    #             - sum_i H[i-1,m-1] (prod_(k=i..m-2) H[k+1,k]) p_(i-1)
    P = np.zeros((n + 1, n + 1), dtype=np.int64)
    P[0, 0] = 1
    sub = np.array([int(H[k + 1, k]) % q for k in range(n - 1)], dtype=np.int64)
    for m in range(1, n + 1):
        shifted = np.zeros(n + 1, dtype=np.int64)
        shifted[1:] = P[m - 1][:-1]
        new = (shifted - int(H[m - 1, m - 1]) % q * P[m - 1]) % q
        if m >= 2:
            # weights w_i = H[i-1, m-1] * prod of subdiagonal entries
            # H[k+1,k] for k = i-1 .. m-2, for i = 1..m-1
            w = np.empty(m - 1, dtype=np.int64)
            acc = 1
            for i in range(m - 1, 0, -1):
                acc = acc * int(sub[i - 1]) % q
                w[i - 1] = int(H[i - 1, m - 1]) * acc % q
            new = (new - (w @ P[0 : m - 1])) % q
        P[m] = new
    return P[n] % q


class _ModularSpace:
    """One modulus worth of the plus-quotient linear algebra."""

    def __init__(self, N: int, q: int):
        sk = skeleton(N)
        self.N, self.q, self.sk = N, q, sk
        ncls = sk.n_classes
        R = np.zeros((len(sk.rows), ncls), dtype=np.int64)
        for i, row in enumerate(sk.rows):
            for k, v in row:
                R[i, k] = v
        rref, pivots = _rref_mod(R, q)
        pivset = set(pivots)
        free = [c for c in range(ncls) if c not in pivset]
        D = len(free)
        self.free = free
        self.D = D
        expr = np.zeros((ncls, D), dtype=np.int64)
        pos = {c: j for j, c in enumerate(free)}
        for c in free:
            expr[c, pos[c]] = 1
        free_arr = np.array(free, dtype=np.intp)
        for row, c in zip(rref, pivots):
            expr[c] = (-row[free_arr]) % q
        self.expr = expr

        ncusp = len(sk.cusp_reps)
        B = np.zeros((ncusp, D), dtype=np.int64)
        for j, c in enumerate(free):
            for k, v in sk.boundary[c]:
                B[k, j] = (B[k, j] + v) % q
        rref_b, piv_b = _rref_mod(B, q)
        pivset_b = set(piv_b)
        free_b = [j for j in range(D) if j not in pivset_b]
        g = len(free_b)
        K = np.zeros((D, g), dtype=np.int64)
        for col, j in enumerate(free_b):
            K[j, col] = 1
        fb_arr = np.array(free_b, dtype=np.intp)
        for row, pj in zip(rref_b, piv_b):
            K[pj] = (-row[fb_arr]) % q
        self.K = K
        self.free_b = free_b
        self.genus = g

    def hecke_cuspidal(self, p: int) -> np.ndarray:
        sk, q, D = self.sk, self.q, self.D
        cols = np.zeros((D, D), dtype=np.int64)
        for j, c in enumerate(self.free):
            rep = sk.class_rep[c]
            acc = np.zeros(D, dtype=np.int64)
            for sym_idx, sign in _hecke_paths(self.N, p, rep):
                k, s = sk.cls[sym_idx], sk.sgn[sym_idx]
                if k < 0:
                    continue
                acc += sign * s * self.expr[k]
            cols[:, j] = acc % q
        T = cols
        M = T @ self.K % q
        A = M[np.array(self.free_b, dtype=np.intp)]
        if not np.array_equal(self.K @ A % q, M):
            raise AssertionError(
                "cuspidal subspace not T_%d-stable mod %d" % (p, q)
            )
        return A


def _crt_moduli(count: int, bound: int = 1 << 26) -> List[int]:
    out = []
    q = bound - 1
    while len(out) < count:
        if sympy.isprime(q):
            out.append(q)
        q -= 1
    return out


def _coeff_bound(n: int, eigen_bound: int) -> int:
    best = 0
    for k in range(n + 1):
        v = sympy.binomial(n, k) * eigen_bound ** k
        if v > best:
            best = int(v)
    return best


def hecke_charpolys_multimodular(
    N: int,
    primes: Sequence[int],
    extra_verification: int = 2,
    progress=None,
) -> Dict[int, HeckeCharPoly]:
    """Cuspidal Hecke characteristic polynomials at level N for the
    given good primes, computed modulo a battery of 26-bit primes and
    CRT-lifted; the lift is re-verified against held-out moduli."""
    for p in primes:
        if N % p == 0:
            raise ValueError("p = %d divides the level %d" % (p, N))
    g = genus_x0(N)
    eigen_bound = max(p + 1 for p in primes)
    bound = 2 * _coeff_bound(g, eigen_bound)
    n_mod = max(1, (bound.bit_length() + 25) // 26) + extra_verification
    moduli = _crt_moduli(n_mod)
    residues: Dict[int, List[np.ndarray]] = {p: [] for p in primes}
    for i, q in enumerate(moduli):
        sp = _ModularSpace(N, q)
        if sp.genus != g:
            raise AssertionError(
                "dimension drop mod %d at level %d (torsion modulus); "
                "rerun with different moduli" % (q, N)
            )
        for p in primes:
            A = sp.hecke_cuspidal(p)
            residues[p].append(_charpoly_hessenberg_mod(A, q))
        if progress is not None:
            progress(i + 1, len(moduli))

    lift_moduli = moduli[: len(moduli) - extra_verification]
    check_moduli = moduli[len(moduli) - extra_verification :]
    out = {}
    for p in primes:
        lifted = _crt_lift(
            [residues[p][i] for i in range(len(lift_moduli))], lift_moduli
        )
        for j, q in enumerate(check_moduli):
            got = residues[p][len(lift_moduli) + j]
            if any(
                c % q != int(r) for c, r in zip(lifted, got)
            ):
                raise AssertionError(
                    "CRT lift of T_%d charpoly fails verification mod %d"
                    % (p, q)
                )
        if lifted[-1] != 1:
            raise AssertionError("lifted characteristic polynomial not monic")
        out[p] = HeckeCharPoly(N=N, p=p, coeffs=tuple(lifted))
    return out


def _crt_lift(residue_arrays: List[np.ndarray], moduli: List[int]) -> List[int]:
    M = prod(moduli)
    n = len(residue_arrays[0])
    out = []
    for k in range(n):
        acc = 0
        for arr, q in zip(residue_arrays, moduli):
            Mq = M // q
            acc = (acc + int(arr[k]) * Mq * pow(Mq % q, -1, q)) % M
        if acc > M // 2:
            acc -= M
        out.append(acc)
    return out
