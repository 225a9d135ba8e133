"""Exact point counting on plane quartics over F_{p^m}, vectorized.

The count over a field of q elements iterates one affine coordinate over
all of F_q as numpy "lanes".  For each lane the curve restricts to a
monic quartic h(y); the number of distinct roots equals
deg gcd(y^q - y, h), with y^q mod h computed by square-and-multiply and
the gcd degree by a masked, inversion-free polynomial remainder sequence
run simultaneously on every lane.  Field elements of F_{p^m} are int64
coordinate vectors mod p in the canonical polynomial basis, so all
arithmetic is exact.

The public entry points are :func:`count_points` and
:func:`l_polynomial`.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from itertools import permutations
from typing import List, Optional, Tuple

import numpy as np

from .curve import LPolynomial, TernaryQuarticForm, singular_points
from .fields import make_field
from .polys import FqPoly
from .series import abc_from_counts

_FIELD_BUDGET = 10 ** 7
_BRUTE_LIMIT = 512


class BadReductionError(ValueError):
    """The curve is singular over the requested prime."""


class BudgetExceededError(ValueError):
    """The requested field exceeds the configured size budget."""


class _VecField:
    """Vectorized F_{p^m} arithmetic on int64 arrays of shape (..., m)."""

    def __init__(self, p: int, m: int):
        fd = make_field(p, m)
        self.p, self.m, self.q = p, m, p ** m
        self.fd = fd
        # reduction rows: x^(m+t) in the polynomial basis, t = 0..m-2
        rows = []
        if m > 1:
            cur = [(-c) % p for c in fd.modulus[:m]]
            rows.append(cur)
            for _ in range(m - 2):
                shifted = [0] + cur[:-1]
                over = cur[-1]
                cur = [
                    (shifted[i] + over * rows[0][i]) % p for i in range(m)
                ]
                rows.append(cur)
        self.red = rows

    def lanes(self) -> np.ndarray:
        """All q field elements as a (q, m) digit array."""
        n = np.arange(self.q, dtype=np.int64)
        digits = []
        for _ in range(self.m):
            digits.append(n % self.p)
            n = n // self.p
        return np.stack(digits, axis=-1)

    def embed_int(self, c: int, shape: tuple) -> np.ndarray:
        out = np.zeros(shape + (self.m,), dtype=np.int64)
        out[..., 0] = c % self.p
        return out

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        p, m = self.p, self.m
        if m == 1:
            return (a * b) % p
        prod: List[Optional[np.ndarray]] = [None] * (2 * m - 1)
        for i in range(m):
            for j in range(m):
                t = a[..., i] * b[..., j]
                k = i + j
                prod[k] = t if prod[k] is None else prod[k] + t
        out = [prod[t] % p for t in range(m)]
        for t in range(m, 2 * m - 1):
            c = prod[t] % p
            row = self.red[t - m]
            for idx in range(m):
                if row[idx]:
                    out[idx] = out[idx] + c * row[idx]
        return np.stack([o % p for o in out], axis=-1)

    def scalar_mul(self, c: int, a: np.ndarray) -> np.ndarray:
        return (a * (c % self.p)) % self.p


def _choose_chart(
    curve: TernaryQuarticForm, p: int
) -> Optional[Tuple[int, int, int]]:
    """A variable ordering (iterate, root, chart) whose pure fourth-power
    root coefficient is a unit mod p, or None."""
    for root, iter_, chart in permutations(range(3)):
        exps = [0, 0, 0]
        exps[root] = 4
        if curve.coeff(*exps) % p != 0:
            return (iter_, root, chart)
    return None


def _brute_count(curve: TernaryQuarticForm, p: int, m: int) -> int:
    F = make_field(p, m)
    els = list(F.elements())
    one, zero = F.one(), F.zero()
    n = 0
    for yv in els:
        for zv in els:
            if F.is_zero(curve.evaluate(F, (one, yv, zv))):
                n += 1
    for zv in els:
        if F.is_zero(curve.evaluate(F, (zero, one, zv))):
            n += 1
    if F.is_zero(curve.evaluate(F, (zero, zero, one))):
        n += 1
    return n


# ---------------------------------------------------------------------------
# vectorized root counting


def _deg(parr: np.ndarray) -> np.ndarray:
    nz = np.any(parr != 0, axis=2)
    idx = np.where(nz, np.arange(parr.shape[1])[None, :], -1)
    return idx.max(axis=1)


def _shift(parr: np.ndarray, s: np.ndarray) -> np.ndarray:
    lanes, slots, _m = parr.shape
    idx = np.arange(slots)[None, :] - s[:, None]
    valid = idx >= 0
    idxc = np.clip(idx, 0, slots - 1)
    out = parr[np.arange(lanes)[:, None], idxc, :]
    return out * valid[:, :, None]


def _gcd_degrees(vf: _VecField, h4: np.ndarray, r: np.ndarray) -> np.ndarray:
    """deg gcd(h, r) per lane, h monic quartic (lanes,4,m holds a0..a3),
    r of degree <= 3 (lanes,4,m)."""
    lanes = h4.shape[0]
    m = vf.m
    A = np.zeros((lanes, 5, m), dtype=np.int64)
    A[:, :4, :] = h4
    A[:, 4, 0] = 1
    B = np.zeros((lanes, 5, m), dtype=np.int64)
    B[:, :4, :] = r
    ar = np.arange(lanes)
    for _ in range(64):
        degA, degB = _deg(A), _deg(B)
        swap = degA < degB
        if swap.any():
            sw = swap[:, None, None]
            A, B = np.where(sw, B, A), np.where(sw, A, B)
            degA, degB = (
                np.where(swap, degB, degA),
                np.where(swap, degA, degB),
            )
        active = degB >= 0
        if not active.any():
            break
        s = np.where(active, degA - degB, 0)
        lcA = A[ar, np.maximum(degA, 0), :]
        lcB = B[ar, np.maximum(degB, 0), :]
        shifted = _shift(B, s)
        newA = (
            vf.mul(lcB[:, None, :], A) - vf.mul(lcA[:, None, :], shifted)
        ) % vf.p
        A = np.where(active[:, None, None], newA, A)
    else:
        raise AssertionError("polynomial remainder sequence did not terminate")
    return _deg(A)


def _count_chunk(
    vf: _VecField,
    coeff_rows: List[List[Tuple[int, int]]],
    lanes: np.ndarray,
) -> int:
    """Distinct-root count summed over the given iterate-variable lanes.

    ``coeff_rows[j]`` lists (coefficient, power-of-iterate) pairs making
    up the (already monic-normalized) y^j coefficient, j = 0..3.
    """
    L = lanes.shape[0]
    m = vf.m
    upow = [vf.embed_int(1, (L,))]
    for _ in range(4):
        upow.append(vf.mul(upow[-1], lanes))
    h4 = np.zeros((L, 4, m), dtype=np.int64)
    for j in range(4):
        acc = np.zeros((L, m), dtype=np.int64)
        for c, d in coeff_rows[j]:
            acc = (acc + vf.scalar_mul(c, upow[d])) % vf.p
        h4[:, j, :] = acc
    pow4 = (-h4) % vf.p
    over = pow4[:, 3, :]
    pow5 = np.zeros_like(pow4)
    pow5[:, 1:, :] = pow4[:, :3, :]
    pow5 = (pow5 + vf.mul(over[:, None, :], pow4)) % vf.p
    over = pow5[:, 3, :]
    pow6 = np.zeros_like(pow5)
    pow6[:, 1:, :] = pow5[:, :3, :]
    pow6 = (pow6 + vf.mul(over[:, None, :], pow4)) % vf.p

    def mulmod(u: np.ndarray, v: np.ndarray) -> np.ndarray:
        conv: List[Optional[np.ndarray]] = [None] * 7
        for i in range(4):
            for j in range(4):
                t = vf.mul(u[:, i, :], v[:, j, :])
                k = i + j
                conv[k] = t if conv[k] is None else conv[k] + t
        out = np.stack([c % vf.p for c in conv[:4]], axis=1)
        for k, powk in ((4, pow4), (5, pow5), (6, pow6)):
            c = conv[k] % vf.p
            out = out + vf.mul(c[:, None, :], powk)
        return out % vf.p

    def times_y(u: np.ndarray) -> np.ndarray:
        over = u[:, 3, :]
        out = np.zeros_like(u)
        out[:, 1:, :] = u[:, :3, :]
        return (out + vf.mul(over[:, None, :], pow4)) % vf.p

    yvec = np.zeros((L, 4, m), dtype=np.int64)
    yvec[:, 1, 0] = 1
    r = yvec.copy()
    for bit in bin(vf.q)[3:]:
        r = mulmod(r, r)
        if bit == "1":
            r = times_y(r)
    r = (r - yvec) % vf.p
    return int(_gcd_degrees(vf, h4, r).sum())


def count_points(
    curve: TernaryQuarticForm, p: int, m: int, workers: int = 1
) -> int:
    """Exact |C(F_{p^m})| as a set of projective points.

    The caller is responsible for checking smoothness of the fiber (see
    :func:`l_polynomial`); the count itself is well defined regardless.
    """
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    q = p ** m
    if q > _FIELD_BUDGET:
        raise BudgetExceededError(
            "field size %d exceeds the %d budget" % (q, _FIELD_BUDGET)
        )
    chart = _choose_chart(curve, p)
    if chart is None:
        if q <= _BRUTE_LIMIT:
            return _brute_count(curve, p, m)
        raise BudgetExceededError(
            "no coordinate has a unit pure fourth power mod %d and the "
            "field is too large for brute enumeration" % p
        )
    iter_var, root_var, chart_var = chart
    vf = _VecField(p, m)
    # monic normalization: divide by the pure root^4 coefficient
    exps = [0, 0, 0]
    exps[root_var] = 4
    lead = curve.coeff(*exps) % p
    lead_inv = pow(lead, -1, p)
    coeff_rows: List[List[Tuple[int, int]]] = [[] for _ in range(4)]
    for (i, j, k), c in curve.coeffs.items():
        e = (i, j, k)
        jr = e[root_var]
        if jr == 4:
            continue
        coeff_rows[jr].append((c * lead_inv % p, e[iter_var]))

    lanes = vf.lanes()
    if workers <= 1 or q < 4096:
        affine = _count_chunk(vf, coeff_rows, lanes)
    else:
        chunks = np.array_split(lanes, workers)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            affine = sum(
                pool.map(lambda ch: _count_chunk(vf, coeff_rows, ch), chunks)
            )

    # the line chart_var = 0: points (u : 1 : 0) plus (1 : 0 : 0)
    F = make_field(p, m)
    line_coeffs = [F.zero()] * 5
    for (i, j, k), c in curve.coeffs.items():
        e = (i, j, k)
        if e[chart_var] == 0:
            d = e[iter_var]
            line_coeffs[d] = F.add(line_coeffs[d], F.from_int(c))
    g = FqPoly(F, line_coeffs)
    if g.is_zero():
        line = q + 1  # the whole line lies on the curve
    else:
        x = FqPoly.x(F)
        xq = x.pow_mod(q, g) if g.degree >= 1 else None
        if g.degree >= 1:
            line = g.gcd(xq - x).degree
        else:
            line = 0
        exps = [0, 0, 0]
        exps[iter_var] = 4
        if curve.coeff(*exps) % p == 0:
            line += 1
    return affine + line


def l_polynomial(
    curve: TernaryQuarticForm, p: int, workers: int = 1
) -> LPolynomial:
    """The L-polynomial at a prime of good reduction, from counts over
    F_p, F_{p^2}, F_{p^3} via the zeta congruence, with the Weil root
    bounds verified before returning."""
    report = singular_points(curve, p)
    if not report.is_good:
        raise BadReductionError(
            "curve has bad (or unresolved) reduction at %d" % p
        )
    counts = [count_points(curve, p, m, workers=workers) for m in (1, 2, 3)]
    a, b, c = abc_from_counts(p, counts)
    lp = LPolynomial(p=p, a=a, b=b, c=c)
    lp.verify_weil()
    return lp
