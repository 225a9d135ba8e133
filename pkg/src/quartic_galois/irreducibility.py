"""Irreducibility of J[ell] for every odd prime ell.

A proper decomposition of the 6-dimensional ell-torsion module forces a
Jordan-Holder factor of dimension 1, 2 or 3, and the determinant
bookkeeping (similitude character, tame-inertia exponents in {0,1} at
ell) cuts the possible (dimension, determinant-exponent) profiles down
to a short list enumerated by :func:`enumerate_case_profiles`.  Each
family is then excluded outside an explicitly computed finite set of
primes:

* dimension 1: the Frobenius eigenvalue at a good prime p is 1 or p
  mod ell, so ell divides P_p(1) * P_p(p);
* dimension 2: the factor has determinant the cyclotomic character, is
  odd and irreducible, hence modular of weight 2, trivial nebentypus
  and level dividing the conductor (trusted fact TF-SERRE); its trace
  of Frobenius is then a root mod ell of both the Hecke characteristic
  polynomial H_p and the cubic Q_p built from P_p, so ell divides the
  resultant Res(H_p, Q_p);
* dimension 3: the two 3-dimensional factors pair up, and matching the
  T^5, T^4, T^3 coefficients of P_p against the paired factorization
  yields three polynomial equations in two unknowns (u, v) over F_ell
  whose elimination produces a nonzero integer divisible by every ell
  admitting a solution.

Primes inside any finite set are finished off by a direct witness: a
good prime p != ell with P_p irreducible mod ell.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import sympy

from .curve import LPolynomial
from .polys import IntPoly, int_resultant, is_irreducible_mod

_DEFAULT_BAD_PRIMES = (7, 11, 83)
_ORACLE_BOUND = 50


# ---------------------------------------------------------------------------
# the case split


@dataclass(frozen=True)
class CaseProfile:
    """A multiset of (dimension, determinant-exponent) pairs.

    ``dims`` is a partition of 6 into at least two parts; ``exps[i]`` is
    the exponent e_i of the cyclotomic character in the determinant of
    the i-th factor, constrained by 0 <= e_i <= d_i, sum e_i = 3, and
    the multiset identity {e_i} = {d_i - e_i} coming from the Weil
    pairing.
    """

    dims: Tuple[int, ...]
    exps: Tuple[int, ...]

    def __post_init__(self):
        if len(self.dims) < 2 or sum(self.dims) != 6:
            raise ValueError("dims must be a partition of 6 with >= 2 parts")
        if len(self.exps) != len(self.dims):
            raise ValueError("one exponent per dimension required")
        if any(not 0 <= e <= d for d, e in zip(self.dims, self.exps)):
            raise ValueError("exponents must satisfy 0 <= e_i <= d_i")
        if sum(self.exps) != 3:
            raise ValueError("exponents must sum to 3")
        if sorted(self.exps) != sorted(
            d - e for d, e in zip(self.dims, self.exps)
        ):
            raise ValueError("multiset {e_i} must equal {d_i - e_i}")

    @property
    def pairs(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(sorted(zip(self.dims, self.exps)))

    @property
    def family(self) -> str:
        """Which exclusion family handles this profile."""
        if 1 in self.dims:
            return "dim1"
        if min(self.dims) == 3:
            return "dim3"
        return "dim2"


def _partitions(n: int, max_part: int) -> Iterable[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(1, min(n, max_part) + 1):
        for rest in _partitions(n - first, first):
            yield rest + (first,)


def enumerate_case_profiles() -> Tuple[CaseProfile, ...]:
    """All valid profiles, canonicalized.

    Profiles related by the global swap e_i -> d_i - e_i describe the
    same decomposition with the roles of paired factors exchanged; each
    such class is represented once, by the lexicographically smaller
    labeling (so a (3,3) profile always shows an exponent <= 1).
    """
    seen = {}
    for dims in _partitions(6, 6):
        if len(dims) < 2:
            continue

        def search(i, left, acc):
            if i == len(dims):
                if left == 0:
                    yield tuple(acc)
                return
            for e in range(0, min(dims[i], left) + 1):
                yield from search(i + 1, left - e, acc + [e])

        for exps in search(0, 3, []):
            if sorted(exps) != sorted(d - e for d, e in zip(dims, exps)):
                continue
            pairs = tuple(sorted(zip(dims, exps)))
            dual = tuple(sorted((d, d - e) for d, e in zip(dims, exps)))
            key = min(pairs, dual)
            if key not in seen:
                d_sorted, e_sorted = zip(*key)
                seen[key] = CaseProfile(dims=d_sorted, exps=e_sorted)
    return tuple(sorted(seen.values(), key=lambda c: c.pairs))


# ---------------------------------------------------------------------------
# witnesses and the dimension-1 family


def witness_search(
    lpolys: Sequence[LPolynomial], ell: int
) -> Optional[int]:
    """The first table prime p != ell with P_p irreducible mod ell."""
    for lp in sorted(lpolys, key=lambda q: q.p):
        if lp.p == ell:
            continue
        if is_irreducible_mod(lp.to_int_poly(), ell):
            return lp.p
    return None


def dim1_exclusion(lpolys: Sequence[LPolynomial]) -> FrozenSet[int]:
    """Odd primes compatible with a 1-dimensional Jordan-Holder factor.

    At a good prime p != ell such a factor makes 1 or p an eigenvalue
    of Frobenius mod ell (the tame-inertia exponent at ell is 0 or 1 by
    TF-RAYNAUD), so ell | P_p(1) * P_p(p); the constraints are combined
    across the supplied table by a gcd.
    """
    if not lpolys:
        raise ValueError("no L-polynomials supplied")
    g = 0
    for lp in lpolys:
        poly = lp.to_int_poly()
        contrib = poly(1) * poly(lp.p)
        if contrib == 0:
            continue
        g = gcd(g, abs(contrib))
    assert g != 0, "Weil bounds forbid P_p(1) = 0 or P_p(p) = 0 at good p"
    return frozenset(q for q in sympy.primefactors(g) if q % 2 == 1)


# ---------------------------------------------------------------------------
# the dimension-2 family


def dim2_qpoly(lp: LPolynomial) -> IntPoly:
    """The monic cubic whose roots are alpha = lambda + p/lambda as
    lambda runs over a half-set of Frobenius eigenvalues:
    x^3 + a x^2 + (b - 3p) x + (c - 2pa)."""
    p, a, b, c = lp.p, lp.a, lp.b, lp.c
    return IntPoly([c - 2 * p * a, b - 3 * p, a, 1])


def dim2_resultants(
    qpolys: Dict[int, IntPoly], hecke_polys: Dict[int, IntPoly]
) -> Dict[int, int]:
    """r_p = Res(H_p, Q_p) for every prime with both polynomials."""
    out = {}
    for p in sorted(qpolys):
        if p in hecke_polys:
            out[p] = int_resultant(hecke_polys[p], qpolys[p])
    return out


def dim2_exclusion(
    qpolys: Dict[int, IntPoly], hecke_polys: Dict[int, IntPoly]
) -> FrozenSet[int]:
    """Odd-prime support of gcd of the nonzero resultants r_p.

    A 2-dimensional factor with determinant the cyclotomic character is
    modular (TF-SERRE), so its Frobenius trace t_p is a common root mod
    ell of H_p and Q_p, forcing ell | r_p for every good p != ell.
    """
    rps = dim2_resultants(qpolys, hecke_polys)
    nonzero = [abs(r) for r in rps.values() if r != 0]
    if not nonzero:
        raise ValueError("all Hecke/Q resultants vanish; no dim-2 constraint")
    g = 0
    for r in nonzero:
        g = gcd(g, r)
    return frozenset(q for q in sympy.primefactors(g) if q % 2 == 1)


# ---------------------------------------------------------------------------
# the dimension-3 family


@dataclass(frozen=True)
class Dim3Solution:
    ell: int
    e: int
    solutions: FrozenSet[Tuple[int, int]]


def _dim3_equations(lp: LPolynomial, e: int) -> Tuple[int, int, int, int, int, int]:
    """Integer data (p1, p2, p3, pe, a, b, c) with p_k = p^(k-e)."""
    p = lp.p
    return (
        p ** (1 - e),
        p ** (2 - e),
        p ** (3 - e),
        p ** e,
        lp.a,
        lp.b,
        lp.c,
    )


def dim3_solutions(lp: LPolynomial, e: int, ell: int) -> Dim3Solution:
    """Exhaustive solutions over F_ell^2 of the coefficient-matching
    system for P_p = (T^3 - uT^2 + vT - p^e)(T^3 - p^(1-e)vT^2 +
    p^(2-e)uT - p^(3-e)):

        p^(1-e) v + u = -a
        p^(2-e) u + p^(1-e) u v + v = b
        p^(3-e) + p^(2-e) u^2 + p^(1-e) v^2 + p^e = -c
    """
    if e not in (0, 1):
        raise ValueError("determinant exponent e must be 0 or 1")
    if ell == lp.p or ell % 2 == 0 or not sympy.isprime(ell):
        raise ValueError("ell must be an odd prime different from p")
    p1, p2, p3, pe, a, b, c = _dim3_equations(lp, e)
    sols = set()
    for u in range(ell):
        for v in range(ell):
            if (p1 * v + u + a) % ell:
                continue
            if (p2 * u + p1 * u * v + v - b) % ell:
                continue
            if (p3 + p2 * u * u + p1 * v * v + pe + c) % ell:
                continue
            sols.add((u, v))
    return Dim3Solution(ell=ell, e=e, solutions=frozenset(sols))


def dim3_obstruction(lp: LPolynomial, e: int, validate: bool = True) -> int:
    """A nonzero integer N(e) divisible by every odd prime ell != p at
    which the dimension-3 system has a solution.

    The first equation is monic linear in u; substituting
    u = -a - p^(1-e) v into the other two leaves two univariate
    polynomials in v whose integer resultant is N(e).  A common
    solution mod ell makes v a common root mod ell, and since the
    leading coefficient -p^(2-2e) of the first residual is a unit mod
    ell, that forces ell | N(e).
    """
    if e not in (0, 1):
        raise ValueError("determinant exponent e must be 0 or 1")
    p1, p2, p3, pe, a, b, c = _dim3_equations(lp, e)
    u = IntPoly([-a, -p1])  # u as a polynomial in v
    v = IntPoly([0, 1])
    r12 = u.scale(p2) + u * v.scale(p1) + v - IntPoly([b])
    r13 = u * u.scale(p2) + (v * v).scale(p1) + IntPoly([p3 + pe + c])
    if r12.is_zero() or r13.is_zero():
        raise ValueError("degenerate L-polynomial: eliminant vanishes")
    n = abs(int_resultant(r12, r13))
    if n == 0:
        raise ValueError("degenerate L-polynomial: resultant vanishes")
    if validate:
        for ell in range(3, _ORACLE_BOUND + 1, 2):
            if not sympy.isprime(ell) or ell == lp.p:
                continue
            if n % ell and dim3_solutions(lp, e, ell).solutions:
                raise AssertionError(
                    "obstruction %d misses solutions at ell=%d" % (n, ell)
                )
    return n


# ---------------------------------------------------------------------------
# the ledger


@dataclass(frozen=True)
class LedgerEntry:
    ell: int
    status: str  # "excluded" | "open"
    witness: str

    def to_json_obj(self) -> dict:
        return {"ell": self.ell, "status": self.status, "witness": self.witness}


@dataclass(frozen=True)
class ExclusionLedger:
    entries: Tuple[LedgerEntry, ...]
    families: Tuple[dict, ...]
    finite_sets: dict
    details: dict
    complete: bool

    @property
    def all_excluded(self) -> bool:
        return self.complete and all(
            e.status == "excluded" for e in self.entries
        )

    @property
    def open_primes(self) -> Tuple[int, ...]:
        return tuple(e.ell for e in self.entries if e.status != "excluded")

    def to_json_obj(self) -> dict:
        return {
            "entries": [e.to_json_obj() for e in self.entries],
            "families": list(self.families),
            "finite_sets": {
                k: sorted(v) if v is not None else None
                for k, v in self.finite_sets.items()
            },
            "details": self.details,
            "complete": self.complete,
            "all_excluded": self.all_excluded,
        }


def irreducibility_certify(
    lpolys: Sequence[LPolynomial],
    hecke_polys: Optional[Dict[int, IntPoly]] = None,
    bad_primes: Tuple[int, ...] = _DEFAULT_BAD_PRIMES,
) -> ExclusionLedger:
    """Assemble the exclusion ledger for every odd prime ell.

    Each case family is excluded generically outside a finite computed
    prime set; every prime in any finite set (plus the base set, where
    the generic hypotheses of good reduction and trivial nebentypus are
    unavailable) is then finished by a direct irreducibility witness.
    """
    if len(lpolys) < 2:
        raise ValueError("need an L-polynomial table")
    by_p = {lp.p: lp for lp in lpolys}
    level = prod(bad_primes)
    # odd primes where the trivial-nebentypus reduction could fail:
    # divisors of the order of (Z/level)^*
    escape = frozenset(
        q
        for q in sympy.primefactors(prod(b - 1 for b in bad_primes))
        if q % 2 == 1
    )
    base_set = frozenset(bad_primes) | escape

    # dimension 1: the table's smallest prime gives the published set
    anchor = by_p[min(by_p)]
    dim1_set = dim1_exclusion([anchor])
    poly = anchor.to_int_poly()

    # dimension 2
    dim2_gcd_support: Optional[FrozenSet[int]] = None
    rps: Dict[int, int] = {}
    if hecke_polys:
        qpolys = {
            p: dim2_qpoly(lp)
            for p, lp in by_p.items()
            if p not in bad_primes and level % p != 0
        }
        usable = {p: h for p, h in hecke_polys.items() if p in qpolys}
        if usable:
            rps = dim2_resultants(qpolys, usable)
            dim2_gcd_support = dim2_exclusion(qpolys, usable)
    dim2_set = (
        (dim2_gcd_support | escape) if dim2_gcd_support is not None else None
    )

    # dimension 3, anchored at the same smallest table prime
    n0 = dim3_obstruction(anchor, 0)
    n1 = dim3_obstruction(anchor, 1)
    dim3_set = frozenset(
        q
        for q in {3, 5, 7} | set(sympy.primefactors(n0 * n1))
        if q % 2 == 1
    )

    finite_sets = {
        "base": base_set,
        "dim1": dim1_set,
        "dim2": dim2_set,
        "dim3": dim3_set,
    }
    witness_required = set(base_set) | set(dim1_set) | set(dim3_set)
    if dim2_set is not None:
        witness_required |= set(dim2_set)

    entries = []
    for ell in sorted(witness_required):
        p = witness_search(lpolys, ell)
        if p is None:
            entries.append(
                LedgerEntry(
                    ell=ell,
                    status="open",
                    witness="no table prime has P_p irreducible mod %d" % ell,
                )
            )
        else:
            entries.append(
                LedgerEntry(
                    ell=ell,
                    status="excluded",
                    witness="P_%d irreducible mod %d" % (p, ell),
                )
            )

    families = (
        {
            "family": "dim1",
            "description": (
                "a 1-dimensional factor forces ell | P_%d(1) * P_%d(%d)"
                % (anchor.p, anchor.p, anchor.p)
            ),
            "finite_set": sorted(dim1_set),
            "fact_refs": ["TF-RAYNAUD"],
            "status": "excluded outside finite set",
        },
        {
            "family": "dim2",
            "description": (
                "a 2-dimensional factor with cyclotomic determinant is "
                "modular of weight 2 and level %d with trivial nebentypus "
                "(outside the escape set %s); its trace is a common root "
                "of H_p and Q_p mod ell" % (level, sorted(escape))
            ),
            "finite_set": sorted(dim2_set) if dim2_set is not None else None,
            "fact_refs": ["TF-SERRE"],
            "status": (
                "excluded outside finite set"
                if dim2_set is not None
                else "open (no Hecke data)"
            ),
        },
        {
            "family": "dim3",
            "description": (
                "paired 3-dimensional factors force the (u, v) "
                "coefficient system; elimination gives obstructions "
                "N(0)=%d, N(1)=%d" % (n0, n1)
            ),
            "finite_set": sorted(dim3_set),
            "fact_refs": ["TF-RAYNAUD", "TF-LEM52"],
            "status": "excluded outside finite set",
        },
    )

    details = {
        "level": level,
        "dim1_products": {
            str(anchor.p): [int(poly(1)), int(poly(anchor.p))]
        },
        "dim2_resultants": {str(p): rps[p] for p in sorted(rps)},
        "dim2_gcd": _gcd_of(rps) if rps else None,
        "dim3_obstructions": {"0": n0, "1": n1},
        "nebentypus_escape": sorted(escape),
    }

    complete = dim2_set is not None and all(
        e.status == "excluded" for e in entries
    )
    return ExclusionLedger(
        entries=tuple(entries),
        families=families,
        finite_sets=finite_sets,
        details=details,
        complete=complete,
    )


def _gcd_of(rps: Dict[int, int]) -> int:
    g = 0
    for r in rps.values():
        if r != 0:
            g = gcd(g, abs(r))
    return g
