"""Eta-product q-expansions, an independent oracle for small levels.

For a handful of small levels the unique weight-2 newform is a product
of Dedekind eta functions (eta(tau)^2 eta(11 tau)^2 at level 11,
eta(1)eta(2)eta(7)eta(14) at level 14, eta(1)eta(3)eta(5)eta(15) at
level 15), so its coefficients a_p can be read off a truncated product
of Euler factors with no modular-symbol machinery at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple


@dataclass(frozen=True)
class EtaProductSpec:
    """The product of eta(d*tau)^r over the listed (d, r) pairs,
    truncated at q-degree D (after normalizing the leading power)."""

    factors: Tuple[Tuple[int, int], ...]
    truncation: int

    def __post_init__(self):
        if self.truncation < 1:
            raise ValueError("truncation degree must be >= 1")
        for d, r in self.factors:
            if d < 1 or r < 1:
                raise ValueError("eta multipliers and exponents must be >= 1")
        self.leading_power  # validates 24 | sum(d * r)

    @property
    def leading_power(self) -> int:
        total = sum(d * r for d, r in self.factors)
        if total % 24:
            raise ValueError(
                "sum of d*r is %d, not divisible by 24: leading q-power "
                "is not integral" % total
            )
        return total // 24


def eta_product_qexp(spec: EtaProductSpec) -> List[int]:
    """Integer coefficients c_0..c_D of the normalized expansion
    q^(-t) * prod eta(d tau)^r = prod_n (1 - q^(d n))^r, with
    t = sum(d r)/24 the leading power."""
    spec.leading_power  # validates integrality
    D = spec.truncation
    series = [0] * (D + 1)
    series[0] = 1
    for d, r in spec.factors:
        for _ in range(r):
            n = 1
            while d * n <= D:
                # multiply by (1 - q^(d n)) in place, truncating at D
                step = d * n
                for k in range(D, step - 1, -1):
                    series[k] -= series[k - step]
                n += 1
    return series


def newform_ap(factors: Sequence[Tuple[int, int]], p: int) -> int:
    """a_p of the eta-product newform f = q^t * (normalized expansion):
    the q^p coefficient of f, i.e. index p - t of the expansion."""
    spec = EtaProductSpec(factors=tuple(factors), truncation=p)
    t = spec.leading_power
    if p < t:
        raise ValueError("truncation below the leading power")
    return eta_product_qexp(spec)[p - t]


# the eta-product newforms used as oracles, keyed by level
ETA_NEWFORMS = {
    11: ((1, 2), (11, 2)),
    14: ((1, 1), (2, 1), (7, 1), (14, 1)),
    15: ((1, 1), (3, 1), (5, 1), (15, 1)),
}
