"""Exact arithmetic in finite fields F_{p^m}.

Elements of F_{p^m} are represented as tuples of m integers in [0, p),
giving the coordinates in the polynomial basis 1, x, ..., x^{m-1} modulo
the field's defining polynomial.  The defining polynomial is always the
*canonical* one: the first monic irreducible of degree m in the
enumeration where the coefficient vector (c_0, ..., c_{m-1}) of
x^m + c_{m-1} x^{m-1} + ... + c_0 is read as the base-p integer
c_0 + c_1 p + ... + c_{m-1} p^{m-1}, scanned in increasing order.
This makes field arithmetic reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Tuple

Element = Tuple[int, ...]


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all 64-bit inputs and beyond
    (the witness set is proven complete below 3.3 * 10^24)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldDescriptor:
    """A finite field F_{p^m} together with its canonical modulus.

    ``modulus`` holds the m+1 coefficients of the monic defining
    polynomial, low degree first (so modulus[m] == 1).  For m == 1 the
    modulus is x itself, i.e. (0, 1).
    """

    p: int
    m: int
    modulus: Tuple[int, ...]

    @property
    def order(self) -> int:
        return self.p ** self.m

    def zero(self) -> Element:
        return (0,) * self.m

    def one(self) -> Element:
        return (1,) + (0,) * (self.m - 1)

    def from_int(self, n: int) -> Element:
        """Embed an integer via reduction mod p (prime subfield)."""
        return (n % self.p,) + (0,) * (self.m - 1)

    def gen(self) -> Element:
        """The class of x, a root of the modulus (for m == 1 this is 0)."""
        if self.m == 1:
            return (0,)
        return (0, 1) + (0,) * (self.m - 2)

    def element(self, coords) -> Element:
        coords = tuple(c % self.p for c in coords)
        if len(coords) != self.m:
            raise ValueError("expected %d coordinates" % self.m)
        return coords

    def add(self, a: Element, b: Element) -> Element:
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a: Element, b: Element) -> Element:
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a: Element) -> Element:
        p = self.p
        return tuple((-x) % p for x in a)

    def mul(self, a: Element, b: Element) -> Element:
        p, m = self.p, self.m
        if m == 1:
            return (a[0] * b[0] % p,)
        # schoolbook convolution, then reduce by the monic modulus
        prod = [0] * (2 * m - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        for k in range(2 * m - 2, m - 1, -1):
            c = prod[k] % p
            if c:
                for j in range(m):
                    prod[k - m + j] -= c * self.modulus[j]
            prod[k] = 0
        return tuple(v % p for v in prod[:m])

    def scalar_mul(self, c: int, a: Element) -> Element:
        p = self.p
        c %= p
        return tuple(c * x % p for x in a)

    def pow(self, a: Element, n: int) -> Element:
        if n < 0:
            return self.pow(self.inv(a), -n)
        result = self.one()
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def inv(self, a: Element) -> Element:
        if a == self.zero():
            raise ZeroDivisionError("inversion of 0 in F_%d^%d" % (self.p, self.m))
        if self.m == 1:
            return (pow(a[0], -1, self.p),)
        # a^(q-2) -- fine at the field sizes this package needs
        return self.pow(a, self.order - 2)

    def is_zero(self, a: Element) -> bool:
        return all(c == 0 for c in a)

    def elements(self) -> Iterator[Element]:
        """All field elements, in lexicographic coordinate order with the
        constant coordinate varying fastest."""
        p, m = self.p, self.m
        for n in range(self.order):
            coords = []
            t = n
            for _ in range(m):
                coords.append(t % p)
                t //= p
            yield tuple(coords)

    def element_from_index(self, n: int) -> Element:
        p, m = self.p, self.m
        coords = []
        for _ in range(m):
            coords.append(n % p)
            n //= p
        return tuple(coords)

    def frobenius(self, a: Element) -> Element:
        return self.pow(a, self.p)


def _poly_has_root(coeffs, p: int) -> bool:
    for x in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % p
        if acc == 0:
            return True
    return False


def _is_irreducible_over_fp(coeffs, p: int) -> bool:
    """Rabin irreducibility test for a monic polynomial over F_p
    (coefficients low degree first, leading coefficient 1)."""
    m = len(coeffs) - 1
    if m == 1:
        return True
    if coeffs[0] == 0:
        return False
    if m <= 3:
        # degree 2 or 3: irreducible iff no root
        return not _poly_has_root(coeffs, p)
    fd = FieldDescriptor(p, 1, (0, 1))

    def polymulmod(a, b):
        prod = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        # reduce mod coeffs (monic degree m)
        for k in range(len(prod) - 1, m - 1, -1):
            c = prod[k]
            if c:
                for j in range(m):
                    prod[k - m + j] = (prod[k - m + j] - c * coeffs[j]) % p
            prod[k] = 0
        out = prod[:m]
        while out and out[-1] == 0:
            out.pop()
        return out

    def xpow(e):
        result = [1]
        base = [0, 1]
        while e:
            if e & 1:
                result = polymulmod(result, base)
            base = polymulmod(base, base)
            e >>= 1
        return result

    def polygcd(a, b):
        a, b = list(a), list(b)
        while b:
            # reduce a mod b
            while len(a) >= len(b) and a:
                c = a[-1] * pow(b[-1], -1, p) % p
                shift = len(a) - len(b)
                for j in range(len(b)):
                    a[shift + j] = (a[shift + j] - c * b[j]) % p
                while a and a[-1] == 0:
                    a.pop()
            a, b = b, a
        return a

    # x^(p^m) == x mod f, and gcd(x^(p^(m/q)) - x, f) == 1 for prime q | m
    xq = xpow(p ** m)
    target = [0, 1] if m > 1 else [0]
    if (xq + [0] * (2 - len(xq)))[:2] != target or len(xq) > 2:
        if xq != [0, 1]:
            return False
    mm = m
    prime_divs = set()
    d = 2
    while d * d <= mm:
        while mm % d == 0:
            prime_divs.add(d)
            mm //= d
        d += 1
    if mm > 1:
        prime_divs.add(mm)
    for q in prime_divs:
        h = xpow(p ** (m // q))
        # h - x
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        while diff and diff[-1] == 0:
            diff.pop()
        g = polygcd(diff, list(coeffs))
        if len(g) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def make_field(p: int, m: int) -> FieldDescriptor:
    """Construct F_{p^m} with the canonical modulus (see module docstring)."""
    if not is_prime(p):
        raise ValueError("p = %d is not prime" % p)
    if m < 1:
        raise ValueError("extension degree must be >= 1, got %d" % m)
    if m == 1:
        return FieldDescriptor(p, 1, (0, 1))
    for n in range(p ** m):
        coeffs = []
        t = n
        for _ in range(m):
            coeffs.append(t % p)
            t //= p
        candidate = tuple(coeffs) + (1,)
        if _is_irreducible_over_fp(candidate, p):
            return FieldDescriptor(p, m, candidate)
    raise AssertionError("no irreducible polynomial found (unreachable)")
