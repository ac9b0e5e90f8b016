"""Cyclic self-isogenies of C/(Z + Z tau): witness matrices and generators.

A coprime pair (a, b') determines

    M = [[a, (u2 v1/d2) b'], [(u2 v2/d2) b', a + (u1 v2/d2) b']]

and E has a cyclic subgroup C of order n with E/C ~ E exactly when some
coprime pair gives det M = n.  The subgroup is <(u11 + u21 tau)/n> where
(u11, u21) is the first column of U in M = U diag(1, n) V.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .arith import IntMatrix2, InvalidInput
from .smith import smith_decompose
from .tau import TauPoly


@dataclass(frozen=True)
class IsogenyMatrix:
    a: int
    bprime: int
    M: IntMatrix2
    n: int


def _check_pair(a: int, bprime: int):
    if a == 0 and bprime == 0:
        raise InvalidInput("(a, b') = (0, 0) is degenerate")
    if gcd(a, bprime) != 1:
        raise InvalidInput(f"a={a} and b'={bprime} are not coprime")


def build_matrix(tau: TauPoly, a: int, bprime: int) -> IsogenyMatrix:
    _check_pair(a, bprime)
    d2 = tau.d2
    M = IntMatrix2(
        a,
        tau.u2 * tau.v1 // d2 * bprime,
        tau.u2 * tau.v2 // d2 * bprime,
        a + tau.u1 * tau.v2 // d2 * bprime,
    )
    n = M.det()
    assert n > 0, (tau, a, bprime, M)
    return IsogenyMatrix(a, bprime, M, n)


def degree(tau: TauPoly, a: int, bprime: int) -> int:
    """det M from the completed-square formula, without building M."""
    _check_pair(a, bprime)
    d2 = tau.d2
    x = a + Fraction(tau.u1 * tau.v2, 2 * d2) * bprime
    n = x * x - Fraction(tau.u2**2 * tau.v2**2, 4 * d2 * d2) * tau.delta * bprime**2
    assert n.denominator == 1 and n > 0
    return n.numerator


def find_pairs(tau: TauPoly, n: int) -> list[tuple[int, int]]:
    """All coprime (a, b') with det M = n, one per sign class (b' > 0).

    With x = a + k b'/2 (k = u1 v2/d2) and |D| = u2^2 v2^2 |Delta| / d2^2,
    4n = (2x)^2 + |D| b'^2, so b'^2 <= 4n/|D| and (2x)^2 <= 4n - |D| b'^2.
    Sorted by (b', a).  For n = 1 the answer is [(1, 0)].
    """
    if n < 1:
        raise InvalidInput(f"n must be positive, got {n}")
    if n == 1:
        return [(1, 0)]
    absd = -tau.disc
    k = tau.k
    pairs = []
    for bp in range(1, isqrt(4 * n // absd) + 1):
        rest = 4 * n - absd * bp * bp
        r = isqrt(rest)
        if r * r != rest:
            continue
        for two_x in {r, -r}:
            t = two_x - k * bp
            if t % 2:
                continue
            a = t // 2
            if gcd(a, bp) == 1:
                pairs.append((bp, a))
    return [(a, bp) for bp, a in sorted(pairs)]


def has_self_isogeny(tau: TauPoly, n: int) -> bool:
    if n < 1:
        raise InvalidInput(f"n must be positive, got {n}")
    return bool(find_pairs(tau, n))


@dataclass(frozen=True)
class SubgroupGen:
    """The cyclic subgroup <(u11 + u21 tau)/n> of E[n]."""

    u11: int
    u21: int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInput("order must be positive")
        if gcd(self.u11, self.u21, self.n) != 1:
            raise InvalidInput(
                f"({self.u11} + {self.u21} tau)/{self.n} does not have order {self.n}")

    def canonical(self) -> SubgroupGen:
        """Least (u11, u21) mod n, lexicographically, over all unit multiples."""
        n = self.n
        x, y = self.u11 % n, self.u21 % n
        if n == 1:
            return SubgroupGen(0, 0, 1)
        g = gcd(x, n)
        if g == n:
            # x = 0 forces y to be a unit
            return SubgroupGen(0, 1, n)
        m = n // g
        # k x = g (mod n) iff k = k0 (mod m)
        k0 = pow(x // g, -1, m) if m > 1 else 0
        best = None
        for t in range(g):
            kk = k0 + t * m
            if gcd(kk, n) != 1:
                continue
            cand = kk * y % n
            if best is None or cand < best:
                best = cand
        return SubgroupGen(g, best, n)

    def element(self, tau: TauPoly):
        return tau.element(Fraction(self.u11, self.n), Fraction(self.u21, self.n))

    def __str__(self):
        return f"({self.u11} + {self.u21}*tau)/{self.n}"


def subgroup_generator(tau: TauPoly, a: int, bprime: int) -> SubgroupGen:
    iso = build_matrix(tau, a, bprime)
    if iso.n == 1:
        raise InvalidInput("degree 1: the subgroup is trivial")
    U = smith_decompose(iso.M).U
    return SubgroupGen(U.a, U.b, iso.n).canonical()
