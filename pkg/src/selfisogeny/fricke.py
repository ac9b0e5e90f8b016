"""Fixed points of the Fricke involution w_n on Y0(n).

[E, C] is fixed by w_n when (E, C) ~ (E/C, E[n]/C).  For a witness pair this
is the condition det M = n with n | tr M, equivalently M^2 = 0 (mod n).
Every CM curve has exactly one n >= 2 for which such a C exists.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, isqrt

from .arith import IntMatrix2, InvalidInput
from .isogeny import SubgroupGen, build_matrix, find_pairs, subgroup_generator
from .qforms import class_number
from .tau import TauPoly, g_region, in_G

CASES = ("A", "B", "C2", "D3")


@dataclass(frozen=True)
class FrickeClassification:
    n: int
    case_tag: str
    witnesses: list = field(default_factory=list)


def fricke_test(tau: TauPoly, a: int, bprime: int) -> bool:
    iso = build_matrix(tau, a, bprime)
    return iso.n >= 2 and iso.M.trace() % iso.n == 0


def msquared_test(M: IntMatrix2, n: int) -> bool:
    if M.det() != n or n < 1:
        raise InvalidInput(f"det {M} is {M.det()}, not {n}")
    if M.content() != 1:
        raise InvalidInput(f"entries of {M} are not coprime")
    sq = M @ M
    return all(x % n == 0 for x in (sq.a, sq.A, sq.b, sq.B))


def fricke_witnesses(tau: TauPoly, n: int) -> list[tuple[int, int]]:
    """Pairs from :func:`find_pairs` that also pass the trace test."""
    if n < 2:
        return []
    return [p for p in find_pairs(tau, n) if fricke_test(tau, *p)]


def classify_fricke_n(tau: TauPoly) -> FrickeClassification:
    """The unique n >= 2 with a w_n-fixed [E, C], and which case produces it.

    With |D| = u2^2 v2^2 |Delta| / d2^2: if 2 d2 | u1 v2 then n = |D|/4
    (case A), except |D|/4 = 1 where n = 2 (C2); otherwise n = |D| (case B),
    tagged D3 when |D| = 3.
    """
    absd = -tau.disc
    if tau.u1 * tau.v2 % (2 * tau.d2) == 0:
        n, tag = absd // 4, "A"
        if n == 1:
            n, tag = 2, "C2"
    else:
        n, tag = absd, "B"
        if n == 3:
            tag = "D3"
    witnesses = fricke_witnesses(tau, n)
    assert witnesses, (tau, n, tag)
    return FrickeClassification(n, tag, witnesses)


def _solve_v1(u1: int, u2: int, v2: int, absd: int, d2: int):
    """v1 with u2^2 v2^2 |Delta| / d2^2 = absd, or None if not integral."""
    # u1^2 v2^2 + 4 v1 v2 u2^2 = -absd d2^2
    num = -absd * d2 * d2 - u1 * u1 * v2 * v2
    den = 4 * v2 * u2 * u2
    if num % den:
        return None
    return num // den


def enumerate_fixed_points(n: int) -> list[tuple[TauPoly, SubgroupGen]]:
    """Every w_n-fixed point as (reduced tau, canonical generator), sorted by tau."""
    if n < 2:
        raise InvalidInput(f"n must be at least 2, got {n}")
    targets = {4 * n, n}
    if n == 2:
        targets.add(4)
    found = {}
    for u1, u2, v2 in g_region(isqrt(4 * n // 3)):
        d2 = gcd(u2, v2)
        for absd in sorted(targets):
            v1 = _solve_v1(u1, u2, v2, absd, d2)
            if v1 is None or v1 >= 0 or gcd(v1, v2) != 1:
                continue
            tau = TauPoly(u1, u2, v1, v2)
            if not in_G(tau) or tau in found:
                continue
            cls = classify_fricke_n(tau)
            if cls.n != n:
                continue
            gens = {subgroup_generator(tau, a, bp) for a, bp in cls.witnesses}
            # one fixed subgroup class per curve; fail loudly if that breaks
            assert len(gens) == 1, (tau, gens)
            found[tau] = gens.pop()
    return sorted(found.items())


def nu(n: int) -> int:
    """Number of fixed points of w_n: h(-n) + h(-4n) if n = 3 mod 4, else h(-4n)."""
    if n < 2:
        raise InvalidInput(f"n must be at least 2, got {n}")
    if n in (2, 3):
        return 2
    total = class_number(-4 * n)
    if n % 4 == 3:
        total += class_number(-n)
    return total
