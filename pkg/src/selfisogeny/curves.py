"""Enumerate, up to isomorphism, the curves with a cyclic degree-n self-isogeny.

The search runs over tau in G directly.  From

    n = a^2 + (u1 v2/d2) a b' - (u2^2 v1 v2/d2^2) b'^2

and |Delta| >= 3 on G we get lcm(u2, v2)^2 <= 4n/3 and b'^2 <= 4n/(3 lcm^2);
for each (u1, u2, v2, b', a) in that box v1 is solved for, not searched.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from math import gcd, isqrt

from .arith import InvalidInput
from .isogeny import find_pairs, subgroup_generator
from .lattice import verify_self_isogeny_oracle
from .tau import TauPoly, g_region, in_G

MAX_N = 10**6


def _check_n(n: int):
    if n < 2:
        raise InvalidInput(f"n must be at least 2, got {n}")
    if n > MAX_N:
        raise InvalidInput(f"n = {n} exceeds the desk-scale limit {MAX_N}")


def _lead_max(n: int) -> int:
    return isqrt(4 * n // 3)


def _search_lead(n: int, lead: int) -> set[TauPoly]:
    """Curves in G with lcm(u2, v2) == lead admitting a degree-n witness."""
    found = set()
    bp_max = isqrt(4 * n // (3 * lead * lead))
    for u1, u2, v2 in g_region(lead, lead):
        d2 = gcd(u2, v2)
        k = u1 * v2 // d2
        for bp in range(1, bp_max + 1):
            den = v2 * u2 * u2 * bp * bp
            # x = a + k b'/2 with x^2 <= n, i.e. |2a + k b'| <= 2 sqrt(n)
            r = isqrt(4 * n)
            for a in range(-((r + k * bp) // 2), (r - k * bp) // 2 + 1):
                if gcd(a, bp) != 1:
                    continue
                num = (a * a + k * a * bp - n) * d2 * d2
                if num % den:
                    continue
                v1 = num // den
                if v1 >= 0 or gcd(v1, v2) != 1:
                    continue
                tau = TauPoly(u1, u2, v1, v2)
                if in_G(tau):
                    found.add(tau)
    return found


def _certify(tau: TauPoly, n: int):
    a, bp = find_pairs(tau, n)[0]
    gen = subgroup_generator(tau, a, bp)
    if not verify_self_isogeny_oracle(tau, gen):
        raise AssertionError(f"lattice oracle rejects {tau} with {gen}")


def curves_with_self_isogeny(n: int, jobs: int = 1) -> list[TauPoly]:
    """Reduced tau (sorted) whose curve has a cyclic subgroup C of order n with E/C ~ E.

    ``jobs > 1`` splits the search by leading coefficient over processes;
    the merged result is identical.
    """
    _check_n(n)
    leads = range(1, _lead_max(n) + 1)
    found = set()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_search_lead, [n] * len(leads), leads):
                found |= part
    else:
        for lead in leads:
            found |= _search_lead(n, lead)
    out = sorted(found)
    for tau in out:
        _certify(tau, n)
    return out


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def prime_count_check(p: int, jobs: int = 1) -> tuple[int, bool]:
    """Count the curves for prime p and compare with p + 1."""
    if not is_prime(p):
        raise InvalidInput(f"{p} is not prime")
    count = len(curves_with_self_isogeny(p, jobs=jobs))
    return count, count == p + 1
