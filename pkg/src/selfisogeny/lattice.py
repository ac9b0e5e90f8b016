"""Lattices inside Q(tau) and the brute-force isomorphism oracle.

The oracle never looks at the witness matrix M: it builds L' = L + Z g
directly, takes a Hermite basis (w1, w2), and asks whether w2/w1 lies in the
same SL2(Z)-orbit as tau.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .arith import IntMatrix2, InvalidInput, QElem
from .isogeny import SubgroupGen
from .tau import TauPoly, is_isomorphic


@dataclass(frozen=True)
class Lattice:
    """The Z-span of ``gens`` inside Q(tau)."""

    tau: TauPoly
    gens: tuple

    def __post_init__(self):
        for g in self.gens:
            if not isinstance(g, QElem) or g.ctx != self.tau:
                raise InvalidInput("lattice generators must lie in Q(tau)")

    @classmethod
    def standard(cls, tau: TauPoly) -> Lattice:
        return cls(tau, (QElem.one(tau), QElem.tau(tau)))

    def extend(self, g: QElem) -> Lattice:
        return Lattice(self.tau, self.gens + (g,))

    def coords(self, scale: int) -> list[tuple[int, int]]:
        """Integer coordinates of the generators in the basis (1/scale, tau/scale)."""
        out = []
        for g in self.gens:
            x, y = g.x * scale, g.y * scale
            if x.denominator != 1 or y.denominator != 1:
                raise InvalidInput(f"generator {g} is not integral at scale {scale}")
            out.append((x.numerator, y.numerator))
        return out


def hnf_rows(rows) -> IntMatrix2:
    """Upper-triangular Hermite basis [[h00, h01], [0, h11]] of a rank-2 row module.

    h00, h11 > 0 and 0 <= h01 < h11.
    """
    rows = [tuple(r) for r in rows]
    # Euclid on the first column until one row carries the gcd
    while sum(1 for r in rows if r[0]) > 1:
        ip = min((i for i, r in enumerate(rows) if r[0]),
                 key=lambda i: (abs(rows[i][0]), i))
        p = rows[ip]
        rest = []
        for i, r in enumerate(rows):
            if i == ip or not r[0]:
                rest.append(r)
                continue
            q = r[0] // p[0]
            rest.append((r[0] - q * p[0], r[1] - q * p[1]))
        rows = rest
    tops = [r for r in rows if r[0]]
    h11 = 0
    for r in rows:
        if not r[0]:
            h11 = gcd(h11, r[1])
    if not tops or h11 == 0:
        raise InvalidInput("generators do not span a rank-2 lattice")
    h00, h01 = tops[0]
    if h00 < 0:
        h00, h01 = -h00, -h01
    return IntMatrix2(h00, h01 % h11, 0, h11)


def lattice_hnf(L: Lattice, scale: int) -> IntMatrix2:
    if scale < 1:
        raise InvalidInput("scale must be positive")
    return hnf_rows(L.coords(scale))


def basis_ratio(tau: TauPoly, basis: IntMatrix2) -> TauPoly:
    """tau'' = w2/w1 for the rows of ``basis``, turned into the upper half plane."""
    w1 = tau.element(basis.a, basis.A)
    w2 = tau.element(basis.b, basis.B)
    ratio = w2 / w1
    if ratio.y < 0:
        # Z w1 + Z w2 = Z w1 + Z (-w2)
        ratio = -ratio
    # minimal polynomial of X + Y tau: s^2 = trace * s - norm
    return TauPoly.from_uv(ratio.trace(), -ratio.norm())


def verify_self_isogeny_oracle(tau: TauPoly, gen: SubgroupGen) -> bool:
    """Decide C/L ~ C/(L + Z g) for g = (u11 + u21 tau)/n by lattice reduction."""
    L2 = Lattice.standard(tau).extend(gen.element(tau))
    basis = lattice_hnf(L2, gen.n)
    return is_isomorphic(basis_ratio(tau, basis), tau)
