"""CM points tau, encoded by their minimal polynomial X^2 - u X - v.

tau is always the root (u + i*sqrt(|Delta|))/2 in the upper half plane, so the
pair (u, v) pins it down.  Reduction to the fundamental domain

    G = { z : -1/2 <= Re z < 1/2, |z| >= 1 }

is done exactly: Re tau = u/2 and |tau|^2 = -v.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd

from .arith import IntMatrix2, InvalidInput, QElem, as_rational


@dataclass(frozen=True, order=True)
class TauPoly:
    """tau with tau^2 = (u1/u2) tau + (v1/v2), stored in lowest terms.

    Ordering is lexicographic on (u1, u2, v1, v2).
    """

    u1: int
    u2: int
    v1: int
    v2: int

    def __post_init__(self):
        if self.u2 <= 0 or self.v2 <= 0:
            raise InvalidInput("denominators u2, v2 must be positive")
        if gcd(self.u1, self.u2) != 1 or gcd(self.v1, self.v2) != 1:
            raise InvalidInput("u1/u2 and v1/v2 must be in lowest terms")
        if self.delta >= 0:
            raise InvalidInput(f"discriminant {self.delta} is not negative")

    @classmethod
    def from_uv(cls, u, v) -> TauPoly:
        u, v = as_rational(u), as_rational(v)
        return cls(u.numerator, u.denominator, v.numerator, v.denominator)

    @classmethod
    def parse(cls, text: str) -> TauPoly:
        """Parse ``"u1/u2,v1/v2"``; bare integers are allowed for either part."""
        return parse_tau(text)

    @cached_property
    def u(self) -> Fraction:
        return Fraction(self.u1, self.u2)

    @cached_property
    def v(self) -> Fraction:
        return Fraction(self.v1, self.v2)

    @cached_property
    def d2(self) -> int:
        return gcd(self.u2, self.v2)

    @cached_property
    def delta(self) -> Fraction:
        return self.u * self.u + 4 * self.v

    @cached_property
    def lead(self) -> int:
        """lcm(u2, v2); the leading coefficient of the primitive integral form."""
        return self.u2 * self.v2 // self.d2

    @cached_property
    def disc(self) -> int:
        """Integral discriminant u2^2 v2^2 Delta / d2^2 (negative)."""
        d = self.delta * self.lead * self.lead
        assert d.denominator == 1
        return d.numerator

    @cached_property
    def k(self) -> int:
        """The integer u1 v2 / d2, i.e. minus the middle form coefficient."""
        return self.u1 * self.v2 // self.d2

    def form(self) -> tuple[int, int, int]:
        """Primitive (A, B, C), A > 0, with A tau^2 + B tau + C = 0."""
        A = self.lead
        return A, -self.k, -self.v1 * (A // self.v2)

    @classmethod
    def from_form(cls, A: int, B: int, C: int) -> TauPoly:
        if A <= 0:
            raise InvalidInput("leading coefficient must be positive")
        return cls.from_uv(Fraction(-B, A), Fraction(-C, A))

    def spec(self) -> str:
        return f"{self.u1}/{self.u2},{self.v1}/{self.v2}"

    def equation(self) -> str:
        """Human form, e.g. ``tau^2 = -tau - 3/2``."""
        parts = []
        if self.u != 0:
            coeff = "" if abs(self.u) == 1 else f"{abs(self.u)}*"
            parts.append(("-" if self.u < 0 else "+", f"{coeff}tau"))
        parts.append(("-" if self.v < 0 else "+", str(abs(self.v))))
        sign, term = parts[0]
        out = ("-" if sign == "-" else "") + term
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return f"tau^2 = {out}"

    def element(self, x, y) -> QElem:
        return QElem(as_rational(x), as_rational(y), self)

    def __str__(self):
        return self.equation()


_NUM = r"-?\d+(?:/\d+)?"
_TAU_RE = re.compile(rf"^\s*({_NUM})\s*,\s*({_NUM})\s*$")


def parse_tau(text: str) -> TauPoly:
    m = _TAU_RE.match(text)
    if m is None:
        raise InvalidInput(f"malformed tau {text!r}; expected 'u1/u2,v1/v2'")
    try:
        u, v = Fraction(m.group(1)), Fraction(m.group(2))
    except ZeroDivisionError:
        raise InvalidInput(f"zero denominator in tau {text!r}") from None
    return TauPoly.from_uv(u, v)


def discriminant(tau: TauPoly) -> Fraction:
    return tau.delta


def _shift(tau: TauPoly, k: int) -> TauPoly:
    # sigma = tau + k satisfies sigma^2 = (u + 2k) sigma + (v - k u - k^2)
    u, v = tau.u, tau.v
    return TauPoly.from_uv(u + 2 * k, v - k * u - k * k)


def _invert(tau: TauPoly) -> TauPoly:
    # sigma = -1/tau satisfies sigma^2 = (u/v) sigma + 1/v
    u, v = tau.u, tau.v
    return TauPoly.from_uv(u / v, 1 / v)


_STEP_MATRIX = {
    "S": IntMatrix2(0, -1, 1, 0),
}


def _step_matrix(letter: str, power: int) -> IntMatrix2:
    if letter == "T":
        return IntMatrix2(1, power, 0, 1)
    m = IntMatrix2.identity()
    for _ in range(power % 4):
        m = _STEP_MATRIX["S"] @ m
    return m


def transform_tau(tau: TauPoly, step: str) -> TauPoly:
    """Apply one of ``"T"`` (tau+1), ``"T^-1"`` (tau-1) or ``"S"`` (-1/tau)."""
    if step == "T":
        return _shift(tau, 1)
    if step == "T^-1":
        return _shift(tau, -1)
    if step == "S":
        return _invert(tau)
    raise InvalidInput(f"unknown step {step!r}")


@dataclass(frozen=True)
class UnimodularTransform:
    """A word in T and S, applied left to right.

    Each letter is a pair (``"T"``, k) meaning tau -> tau + k, or
    (``"S"``, 1) meaning tau -> -1/tau.
    """

    word: tuple = ()

    def append(self, letter: str, power: int = 1) -> UnimodularTransform:
        if letter == "T" and self.word and self.word[-1][0] == "T":
            power += self.word[-1][1]
            rest = self.word[:-1]
            return UnimodularTransform(rest + ((("T", power),) if power else ()))
        return UnimodularTransform(self.word + ((letter, power),))

    @property
    def matrix(self) -> IntMatrix2:
        """Mobius matrix of the whole word (last step leftmost)."""
        m = IntMatrix2.identity()
        for letter, power in self.word:
            m = _step_matrix(letter, power) @ m
        return m

    def apply(self, tau: TauPoly) -> TauPoly:
        for letter, power in self.word:
            if letter == "T":
                tau = _shift(tau, power)
            else:
                for _ in range(power % 4):
                    tau = _invert(tau)
        return tau

    def letters(self) -> list[str]:
        out = []
        for letter, power in self.word:
            if letter == "S":
                out.append("S")
            elif power == 1:
                out.append("T")
            else:
                out.append(f"T^{power}")
        return out

    def __str__(self):
        return " ".join(self.letters()) or "id"


def in_G(tau: TauPoly) -> bool:
    """Membership in G with the arc canonicalised to Re(tau) <= 0."""
    u, v = tau.u, tau.v
    if not (-1 <= u < 1) or -v < 1:
        return False
    return not (v == -1 and u > 0)


def reduce_to_G(tau: TauPoly) -> tuple[TauPoly, UnimodularTransform]:
    """Move tau into G by translations and inversions (Gauss reduction)."""
    word = UnimodularTransform()
    while True:
        # bring u into [-1, 1), i.e. Re tau into [-1/2, 1/2)
        k = (tau.u + 1) // 2
        if k:
            tau = _shift(tau, -k)
            word = word.append("T", -k)
        if -tau.v < 1:
            tau = _invert(tau)
            word = word.append("S")
            continue
        break
    if tau.v == -1 and tau.u > 0:
        tau = _invert(tau)
        word = word.append("S")
    return tau, word


def reduced(tau: TauPoly) -> TauPoly:
    return reduce_to_G(tau)[0]


def is_isomorphic(tau1: TauPoly, tau2: TauPoly) -> bool:
    """Whether C/(Z + Z tau1) and C/(Z + Z tau2) are isomorphic."""
    return reduced(tau1) == reduced(tau2)


def g_region(lead_max: int, lead_min: int = 1):
    """Yield (u1, u2, v2) for every tau in G whose form has leading coefficient
    between lead_min and lead_max.

    The leading coefficient is lcm(u2, v2); Re tau in [-1/2, 1/2) gives
    -u2 <= u1 < u2.  Ordered by lcm(u2, v2), then u2, v2, u1.
    """
    for lead in range(lead_min, lead_max + 1):
        divs = [d for d in range(1, lead + 1) if lead % d == 0]
        for u2 in divs:
            for v2 in divs:
                if u2 * v2 // gcd(u2, v2) != lead:
                    continue
                for u1 in range(-u2, u2):
                    if gcd(u1, u2) == 1:
                        yield u1, u2, v2
