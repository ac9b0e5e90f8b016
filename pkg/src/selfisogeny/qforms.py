"""Reduced primitive binary quadratic forms and class numbers h(D), D < 0."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .arith import InvalidInput


@dataclass(frozen=True, order=True)
class QuadForm:
    """a x^2 + b x y + c y^2."""

    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def is_primitive(self) -> bool:
        return gcd(self.a, self.b, self.c) == 1

    def is_reduced(self) -> bool:
        a, b, c = self.a, self.b, self.c
        if not (abs(b) <= a <= c):
            return False
        if (abs(b) == a or a == c) and b < 0:
            return False
        return True


def _check_disc(D: int):
    if D >= 0:
        raise InvalidInput(f"discriminant {D} must be negative")
    if D % 4 not in (0, 1):
        raise InvalidInput(f"no forms have discriminant {D} (D = 2, 3 mod 4)")


def _scan(D: int, a_max: int) -> list[QuadForm]:
    out = []
    for a in range(1, a_max + 1):
        for b in range(-a, a + 1):
            num = b * b - D
            if num % (4 * a):
                continue
            f = QuadForm(a, b, num // (4 * a))
            if f.is_reduced() and f.is_primitive():
                out.append(f)
    return out


def reduced_forms(D: int) -> list[QuadForm]:
    """All reduced primitive forms of discriminant D, sorted.

    A reduced form has 3a^2 <= |D|, which bounds the scan.
    """
    _check_disc(D)
    return _scan(D, isqrt(-D // 3))


def class_number(D: int) -> int:
    return len(reduced_forms(D))
