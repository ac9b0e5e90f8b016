"""Exact arithmetic: rationals, elements of Q(tau), and 2x2 integer matrices.

Nothing here ever touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class InvalidInput(ValueError):
    """Raised when an argument violates an operation's precondition."""


def rational_normalize(num: int, den: int) -> Fraction:
    """Return num/den in lowest terms with a positive denominator."""
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {num}/{den}")
    return Fraction(num, den)


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


@dataclass(frozen=True)
class QElem:
    """The element x + y*tau of Q(tau).

    ``ctx`` is anything exposing the rationals ``u`` and ``v`` of the
    relation tau^2 = u*tau + v (normally a :class:`~selfisogeny.tau.TauPoly`).
    """

    x: Fraction
    y: Fraction
    ctx: object

    def __post_init__(self):
        object.__setattr__(self, "x", as_rational(self.x))
        object.__setattr__(self, "y", as_rational(self.y))

    @classmethod
    def one(cls, ctx) -> QElem:
        return cls(Fraction(1), Fraction(0), ctx)

    @classmethod
    def tau(cls, ctx) -> QElem:
        return cls(Fraction(0), Fraction(1), ctx)

    def _coerce(self, other) -> QElem:
        if isinstance(other, QElem):
            if other.ctx != self.ctx:
                raise InvalidInput("operands live in different quadratic fields")
            return other
        if isinstance(other, (int, Fraction)):
            return QElem(as_rational(other), Fraction(0), self.ctx)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QElem(self.x + other.x, self.y + other.y, self.ctx)

    __radd__ = __add__

    def __neg__(self):
        return QElem(-self.x, -self.y, self.ctx)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return qfield_mul(self, other, self.ctx)

    __rmul__ = __mul__

    def conjugate(self) -> QElem:
        # tau + conj(tau) = u
        return QElem(self.x + self.y * self.ctx.u, -self.y, self.ctx)

    def trace(self) -> Fraction:
        return 2 * self.x + self.y * self.ctx.u

    def norm(self) -> Fraction:
        u, v = self.ctx.u, self.ctx.v
        return self.x * self.x + u * self.x * self.y - v * self.y * self.y

    def inverse(self) -> QElem:
        nm = self.norm()
        if nm == 0:
            raise ZeroDivisionError("inverse of zero in Q(tau)")
        c = self.conjugate()
        return QElem(c.x / nm, c.y / nm, self.ctx)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __str__(self):
        return f"{self.x} + ({self.y})*tau"


def qfield_mul(lhs: QElem, rhs: QElem, ctx) -> QElem:
    """Multiply two elements of Q(tau), reducing with tau^2 = u*tau + v."""
    if lhs.ctx != ctx or rhs.ctx != ctx:
        raise InvalidInput("operands live in different quadratic fields")
    u, v = ctx.u, ctx.v
    yy = lhs.y * rhs.y
    return QElem(
        lhs.x * rhs.x + yy * v,
        lhs.x * rhs.y + rhs.x * lhs.y + yy * u,
        ctx,
    )


@dataclass(frozen=True)
class IntMatrix2:
    """Integer matrix [[a, A], [b, B]], stored row-major."""

    a: int
    A: int
    b: int
    B: int

    @classmethod
    def identity(cls) -> IntMatrix2:
        return cls(1, 0, 0, 1)

    @classmethod
    def diag(cls, d1: int, d2: int) -> IntMatrix2:
        return cls(d1, 0, 0, d2)

    @classmethod
    def from_rows(cls, rows) -> IntMatrix2:
        (a, A), (b, B) = rows
        return cls(a, A, b, B)

    def rows(self):
        return ((self.a, self.A), (self.b, self.B))

    def det(self) -> int:
        return mat_det(self)

    def trace(self) -> int:
        return mat_trace(self)

    def content(self) -> int:
        """gcd of the four entries."""
        return gcd(self.a, self.A, self.b, self.B)

    def transpose(self) -> IntMatrix2:
        return IntMatrix2(self.a, self.b, self.A, self.B)

    def __matmul__(self, other):
        if not isinstance(other, IntMatrix2):
            return NotImplemented
        return mat_mul(self, other)

    def __str__(self):
        return f"[[{self.a}, {self.A}], [{self.b}, {self.B}]]"


def mat_det(m: IntMatrix2) -> int:
    return m.a * m.B - m.A * m.b


def mat_trace(m: IntMatrix2) -> int:
    return m.a + m.B


def mat_mul(m: IntMatrix2, n: IntMatrix2) -> IntMatrix2:
    return IntMatrix2(
        m.a * n.a + m.A * n.b,
        m.a * n.A + m.A * n.B,
        m.b * n.a + m.B * n.b,
        m.b * n.A + m.B * n.B,
    )
