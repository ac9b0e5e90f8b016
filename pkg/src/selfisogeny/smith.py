"""Smith decomposition M = U diag(1, n) V for 2x2 integer matrices of content 1."""

from __future__ import annotations

from dataclasses import dataclass

from .arith import IntMatrix2, InvalidInput


@dataclass(frozen=True)
class SmithDecomp:
    U: IntMatrix2
    V: IntMatrix2
    n: int

    @property
    def D(self) -> IntMatrix2:
        return IntMatrix2.diag(1, self.n)

    def product(self) -> IntMatrix2:
        return self.U @ self.D @ self.V


class _Work:
    """Running state with U @ D @ V == M maintained after every move."""

    def __init__(self, m: IntMatrix2):
        self.D = [[m.a, m.A], [m.b, m.B]]
        self.U = [[1, 0], [0, 1]]
        self.V = [[1, 0], [0, 1]]

    # Row op on D by E means U <- U E^-1; column op by F means V <- F^-1 V.

    def swap_rows(self):
        self.D.reverse()
        for row in self.U:
            row.reverse()

    def swap_cols(self):
        for row in self.D:
            row.reverse()
        self.V.reverse()

    def sub_row(self, q: int):
        """row1 -= q * row0."""
        self.D[1] = [self.D[1][j] - q * self.D[0][j] for j in range(2)]
        for row in self.U:
            row[0] += q * row[1]

    def add_row(self):
        """row0 += row1."""
        self.D[0] = [self.D[0][j] + self.D[1][j] for j in range(2)]
        for row in self.U:
            row[1] -= row[0]

    def sub_col(self, q: int):
        """col1 -= q * col0."""
        for row in self.D:
            row[1] -= q * row[0]
        self.V[0] = [self.V[0][j] + q * self.V[1][j] for j in range(2)]

    def negate_col(self, j: int):
        for row in self.D:
            row[j] = -row[j]
        self.V[j] = [-x for x in self.V[j]]

    def result(self):
        return (IntMatrix2.from_rows(self.U), IntMatrix2.from_rows(self.D),
                IntMatrix2.from_rows(self.V))


def smith_decompose(m: IntMatrix2) -> SmithDecomp:
    """Find unimodular U, V with U diag(1, |det M|) V = M.

    Pivoting picks the nonzero entry of least absolute value, first in
    row-major order, so the factors are reproducible.
    """
    if m.content() != 1:
        raise InvalidInput(f"entries of {m} have common factor {m.content()}")
    n = abs(m.det())
    if n == 0:
        raise InvalidInput(f"{m} is singular")
    w = _Work(m)
    D = w.D
    while True:
        cells = [(abs(D[i][j]), i, j) for i in range(2) for j in range(2) if D[i][j]]
        _, i, j = min(cells)
        if i:
            w.swap_rows()
        if j:
            w.swap_cols()
        D = w.D
        p = D[0][0]
        if D[1][0]:
            w.sub_row(D[1][0] // p)
        if D[0][1]:
            w.sub_col(D[0][1] // p)
        D = w.D
        if D[1][0] or D[0][1]:
            continue
        if D[1][1] % p:
            w.add_row()
            D = w.D
            continue
        break
    if D[0][0] < 0:
        w.negate_col(0)
    if D[1][1] < 0:
        w.negate_col(1)
    U, Dm, V = w.result()
    assert Dm == IntMatrix2.diag(1, n), Dm
    return SmithDecomp(U, V, n)
