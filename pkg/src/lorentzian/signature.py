"""
Exact signature information for symmetric rational matrices.

A real symmetric matrix has a real-rooted characteristic polynomial, so
Descartes' rule of signs counts its positive eigenvalues exactly.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from sympy import Matrix, Rational

from src.utils.errors import DimensionMismatch, NotSymmetric

Entry = Union[int, Fraction]


@dataclass(frozen=True)
class SymmetricMatrix:
    n: int
    entries: Tuple[Tuple[Fraction, ...], ...]

    @classmethod
    def of(cls, rows: Sequence[Sequence[Entry]]) -> "SymmetricMatrix":
        """
        Raises:
            DimensionMismatch: if the rows do not form a square matrix
            NotSymmetric: if entries(i, j) != entries(j, i) somewhere
        """
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise DimensionMismatch("Matrix is not square", witness=[len(row) for row in rows])
        entries = tuple(tuple(Fraction(x) for x in row) for row in rows)
        for i in range(n):
            for j in range(i + 1, n):
                if entries[i][j] != entries[j][i]:
                    raise NotSymmetric(
                        f"Entry ({i}, {j}) = {entries[i][j]} differs from "
                        f"({j}, {i}) = {entries[j][i]}",
                        witness=[i, j],
                    )
        return cls(n, entries)

    def negated(self) -> "SymmetricMatrix":
        return SymmetricMatrix(self.n, tuple(tuple(-x for x in row) for row in self.entries))

    def to_sympy(self) -> Matrix:
        return Matrix(
            self.n,
            self.n,
            [Rational(x.numerator, x.denominator) for row in self.entries for x in row],
        )

    def rank(self) -> int:
        return self.to_sympy().rank() if self.n else 0


def _sign_changes(coefficients: List) -> int:
    signs = [1 if c > 0 else -1 for c in coefficients if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def positive_eigenvalue_count(H: SymmetricMatrix) -> int:
    """Number of strictly positive eigenvalues, from the characteristic polynomial"""
    if H.n == 0:
        return 0
    return _sign_changes(H.to_sympy().charpoly().all_coeffs())


def inertia(H: SymmetricMatrix) -> Tuple[int, int, int]:
    """(positive, negative, zero) eigenvalue counts"""
    positive = positive_eigenvalue_count(H)
    negative = positive_eigenvalue_count(H.negated())
    return positive, negative, H.n - H.rank()
