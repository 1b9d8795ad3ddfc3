"""
Monomial ideals given by minimal generator exponents, and the polymatroidal
ideal of a polymatroid.
"""

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

from src.polycore import Polymatroid, PointSet, base_points
from src.utils.errors import DimensionMismatch, NegativeExponent
from src.utils.lattice_utils import LatticePoint, dominates


def minimalize(gens: Iterable[Sequence[int]]) -> Tuple[LatticePoint, ...]:
    """Drop every generator divisible by another one; sorted, deduplicated"""
    unique = sorted({tuple(g) for g in gens}, key=lambda g: (sum(g), g))
    minimal = []
    for g in unique:
        if not any(dominates(g, h) for h in minimal):
            minimal.append(g)
    return tuple(sorted(minimal))


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal in x_1, ..., x_nvars; gens are minimal and sorted"""

    nvars: int
    gens: Tuple[LatticePoint, ...]

    @classmethod
    def of(cls, nvars: int, gens: Iterable[Sequence[int]]) -> "MonomialIdeal":
        gens = [tuple(int(e) for e in g) for g in gens]
        for g in gens:
            if len(g) != nvars:
                raise DimensionMismatch(
                    f"Generator {list(g)} does not have {nvars} exponents", witness=list(g)
                )
            if any(e < 0 for e in g):
                raise NegativeExponent(
                    f"Generator {list(g)} has a negative exponent", witness=list(g)
                )
        return cls(nvars, minimalize(gens))

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def is_empty(self) -> bool:
        """True for the zero ideal"""
        return not self.gens

    def contains(self, n: Sequence[int]) -> bool:
        """x^n lies in the ideal iff some generator divides it"""
        if len(n) != self.nvars:
            raise DimensionMismatch(
                f"Expected {self.nvars} exponents, got {len(n)}", witness=list(n)
            )
        return any(dominates(n, g) for g in self.gens)

    def point_set(self) -> PointSet:
        return PointSet(self.nvars, self.gens)

    def degrees(self) -> Tuple[int, ...]:
        return tuple(sorted({sum(g) for g in self.gens}))

    def to_text(self, prefix: str = "x") -> str:
        """One generator per line as x1^a*x2^b, for pasting into an algebra session"""
        lines = []
        for g in self.gens:
            factors = [
                f"{prefix}{i + 1}" if e == 1 else f"{prefix}{i + 1}^{e}"
                for i, e in enumerate(g)
                if e > 0
            ]
            lines.append("*".join(factors) if factors else "1")
        return "\n".join(lines)


def polymatroidal_ideal(P: Polymatroid) -> MonomialIdeal:
    """Ideal generated by x^n for the base points n; all of degree rk(P)"""
    return MonomialIdeal(P.p, base_points(P).points)
