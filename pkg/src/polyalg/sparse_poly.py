"""
Exact sparse multivariate polynomials over the rationals.

A SparsePoly maps exponent vectors (tuples of nonnegative integers of length
nvars) to nonzero Fraction coefficients. Serialized and printed output always
lists terms in descending lexicographic order of exponents.
"""

from fractions import Fraction
from math import prod
from numbers import Rational
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from src.utils.errors import DimensionMismatch, NegativeExponent

Exponent = Tuple[int, ...]
Coefficient = Union[int, Fraction]


def _as_fraction(value: Union[int, Fraction, str]) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


class SparsePoly:
    """Immutable exact polynomial in t_1, ..., t_nvars"""

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Optional[Mapping[Sequence[int], Coefficient]] = None):
        if nvars < 1:
            raise DimensionMismatch(f"A polynomial needs at least one variable, got {nvars}")
        collected: Dict[Exponent, Fraction] = {}
        for exponent, coeff in (terms or {}).items():
            exponent = tuple(int(e) for e in exponent)
            if len(exponent) != nvars:
                raise DimensionMismatch(
                    f"Exponent {list(exponent)} does not have {nvars} entries",
                    witness=list(exponent),
                )
            if any(e < 0 for e in exponent):
                raise NegativeExponent(
                    f"Exponent {list(exponent)} has a negative entry", witness=list(exponent)
                )
            collected[exponent] = collected.get(exponent, Fraction(0)) + _as_fraction(coeff)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(
            self, "_terms", {exp: c for exp, c in collected.items() if c != 0}
        )

    def __setattr__(self, name, value):
        raise AttributeError("SparsePoly is immutable")

    def __reduce__(self):
        return (SparsePoly, (self.nvars, self._terms))

    # ===== Constructors =====

    @classmethod
    def zero(cls, nvars: int) -> "SparsePoly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value: Coefficient) -> "SparsePoly":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def monomial(cls, exponent: Sequence[int], coeff: Coefficient = 1) -> "SparsePoly":
        return cls(len(exponent), {tuple(exponent): coeff})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "SparsePoly":
        """The variable in 0-based position i"""
        return cls.monomial(tuple(1 if j == i else 0 for j in range(nvars)))

    # ===== Inspection =====

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return dict(self._terms)

    def items(self) -> List[Tuple[Exponent, Fraction]]:
        """(exponent, coefficient) pairs in descending lexicographic order"""
        return sorted(self._terms.items(), reverse=True)

    def __iter__(self) -> Iterator[Tuple[Exponent, Fraction]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, exponent: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exponent), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Largest total degree; -1 for the zero polynomial"""
        return max((sum(exp) for exp in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(exp) for exp in self._terms}) <= 1

    def homogeneous_part(self, d: int) -> "SparsePoly":
        return SparsePoly(self.nvars, {exp: c for exp, c in self._terms.items() if sum(exp) == d})

    def top_degree_part(self) -> "SparsePoly":
        return self.homogeneous_part(self.degree())

    def has_nonnegative_integer_coefficients(self) -> bool:
        return all(c.denominator == 1 and c >= 0 for c in self._terms.values())

    def max_exponents(self) -> Exponent:
        """Componentwise maximum exponent over the terms"""
        return tuple(max((exp[i] for exp in self._terms), default=0) for i in range(self.nvars))

    # ===== Arithmetic =====

    def _check_compatible(self, other: "SparsePoly") -> None:
        if other.nvars != self.nvars:
            raise DimensionMismatch(
                f"Cannot combine polynomials in {self.nvars} and {other.nvars} variables",
                witness={"left": self.nvars, "right": other.nvars},
            )

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        if not isinstance(other, SparsePoly):
            return NotImplemented
        self._check_compatible(other)
        combined = dict(self._terms)
        for exp, c in other._terms.items():
            combined[exp] = combined.get(exp, Fraction(0)) + c
        return SparsePoly(self.nvars, combined)

    def __neg__(self) -> "SparsePoly":
        return SparsePoly(self.nvars, {exp: -c for exp, c in self._terms.items()})

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: Union[Coefficient, Rational]) -> "SparsePoly":
        factor = _as_fraction(factor)  # type: ignore[arg-type]
        return SparsePoly(self.nvars, {exp: c * factor for exp, c in self._terms.items()})

    def __mul__(self, factor):
        if isinstance(factor, (int, Fraction)):
            return self.scale(factor)
        return NotImplemented

    __rmul__ = __mul__

    def evaluate(self, point: Sequence[Union[int, Fraction]]) -> Fraction:
        """Exact value at a rational point"""
        if len(point) != self.nvars:
            raise DimensionMismatch(
                f"Evaluation point has {len(point)} coordinates, expected {self.nvars}",
                witness=[str(v) for v in point],
            )
        values = [_as_fraction(v) for v in point]
        return sum(
            (c * prod(v ** e for v, e in zip(values, exp)) for exp, c in self._terms.items()),
            Fraction(0),
        )

    # ===== Equality and display =====

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self._terms.items())))

    def pretty(self, var_names: Optional[Sequence[str]] = None) -> str:
        """
        Human-readable form in descending lexicographic order, e.g.
        "t1^2*t2 - 2*t1*t2 + 1/2*t3 - 1".
        """
        if var_names is None:
            var_names = [f"t{i + 1}" for i in range(self.nvars)]
        if self.is_zero():
            return "0"

        pieces = []
        for position, (exp, c) in enumerate(self.items()):
            factors = [
                name if e == 1 else f"{name}^{e}" for name, e in zip(var_names, exp) if e > 0
            ]
            magnitude = abs(c)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = f"{magnitude}*" + "*".join(factors)

            if position == 0:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.pretty()

    def __repr__(self) -> str:
        return f"SparsePoly(nvars={self.nvars}, {self.pretty()})"


# ===== Functional forms =====

def add(f: SparsePoly, g: SparsePoly) -> SparsePoly:
    return f + g


def negate(f: SparsePoly) -> SparsePoly:
    return -f


def subtract(f: SparsePoly, g: SparsePoly) -> SparsePoly:
    return f - g


def scale(f: SparsePoly, c: Coefficient) -> SparsePoly:
    return f.scale(c)


def evaluate(f: SparsePoly, point: Sequence[Union[int, Fraction]]) -> Fraction:
    return f.evaluate(point)


def linear_combination(nvars: int, pairs: Sequence[Tuple[Coefficient, SparsePoly]]) -> SparsePoly:
    """sum of a_i * f_i"""
    total = SparsePoly.zero(nvars)
    for coeff, poly in pairs:
        total = total + poly.scale(coeff)
    return total
