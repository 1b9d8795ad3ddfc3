"""
Termwise transforms of sparse polynomials: twisting by a cage, homogenization,
formal derivatives, factorial normalization and the support set.
"""

from math import factorial, prod
from typing import Sequence

from src.polycore.point_set import PointSet
from src.utils.errors import DimensionMismatch, NegativeExponent, ZeroPolynomial
from .sparse_poly import SparsePoly


def twist(f: SparsePoly, m: Sequence[int]) -> SparsePoly:
    """
    Map every term c*t^n to c*t^(m - n).

    Raises:
        NegativeExponent: if m is not componentwise >= every exponent of f
    """
    m = tuple(int(x) for x in m)
    if len(m) != f.nvars:
        raise DimensionMismatch(
            f"Twist vector has {len(m)} entries, expected {f.nvars}", witness=list(m)
        )
    twisted = {}
    for exp, c in f.items():
        reflected = tuple(a - b for a, b in zip(m, exp))
        if any(x < 0 for x in reflected):
            raise NegativeExponent(
                f"Twist by {list(m)} sends exponent {list(exp)} below zero",
                witness={"m": list(m), "exponent": list(exp)},
            )
        twisted[reflected] = c
    return SparsePoly(f.nvars, twisted)


def homogenize(f: SparsePoly) -> SparsePoly:
    """t0^deg(f) * f(t1/t0, ..., tp/t0), with t0 prepended in position 0"""
    if f.is_zero():
        raise ZeroPolynomial("Cannot homogenize the zero polynomial")
    d = f.degree()
    return SparsePoly(f.nvars + 1, {(d - sum(exp),) + exp: c for exp, c in f.items()})


def partial_derivative(f: SparsePoly, i: int) -> SparsePoly:
    """Formal derivative with respect to the variable in 0-based position i"""
    if not 0 <= i < f.nvars:
        raise DimensionMismatch(f"Variable position {i} is outside [0, {f.nvars})", witness=i)
    derived = {}
    for exp, c in f.items():
        if exp[i] == 0:
            continue
        lowered = exp[:i] + (exp[i] - 1,) + exp[i + 1:]
        derived[lowered] = c * exp[i]
    return SparsePoly(f.nvars, derived)


def _factorial_weight(exp: Sequence[int]) -> int:
    return prod(factorial(e) for e in exp)


def normalize(f: SparsePoly) -> SparsePoly:
    """N(t^n) = t^n / n!, with n! = n_1! ... n_p!"""
    return SparsePoly(f.nvars, {exp: c / _factorial_weight(exp) for exp, c in f.items()})


def denormalize(f: SparsePoly) -> SparsePoly:
    """Inverse of normalize"""
    return SparsePoly(f.nvars, {exp: c * _factorial_weight(exp) for exp, c in f.items()})


def support(f: SparsePoly) -> PointSet:
    """Exponent vectors of the nonzero terms"""
    return PointSet(f.nvars, tuple(sorted(f.terms)))
