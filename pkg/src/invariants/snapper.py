"""
Snapper polynomial through the binomial transform of the cave polynomial.

The transform is the Q-linear map sending t^n to
binom(t_1 + n_1, n_1) * ... * binom(t_p + n_p, n_p), expanded in the monomial
basis.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, prod
from typing import Any, Dict, List, Sequence, Tuple

from loguru import logger

from config.config import Config
from src.polycore import Polymatroid
from src.polyalg import SparsePoly
from src.utils.errors import DimensionMismatch, InvalidParameter
from src.utils.lattice_utils import box_points
from .cave import cave
from .mobius import MobiusTable, mobius


@lru_cache(maxsize=None)
def binomial_coefficients(n: int) -> Tuple[Fraction, ...]:
    """Coefficients of binom(t + n, n) = (t + 1)...(t + n) / n!, lowest degree first"""
    coeffs = [Fraction(1)]
    for k in range(1, n + 1):
        # multiply by (t + k)
        shifted = [Fraction(0)] + coeffs
        coeffs = [a + k * b for a, b in zip(shifted, coeffs + [Fraction(0)])]
    scale = prod(range(1, n + 1))
    return tuple(c / scale for c in coeffs)


def binomial_transform(f: SparsePoly) -> SparsePoly:
    result: Dict[Tuple[int, ...], Fraction] = {}
    for exp, c in f.items():
        factors = [binomial_coefficients(e) for e in exp]
        for degrees in product(*(range(e + 1) for e in exp)):
            term = c * prod(factor[d] for factor, d in zip(factors, degrees))
            result[degrees] = result.get(degrees, Fraction(0)) + term
    return SparsePoly(f.nvars, result)


def snapper(P: Polymatroid) -> SparsePoly:
    """
    Snapper polynomial of P.

    Coefficients may be rational; the polynomial is integer-valued and
    nonnegative on N^p, which `snapper_box_failures` samples.
    """
    polynomial = binomial_transform(cave(P))
    logger.debug(f"Snapper polynomial has {len(polynomial)} terms")
    return polynomial


def _value_from_table(table: MobiusTable, v: Sequence[int]) -> int:
    return sum(
        value * prod(comb(x + n_i, n_i) for x, n_i in zip(v, n)) for n, value in table.items()
    )


def snapper_box_failures(
    P: Polymatroid, bound: int = Config.SNAPPER_SAMPLE_BOUND
) -> List[Dict[str, Any]]:
    """
    Points of the box {0..bound}^p where the expanded Snapper polynomial is
    not a nonnegative integer, or differs from the Möbius-table evaluation.
    """
    if bound < 0:
        raise InvalidParameter(f"Sample bound must be nonnegative, got {bound}", witness=bound)
    polynomial = snapper(P)
    table = mobius(P)
    failures = []
    for v in box_points((0,) * P.p, (bound,) * P.p):
        value = polynomial.evaluate(v)
        expected = _value_from_table(table, v)
        if value.denominator != 1 or value < 0 or value != expected:
            failures.append({"point": list(v), "value": str(value), "expected": expected})
    return failures


def snapper_value(P: Polymatroid, v: Sequence[int]) -> int:
    """
    Evaluate the Snapper polynomial at v in N^p straight from the Möbius table:
    sum over n of mu(n) * prod_i binom(v_i + n_i, n_i).
    """
    if len(v) != P.p:
        raise DimensionMismatch(f"Expected {P.p} coordinates, got {len(v)}", witness=list(v))
    if any(x < 0 for x in v):
        raise InvalidParameter(f"Evaluation point {list(v)} must lie in N^p", witness=list(v))
    return _value_from_table(mobius(P), v)
