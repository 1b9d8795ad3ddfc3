"""
Lorentzian and denormalized Lorentzian checks for exact polynomials, plus the
sign-change / homogenize pipeline applied to K-polynomials and cave polynomials.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Any, Dict, List, Optional, Sequence, Tuple

from loguru import logger

from src.invariants import cave
from src.polycore import Polymatroid, dual, is_mconvex
from src.polyalg import SparsePoly, homogenize, normalize, partial_derivative, support
from src.syzygy import k_polynomial_from_cave
from src.utils.errors import InvalidParameter, ZeroPolynomial
from .signature import SymmetricMatrix, positive_eigenvalue_count

TARGETS = ("kpoly", "cave-dual")


@dataclass(frozen=True)
class LorentzianVerdict:
    """Outcome of a Lorentzian check; `condition` names the first failure"""

    ok: bool
    condition: Optional[str] = None
    witness: Any = None
    hessians_checked: int = field(default=0, compare=False)

    def __bool__(self) -> bool:
        return self.ok


def sign_change(f: SparsePoly) -> SparsePoly:
    """Multiply the coefficient of t^n by (-1)^(deg f - |n|)"""
    if f.is_zero():
        raise ZeroPolynomial("Cannot sign-change the zero polynomial")
    d = f.degree()
    return SparsePoly(f.nvars, {exp: c * (-1) ** (d - sum(exp)) for exp, c in f.items()})


def hessian(g: SparsePoly) -> SymmetricMatrix:
    """Hessian of a quadratic form (constant matrix); lower-degree terms are ignored"""
    n = g.nvars
    rows = [[0] * n for _ in range(n)]
    for exp, c in g.homogeneous_part(2).items():
        nonzero = [i for i, e in enumerate(exp) if e]
        if len(nonzero) == 1:
            i = nonzero[0]
            rows[i][i] = 2 * c
        else:
            i, j = nonzero
            rows[i][j] = rows[j][i] = c
    return SymmetricMatrix.of(rows)


def _derivative_hessians(f: SparsePoly) -> List[Tuple[Tuple[int, ...], SymmetricMatrix]]:
    """Hessians of every derivative of order deg f - 2, memoized on prefixes"""
    order = f.degree() - 2
    cache: Dict[Tuple[int, ...], SparsePoly] = {(): f}

    def derivative(indices: Tuple[int, ...]) -> SparsePoly:
        if indices not in cache:
            cache[indices] = partial_derivative(derivative(indices[:-1]), indices[-1])
        return cache[indices]

    return [
        (indices, hessian(derivative(indices)))
        for indices in combinations_with_replacement(range(f.nvars), order)
    ]


def is_lorentzian(f: SparsePoly, parallel: int = 1) -> LorentzianVerdict:
    """
    Check the Lorentzian conditions in order: homogeneity, nonnegative
    coefficients, M-convex support, then at most one positive eigenvalue for
    the Hessian of every derivative of order deg f - 2.
    """
    if f.is_zero():
        raise ZeroPolynomial("The zero polynomial is not checked for Lorentzian-ness")
    if parallel < 1:
        raise InvalidParameter(f"parallel must be at least 1, got {parallel}", witness=parallel)

    if not f.is_homogeneous():
        degrees = sorted({sum(exp) for exp, _ in f.items()})
        return LorentzianVerdict(False, "homogeneous", {"degrees": degrees})

    negative = [{"exp": list(exp), "coeff": str(c)} for exp, c in f.items() if c < 0]
    if negative:
        return LorentzianVerdict(False, "nonnegative", negative[0])

    if not is_mconvex(support(f)):
        return LorentzianVerdict(False, "mconvex-support", [list(n) for n in support(f)])

    if f.degree() < 2:
        return LorentzianVerdict(True)

    checks = _derivative_hessians(f)
    matrices = [H for _, H in checks]
    if parallel == 1:
        counts = list(map(positive_eigenvalue_count, matrices))
    else:
        with ProcessPoolExecutor(max_workers=parallel) as executor:
            counts = list(executor.map(positive_eigenvalue_count, matrices))
    logger.debug(f"Checked {len(checks)} Hessians of order-{f.degree() - 2} derivatives")

    for (indices, _), count in zip(checks, counts):
        if count > 1:
            return LorentzianVerdict(
                False,
                "hessian",
                {"derivative": list(indices), "positive_eigenvalues": count},
                hessians_checked=len(checks),
            )
    return LorentzianVerdict(True, hessians_checked=len(checks))


def is_denormalized_lorentzian(f: SparsePoly, parallel: int = 1) -> LorentzianVerdict:
    """is_lorentzian applied to N(f), each coefficient divided by n!"""
    if f.is_zero():
        raise ZeroPolynomial("The zero polynomial is not checked for Lorentzian-ness")
    return is_lorentzian(normalize(f), parallel=parallel)


def lorentzian_target(
    P: Polymatroid,
    cage: Optional[Sequence[int]] = None,
    target: str = "kpoly",
    parallel: int = 1,
) -> LorentzianVerdict:
    """
    Sign-change, homogenize and test for denormalized Lorentzian-ness.

    Args:
        P: Polymatroid
        cage: Cage for the dual; defaults to P.cage
        target: "kpoly" for the K-polynomial of I_P, "cave-dual" for the
            cave polynomial of the dual
        parallel: Worker processes for the Hessian sweep
    """
    if target not in TARGETS:
        raise InvalidParameter(
            f"Unknown target '{target}', expected one of {TARGETS}", witness=target
        )
    cage = P.cage if cage is None else tuple(cage)
    if target == "kpoly":
        polynomial = k_polynomial_from_cave(P, cage)
    else:
        polynomial = cave(dual(P, cage))
    return is_denormalized_lorentzian(homogenize(sign_change(polynomial)), parallel=parallel)
