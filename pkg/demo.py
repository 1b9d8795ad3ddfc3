"""
Walkthrough - Polymatroid Toolkit
Reproduces the worked example end to end: base points, ideal, K-polynomial
by both routes, the dual and its cave polynomial, Lorentzian checks and a
valuative split.
"""

import sys
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent))

from loguru import logger

from config.config import EXAMPLES_DIR
from src.cli.fixtures import read_polymatroid_file
from src.invariants import cave, mobius, snapper, snapper_value
from src.lorentzian import lorentzian_target
from src.polycore import base_points, dual
from src.syzygy import (
    betti_table,
    hs_ideal,
    k_polynomial_from_betti,
    k_polynomial_from_cave,
    polymatroidal_ideal,
)
from src.valuative import hyperplane_split, split_relation, valuative_check

# Configure logger
logger.remove()  # Remove default handler
logger.add(sys.stdout, level="INFO", format="<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | <level>{message}</level>")
logger.add("logs/demo.log", rotation="10 MB", level="DEBUG")


def print_header(title):
    """Print a formatted section header"""
    print("\n" + "=" * 70)
    print(f"  {title}")
    print("=" * 70 + "\n")


def demo_polymatroid():
    print_header("1. THE POLYMATROID AND ITS BASE POINTS")

    P = read_polymatroid_file(str(EXAMPLES_DIR / "worked_example.json"))
    for subset, value in P.rank_table().items():
        print(f"   rk{set(subset)} = {value}")
    print(f"\n   cage = {P.cage}")

    points = base_points(P)
    print(f"\n   {len(points)} base points:")
    for n in points:
        print(f"   {n}")
    return P


def demo_ideal(P):
    print_header("2. POLYMATROIDAL IDEAL AND ITS RESOLUTION")

    ideal = polymatroidal_ideal(P)
    print("   Generators:")
    for line in ideal.to_text().splitlines():
        print(f"   {line}")

    table = betti_table(ideal)
    for i in table.indices():
        print(f"\n   beta_{i}: {table.total(i)} (multidegrees of degree {P.total_rank + i})")
    print(f"\n   Alternating sum: {table.alternating_sum()}")
    return table


def demo_kpoly(P, table):
    print_header("3. K-POLYNOMIAL BY TWO ROUTES")

    from_cave = k_polynomial_from_cave(P)
    from_betti = k_polynomial_from_betti(table)
    print(f"   {from_cave.pretty()}")
    if from_cave == from_betti:
        logger.success(f"Cave and Betti routes agree on all {len(from_cave)} terms")
    else:
        logger.error("Cave and Betti routes disagree")

    for i in range(table.projective_dimension() + 1):
        gens = hs_ideal(P, i=i)
        print(f"\n   HS_{i}: {len(gens)} generators of degree {P.total_rank + i}")


def demo_dual(P):
    print_header("4. DUAL POLYMATROID AND ITS CAVE POLYNOMIAL")

    D = dual(P)
    print("   Dual base points:")
    for n in base_points(D):
        print(f"   {n}")

    print(f"\n   cave = {cave(D).pretty()}")
    print(f"\n   Nonzero Möbius values: {len(mobius(D).nonzero())}")
    print(f"   Snapper polynomial: {snapper(D).pretty()}")
    print(f"   Snapper at (1,1,1): {snapper_value(D, (1, 1, 1))}")
    return D


def demo_lorentzian(P):
    print_header("5. DENORMALIZED LORENTZIAN CHECKS")

    for target in ("kpoly", "cave-dual"):
        verdict = lorentzian_target(P, target=target)
        status = "Lorentzian" if verdict else f"fails at {verdict.condition}"
        print(f"   {target}: {status} ({verdict.hessians_checked} Hessians checked)")


def demo_split(D):
    print_header("6. VALUATIVE SPLIT")

    S = base_points(D)
    pieces = hyperplane_split(S, [3], 1)
    print(f"   |S1| = {len(pieces.s1)}, |S2| = {len(pieces.s2)}, |S12| = {len(pieces.s12)}")
    verdict = valuative_check(split_relation(S, pieces))
    print(f"   Cave residual: {verdict.residual.pretty()}")


def main():
    P = demo_polymatroid()
    table = demo_ideal(P)
    demo_kpoly(P, table)
    D = demo_dual(P)
    demo_lorentzian(P)
    demo_split(D)
    logger.info("Walkthrough complete")


if __name__ == "__main__":
    main()
