"""
Property sweeps over the fixture corpus.

Every check returns OutcomeOutput records; a failed record names the
fixture, the check and a json-able detail, so a mismatch can be replayed
from the command line.
"""

import sys
from itertools import permutations
from typing import Callable, Dict, List, Sequence, Tuple

from loguru import logger
from tqdm import tqdm

from config.config import Config
from src.invariants import (
    cave,
    cave_from_mobius,
    cave_permuted,
    generalized_polymatroid_check,
    mobius,
    mobius_by_definition,
    snapper,
    snapper_box_failures,
)
from src.polycore import (
    PointSet,
    Polymatroid,
    base_points,
    is_mconvex,
    rank_from_points,
    translate_minus,
    truncate,
)
from src.polyalg import support
from src.syzygy import (
    BettiTable,
    betti_table,
    hs_from_betti,
    hs_ideal,
    is_linear,
    k_polynomial_from_betti,
    k_polynomial_from_cave,
    polymatroidal_ideal,
)
from src.utils.errors import PolymatroidError
from src.utils.lattice_utils import dominates, subtract, unit_vector
from src.valuative import (
    SplitCase,
    check_relation,
    hilbert_valuative_check,
    hyperplane_split,
    mobius_valuative_check,
    random_splits,
    split_relation,
    valuative_check,
)
from .fixtures import corpus, load_fixture, widened_cages
from .formats import OutcomeOutput

Outcomes = List[OutcomeOutput]

# The dual of the worked example cut at x_3 = 1
EXAMPLE_DUAL_SPLIT = SplitCase("paper-example-dual", PointSet(3, ()), (3,), 1)


def _outcome(fixture: str, check: str, ok: bool, detail=None) -> OutcomeOutput:
    if not ok:
        logger.debug(f"{fixture}: {check} failed with {detail}")
    return OutcomeOutput(fixture=fixture, check=check, ok=bool(ok), detail=detail)


def _mismatch_terms(left, right) -> Dict[str, List[List[int]]]:
    """Exponents present on one side only or with differing coefficients"""
    a, b = dict(left.items()), dict(right.items())
    return {
        "differing": [list(exp) for exp in sorted(set(a) | set(b)) if a.get(exp) != b.get(exp)]
    }


# ===== Per-fixture checks =====

def check_kpoly(name: str, P: Polymatroid, table: BettiTable, cages: int) -> Outcomes:
    """K-polynomial from the cave of the dual equals the Betti route, for several cages"""
    from_betti = k_polynomial_from_betti(table)
    outcomes = []
    for cage in widened_cages(P, cages):
        from_cave = k_polynomial_from_cave(P, cage)
        ok = from_cave == from_betti
        detail = {"cage": list(cage)}
        if not ok:
            detail.update(_mismatch_terms(from_cave, from_betti))
        outcomes.append(_outcome(name, "kpoly", ok, detail))
    return outcomes


def check_mobius(name: str, P: Polymatroid) -> Outcomes:
    """cave(P) = sum mu(n) t^n, and the closed-form Möbius table matches the recursion"""
    f, g = cave(P), cave_from_mobius(P)
    outcomes = [
        _outcome(name, "cave-mobius", f == g, None if f == g else _mismatch_terms(f, g))
    ]
    layered, literal = mobius(P), mobius_by_definition(P)
    points = sorted(set(layered.values) | set(literal.values))
    differing = [list(n) for n in points if layered[n] != literal[n]]
    outcomes.append(_outcome(name, "mobius-recursion", not differing, differing or None))
    return outcomes


def check_hs(name: str, P: Polymatroid, table: BettiTable) -> Outcomes:
    """HS_i through the dual Möbius function equals HS_i read from the Betti table"""
    outcomes = []
    ideal = polymatroidal_ideal(P)
    for i in range(table.projective_dimension() + 1):
        via_mobius = hs_ideal(P, P.cage, i)
        via_betti = hs_from_betti(table, i)
        ok = via_mobius.gens == via_betti.gens
        detail = {"index": i}
        if not ok:
            detail.update(
                mobius=[list(g) for g in via_mobius.gens],
                betti=[list(g) for g in via_betti.gens],
            )
        outcomes.append(_outcome(name, "hs-routes", ok, detail))
        outcomes.append(
            _outcome(name, "hs-mconvex", is_mconvex(via_mobius.point_set()), {"index": i})
        )
        if i == 0:
            outcomes.append(_outcome(name, "hs0-is-ideal", via_mobius.gens == ideal.gens))
    return outcomes


def check_gpm(name: str, P: Polymatroid) -> Outcomes:
    return [_outcome(name, "gpm", generalized_polymatroid_check(cave(P)))]


def check_linear_and_euler(name: str, P: Polymatroid, table: BettiTable) -> Outcomes:
    """Linear resolution, alternating Betti sum, cave(1) and Snapper integrality"""
    ones, zeros = (1,) * P.p, (0,) * P.p
    outcomes = [
        _outcome(name, "linear-resolution", is_linear(table, P.total_rank)),
        _outcome(name, "betti-alternating-sum", table.alternating_sum() == 1,
                 {"sum": table.alternating_sum()}),
        _outcome(name, "cave-at-ones", cave(P).evaluate(ones) == 1,
                 {"value": str(cave(P).evaluate(ones))}),
    ]
    failing = snapper_box_failures(P)
    outcomes.append(_outcome(name, "snapper-integral", not failing, failing or None))
    polynomial = snapper(P)
    outcomes.append(_outcome(name, "snapper-at-zero", polynomial.evaluate(zeros) == 1,
                             {"value": str(polynomial.evaluate(zeros))}))
    return outcomes


def _offsets(P: Polymatroid) -> List[Tuple[int, ...]]:
    offsets = [unit_vector(P.p, i) for i in range(1, P.p + 1)]
    ones = (1,) * P.p
    if ones not in offsets:
        offsets.append(ones)
    return offsets


def check_cuts(name: str, P: Polymatroid) -> Outcomes:
    """
    Truncations and translations stay M-convex, their Möbius values agree
    with P's above e_i, and the cave support above b is the translated cave
    support shifted back by b.
    """
    outcomes = []
    S = base_points(P)
    table = mobius(P)
    cave_support = support(cave(P)).members
    unit_offsets = {unit_vector(P.p, i) for i in range(1, P.p + 1)}

    for b in _offsets(P):
        top, shifted = truncate(S, b), translate_minus(S, b)
        if top.is_empty():
            continue
        detail = {"b": list(b)}
        outcomes.append(
            _outcome(name, "cut-mconvex", is_mconvex(top) and is_mconvex(shifted), detail)
        )

        shifted_P = rank_from_points(shifted)
        above = {n for n in cave_support if dominates(n, b)}
        moved = {tuple(x + y for x, y in zip(n, b)) for n in support(cave(shifted_P))}
        outcomes.append(_outcome(name, "cave-support-truncation", above == moved, detail))

        if b not in unit_offsets:
            continue
        top_table = mobius(rank_from_points(top))
        shifted_table = mobius(shifted_P)
        candidates = {n for n in set(table.values) | set(top_table.values) if dominates(n, b)}
        differing = [
            list(n) for n in sorted(candidates)
            if not table[n] == top_table[n] == shifted_table[subtract(n, b)]
        ]
        detail = dict(detail, differing=differing) if differing else detail
        outcomes.append(_outcome(name, "cut-mobius", not differing, detail))
    return outcomes


def check_symmetry(name: str, P: Polymatroid) -> Outcomes:
    f = cave(P)
    failing = [list(pi) for pi in permutations(range(1, P.p + 1)) if cave_permuted(P, pi) != f]
    return [_outcome(name, "cave-symmetry", not failing, failing or None)]


# ===== Valuative sweep =====

def split_checks(case: SplitCase) -> Outcomes:
    """Split one point set and run the relation and all three valuativity checks"""
    label = f"{case.name} J={list(case.subset)} c={case.threshold}"
    pieces = hyperplane_split(case.points, case.subset, case.threshold)
    relation = split_relation(case.points, pieces)
    relation_check = check_relation(relation)
    outcomes = [_outcome(label, "relation", relation_check.ok,
                         {"level": relation_check.level, "witness": relation_check.witness})]
    if not relation_check:
        return outcomes
    for verdict_of in (valuative_check, mobius_valuative_check, hilbert_valuative_check):
        verdict = verdict_of(relation)
        outcomes.append(_outcome(label, f"valuative-{verdict.invariant}", verdict.ok))
    return outcomes


def check_valuative(members: Sequence[Tuple[str, Polymatroid]], count: int, seed: int) -> Outcomes:
    named_sets = [(name, base_points(P)) for name, P in members]
    cases = random_splits(named_sets, count=count, seed=seed)
    dual_points = base_points(load_fixture(EXAMPLE_DUAL_SPLIT.name))
    cases.append(EXAMPLE_DUAL_SPLIT._replace(points=dual_points))
    logger.debug(f"Checking {len(cases)} hyperplane splits")

    outcomes = []
    for case in cases:
        outcomes.extend(split_checks(case))
    return outcomes


# ===== Driver =====

def fixture_checks(name: str, P: Polymatroid, cages: int, parallel: int) -> Outcomes:
    """Every per-fixture check; a domain error becomes a failed outcome"""
    try:
        table = betti_table(polymatroidal_ideal(P), parallel=parallel)
    except PolymatroidError as e:
        return [_outcome(name, "betti", False, e.to_dict())]

    steps: List[Callable[[], Outcomes]] = [
        lambda: check_kpoly(name, P, table, cages),
        lambda: check_mobius(name, P),
        lambda: check_hs(name, P, table),
        lambda: check_gpm(name, P),
        lambda: check_linear_and_euler(name, P, table),
        lambda: check_cuts(name, P),
        lambda: check_symmetry(name, P),
    ]
    outcomes: Outcomes = []
    for step in steps:
        try:
            outcomes.extend(step())
        except PolymatroidError as e:
            outcomes.append(_outcome(name, e.code, False, e.to_dict()))
    return outcomes


def run_corpus(
    cages: int = 2,
    parallel: int = Config.DEFAULT_PARALLEL,
    seed: int = Config.DEFAULT_SEED,
    splits: int = Config.VALUATIVE_SPLITS,
) -> Outcomes:
    """
    Run every corpus property check.

    Args:
        cages: Number of legal cages per fixture for the K-polynomial check
        parallel: Worker processes for the Betti sweeps
        seed: Seed for the random split selection
        splits: Number of random splits drawn across the corpus

    Returns:
        All outcomes, in fixture order followed by the split checks
    """
    members = corpus()
    logger.info(f"Checking {len(members)} corpus fixtures with {cages} cage(s) each")

    outcomes: Outcomes = []
    progress = tqdm(members, desc="Checking corpus", unit="fixture",
                    file=sys.stderr, disable=not sys.stderr.isatty())
    for name, P in progress:
        outcomes.extend(fixture_checks(name, P, cages, parallel))

    try:
        outcomes.extend(check_valuative(members, splits, seed))
    except PolymatroidError as e:
        outcomes.append(_outcome("splits", e.code, False, e.to_dict()))

    failures = sum(1 for outcome in outcomes if not outcome.ok)
    logger.info(f"{len(outcomes)} checks run, {failures} failed")
    return outcomes
