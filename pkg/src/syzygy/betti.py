"""
Multigraded Betti numbers of monomial ideals.

beta_{i,b}(I) = dim H~_{i-1}(K^b(I)). Only multidegrees b in the lcm lattice
of the generators can carry syzygies, so the sweep over the box
0 <= b <= lcm(all generators) skips every b that is not the lcm of the
generators dividing it.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, Iterator, List, Mapping, Tuple

from loguru import logger

from src.utils.errors import EmptyIdeal, InvalidParameter
from src.utils.lattice_utils import (
    LatticePoint,
    box_points,
    componentwise_max,
    dominates,
)
from .ideal import MonomialIdeal, minimalize
from .koszul import reduced_homology_ranks, upper_koszul_faces

BettiKey = Tuple[int, LatticePoint]


@dataclass(frozen=True)
class BettiTable:
    """Nonzero multigraded Betti numbers beta_{i,b}"""

    nvars: int
    entries: Mapping[BettiKey, int]

    def __getitem__(self, key: BettiKey) -> int:
        i, b = key
        return self.entries.get((i, tuple(b)), 0)

    def __len__(self) -> int:
        return len(self.entries)

    def items(self) -> List[Tuple[BettiKey, int]]:
        """Entries ordered by homological index, then ascending multidegree"""
        return sorted(self.entries.items())

    def __iter__(self) -> Iterator[Tuple[BettiKey, int]]:
        return iter(self.items())

    def indices(self) -> Tuple[int, ...]:
        return tuple(sorted({i for i, _ in self.entries}))

    def multidegrees(self, i: int) -> Tuple[LatticePoint, ...]:
        return tuple(sorted(b for j, b in self.entries if j == i))

    def total(self, i: int) -> int:
        """beta_i, summed over multidegrees"""
        return sum(v for (j, _), v in self.entries.items() if j == i)

    def projective_dimension(self) -> int:
        return max(self.indices(), default=-1)

    def alternating_sum(self) -> int:
        return sum((-1) ** i * v for (i, _), v in self.entries.items())


def lcm_lattice_degrees(ideal: MonomialIdeal) -> List[LatticePoint]:
    """Multidegrees b in the generator box that equal the lcm of the generators below them"""
    upper = componentwise_max(ideal.gens, ideal.nvars)
    degrees = []
    for b in box_points((0,) * ideal.nvars, upper):
        below = [g for g in ideal.gens if dominates(b, g)]
        if below and componentwise_max(below, ideal.nvars) == b:
            degrees.append(b)
    return degrees


def _betti_at(job: Tuple[MonomialIdeal, LatticePoint]) -> List[Tuple[BettiKey, int]]:
    ideal, b = job
    homology = reduced_homology_ranks(upper_koszul_faces(ideal, b))
    return [((k + 1, b), rank) for k, rank in homology.items()]


def betti_table(ideal: MonomialIdeal, parallel: int = 1) -> BettiTable:
    """
    Compute every nonzero beta_{i,b} of a monomial ideal.

    Args:
        ideal: Nonzero monomial ideal
        parallel: Worker processes for the multidegree sweep (1 runs in-process)

    Returns:
        BettiTable, identical for every value of parallel

    Raises:
        EmptyIdeal: for the zero ideal
    """
    if ideal.is_empty():
        raise EmptyIdeal("The zero ideal has no resolution")
    if parallel < 1:
        raise InvalidParameter(f"parallel must be at least 1, got {parallel}", witness=parallel)

    degrees = lcm_lattice_degrees(ideal)
    logger.debug(f"Sweeping {len(degrees)} lcm-lattice multidegrees of {len(ideal)} generators")

    jobs = [(ideal, b) for b in degrees]
    if parallel == 1:
        results = map(_betti_at, jobs)
        entries: Dict[BettiKey, int] = dict(pair for chunk in results for pair in chunk)
    else:
        chunksize = max(1, len(jobs) // (4 * parallel))
        with ProcessPoolExecutor(max_workers=parallel) as executor:
            results = executor.map(_betti_at, jobs, chunksize=chunksize)
            entries = dict(pair for chunk in results for pair in chunk)

    return BettiTable(ideal.nvars, entries)


def hs_from_betti(table: BettiTable, i: int) -> MonomialIdeal:
    """i-th homological shift ideal read off the Betti table"""
    if i < 0:
        raise InvalidParameter(f"Homological index must be nonnegative, got {i}", witness=i)
    gens = table.multidegrees(i)
    if not gens:
        logger.warning(f"Betti table has no entries in homological degree {i}")
    return MonomialIdeal(table.nvars, minimalize(gens))


def is_linear(table: BettiTable, degree: int) -> bool:
    """beta_{i,b} != 0 only for |b| = degree + i"""
    return all(sum(b) == degree + i for (i, b) in table.entries)

