"""
Lattice-point and subset utilities shared by the polymatroid modules.
Subsets of the ground set [p] = {1, ..., p} are stored as bitmasks
(element i <-> bit i - 1); points are plain integer tuples.
"""

from itertools import product
from typing import Iterable, Iterator, List, Sequence, Tuple

from .errors import DimensionMismatch, InvalidParameter, MalformedInput

LatticePoint = Tuple[int, ...]


def subset_to_mask(subset: Iterable[int], p: int) -> int:
    """
    Convert a subset of 1-based indices into a bitmask.

    Args:
        subset: Iterable of indices in [1, p]
        p: Ground-set size

    Returns:
        Bitmask with bit i - 1 set for every i in the subset
    """
    mask = 0
    for i in subset:
        if not 1 <= i <= p:
            raise InvalidParameter(f"Index {i} is outside the ground set [1, {p}]", witness=i)
        mask |= 1 << (i - 1)
    return mask


def mask_to_subset(mask: int) -> Tuple[int, ...]:
    """Ascending 1-based indices of a bitmask"""
    subset = []
    i = 1
    while mask:
        if mask & 1:
            subset.append(i)
        mask >>= 1
        i += 1
    return tuple(subset)


def subset_key(mask: int) -> str:
    """Canonical file key of a subset, e.g. "1,3" """
    return ",".join(str(i) for i in mask_to_subset(mask))


def parse_subset_key(key: str) -> Tuple[int, ...]:
    """
    Parse an ascending comma-separated subset key.

    Raises:
        ValueError: if the key is empty, non-numeric or not strictly ascending
    """
    parts = [part.strip() for part in key.split(",")]
    if not key.strip() or any(not part.isdigit() for part in parts):
        raise ValueError(f"Malformed subset key: '{key}'")
    indices = tuple(int(part) for part in parts)
    if any(a >= b for a, b in zip(indices, indices[1:])) or indices[0] < 1:
        raise ValueError(f"Subset key must list ascending 1-based indices: '{key}'")
    return indices


def nonempty_masks(p: int) -> List[int]:
    """All nonempty subsets of [p], ordered by ascending index tuples"""
    return sorted(range(1, 1 << p), key=mask_to_subset)


def mask_sum(point: Sequence[int], mask: int) -> int:
    """Coordinate sum of a point over a subset"""
    total = 0
    i = 0
    while mask:
        if mask & 1:
            total += point[i]
        mask >>= 1
        i += 1
    return total


def check_dimension(point: Sequence[int], p: int) -> None:
    if len(point) != p:
        raise DimensionMismatch(
            f"Expected a vector with {p} coordinates, got {len(point)}",
            witness=list(point),
        )


def unit_vector(p: int, i: int) -> LatticePoint:
    """Standard unit vector e_i (1-based)"""
    return tuple(1 if j == i - 1 else 0 for j in range(p))


def add(a: Sequence[int], b: Sequence[int]) -> LatticePoint:
    return tuple(x + y for x, y in zip(a, b))


def subtract(a: Sequence[int], b: Sequence[int]) -> LatticePoint:
    return tuple(x - y for x, y in zip(a, b))


def dominates(a: Sequence[int], b: Sequence[int]) -> bool:
    """True when a >= b componentwise"""
    return all(x >= y for x, y in zip(a, b))


def is_nonnegative(point: Sequence[int]) -> bool:
    return all(x >= 0 for x in point)


def box_points(lower: Sequence[int], upper: Sequence[int]) -> Iterator[LatticePoint]:
    """Lattice points of the box lower <= n <= upper, lexicographic order"""
    return product(*(range(lo, hi + 1) for lo, hi in zip(lower, upper)))


def componentwise_max(points: Iterable[Sequence[int]], p: int) -> LatticePoint:
    upper = [0] * p
    for point in points:
        for i, value in enumerate(point):
            if value > upper[i]:
                upper[i] = value
    return tuple(upper)


def componentwise_min(points: Iterable[Sequence[int]], p: int) -> LatticePoint:
    lower = None
    for point in points:
        lower = list(point) if lower is None else [min(a, b) for a, b in zip(lower, point)]
    return tuple(lower) if lower is not None else tuple([0] * p)


def parse_vector(text: str) -> LatticePoint:
    """Parse "2,2,4" into an integer tuple"""
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise MalformedInput(f"Malformed integer vector: '{text}'", witness=text)
