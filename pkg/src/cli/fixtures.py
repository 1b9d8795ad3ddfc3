"""
Built-in fixture corpus and input resolution.

A FILE argument may be a path, '-' for standard input, a fixture name,
'fixtures/<name>', or a uniform family name such as U(2;1,1,1).
"""

import re
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import pandas as pd
from loguru import logger
from pydantic import ValidationError

from config.config import Config
from src.polycore import (
    Polymatroid,
    base_points,
    direct_sum,
    dual,
    graphic,
    graphic_rank_oracle,
    rank_from_points,
    rank_zero,
    restriction_polymatroid,
    translate_minus,
    truncate,
    uniform,
    validate,
)
from src.storage import local_storage
from src.utils.errors import MalformedInput, UnknownFixture
from src.utils.lattice_utils import unit_vector
from .formats import PolymatroidFile

EXPORT_INDEX = "index"
UNIFORM_PATTERN = re.compile(r"^U\((\d+);(\d+(?:,\d+)*)\)$")

EXAMPLE_RANKS = {
    (1,): 2,
    (2,): 2,
    (3,): 4,
    (1, 2): 4,
    (1, 3): 5,
    (2, 3): 5,
    (1, 2, 3): 5,
}
EXAMPLE_CAGE = (2, 2, 4)

K3_EDGES = [(0, 1), (0, 2), (1, 2)]
# K4 edges 01, 02, 03, 12, 13, 23 carry indices 0..5
K4_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def worked_example() -> Polymatroid:
    return validate(3, EXAMPLE_RANKS, EXAMPLE_CAGE)


def uniform_from_name(name: str) -> Polymatroid:
    """Build U(r;m1,...,mp)"""
    match = UNIFORM_PATTERN.match(name.replace(" ", ""))
    if not match:
        raise UnknownFixture(f"'{name}' is not a uniform family name U(r;m1,...,mp)", witness=name)
    weights = [int(m) for m in match.group(2).split(",")]
    return uniform(len(weights), weights, int(match.group(1)))


def k4_restriction(groups: Sequence[Sequence[int]]) -> Polymatroid:
    oracle = graphic_rank_oracle(K4_EDGES)
    return restriction_polymatroid(lambda edges: oracle(sorted(edges)), groups)


def truncated(P: Polymatroid, b: Sequence[int]) -> Polymatroid:
    """The polymatroid of {n in B(P) : n >= b}, in P's cage"""
    return rank_from_points(truncate(base_points(P), b), P.cage)


def translated(P: Polymatroid, b: Sequence[int]) -> Polymatroid:
    """The polymatroid of {n - b : n in B(P), n >= b}, in the cage m - b"""
    cage = tuple(m - x for m, x in zip(P.cage, b))
    return rank_from_points(translate_minus(base_points(P), b), cage)


UNIFORM_FAMILY = [
    "U(1;1,1,1)",
    "U(2;1,1,1)",
    "U(2;1,1,1,1)",
    "U(3;2,2,2)",
    "U(2;2,1)",
    "U(3;1,2,3)",
    "U(4;2,2,2,2)",
]

Builder = Callable[[], Polymatroid]

BASE_FIXTURES: Dict[str, Builder] = {
    "paper-example": worked_example,
    "u12": lambda: uniform(2, (1, 1), 1),
    "rank-zero": lambda: rank_zero(2, (1, 1)),
    **{name: (lambda name=name: uniform_from_name(name)) for name in UNIFORM_FAMILY},
    "graphic-K3": lambda: graphic(K3_EDGES),
    "graphic-P3": lambda: graphic([(0, 1), (1, 2), (2, 3)]),
    "graphic-P4": lambda: graphic([(0, 1), (1, 2), (2, 3), (3, 4)]),
    "graphic-paw": lambda: graphic([(0, 1), (0, 2), (1, 2), (2, 3)]),
    "graphic-K4": lambda: graphic(K4_EDGES),
    "k4-star-triangle": lambda: k4_restriction([[0, 1, 2], [3, 4, 5]]),
    "k4-matchings": lambda: k4_restriction([[0, 5], [1, 4], [2, 3]]),
    "k4-paths": lambda: k4_restriction([[0, 1], [2, 4], [3, 5]]),
    "u12+u12": lambda: direct_sum(uniform(2, (1, 1), 1), uniform(2, (1, 1), 1)),
    "U(2;2,1)+U(1;1)": lambda: direct_sum(uniform_from_name("U(2;2,1)"), uniform(1, (1,), 1)),
}

# graphic-K4 exceeds the corpus bounds; rank-zero has no point above e_1
NO_VARIANTS = {"graphic-K4"}
NO_CUTS = {"rank-zero"}


def variants(name: str, builder: Builder, cuts: bool = True) -> Dict[str, Builder]:
    """Dual in the base's own cage, plus truncation and translation by e_1"""

    def cut(operation: Callable[[Polymatroid, Sequence[int]], Polymatroid]) -> Builder:
        def build() -> Polymatroid:
            P = builder()
            return operation(P, unit_vector(P.p, 1))

        return build

    built = {f"{name}-dual": lambda: dual(builder())}
    if cuts:
        built[f"{name}-trunc-e1"] = cut(truncated)
        built[f"{name}-minus-e1"] = cut(translated)
    return built


FIXTURES: Dict[str, Builder] = {
    **BASE_FIXTURES,
    **{
        variant: build
        for name, builder in BASE_FIXTURES.items()
        if name not in NO_VARIANTS
        for variant, build in variants(name, builder, cuts=name not in NO_CUTS).items()
    },
    "paper-example-minus-e3": lambda: translated(worked_example(), unit_vector(3, 3)),
    "paper-example-minus-111": lambda: translated(worked_example(), (1, 1, 1)),
}


def fixture_names() -> List[str]:
    return list(FIXTURES)


def load_fixture(name: str) -> Polymatroid:
    """
    Look up a built-in fixture, a uniform family name, or a polymatroid
    file stored under the fixtures data directory.

    Raises:
        UnknownFixture: if the name is none of these
    """
    if name.startswith("fixtures/"):
        name = name[len("fixtures/"):]
    if name in FIXTURES:
        return FIXTURES[name]()
    if UNIFORM_PATTERN.match(name.replace(" ", "")):
        return uniform_from_name(name)
    P = stored_fixture(name)
    if P is not None:
        logger.debug(f"Loaded stored fixture {name} from {local_storage.data_dir}")
        return P
    raise UnknownFixture(f"No fixture named '{name}'", witness={"known": fixture_names()})


def stored_fixture(name: str) -> Optional[Polymatroid]:
    """A polymatroid file saved under the fixtures data directory, if any"""
    document = local_storage.load_json(name) if local_storage.collection_exists(name) else None
    if document is None:
        return None
    try:
        return PolymatroidFile.model_validate(document).to_polymatroid()
    except ValidationError as e:
        raise MalformedInput(
            f"Stored fixture '{name}' is not a polymatroid file", witness=e.error_count()
        )


def exported_fixtures() -> pd.DataFrame:
    """Export index rows for the stored fixture documents; unindexed documents get a bare row"""
    stored = [name for name in local_storage.list_collections() if name != EXPORT_INDEX]
    index = local_storage.load_dataframe(EXPORT_INDEX)
    if index.empty:
        return pd.DataFrame({"fixture": stored})
    index = index[index["fixture"].isin(stored)].astype({"fixture": str, "cage": str})
    missing = sorted(set(stored) - set(index["fixture"]))
    if missing:
        index = pd.concat([index, pd.DataFrame({"fixture": missing})], ignore_index=True)
    return index.reset_index(drop=True)


def in_corpus(P: Polymatroid) -> bool:
    return P.p <= Config.CORPUS_MAX_P and max(P.cage) <= Config.CORPUS_MAX_CAGE


def corpus() -> List[Tuple[str, Polymatroid]]:
    """Every built-in fixture within the corpus bounds on p and cage entries"""
    members = []
    for name in FIXTURES:
        P = load_fixture(name)
        if in_corpus(P):
            members.append((name, P))
        else:
            logger.debug(f"Fixture {name} lies outside the corpus bounds")
    return members


def widened_cages(P: Polymatroid, count: int) -> List[Tuple[int, ...]]:
    """P's cage followed by cage + k(1, ..., 1) for k = 1, ..., count - 1"""
    return [tuple(m + k for m in P.cage) for k in range(count)]


def read_polymatroid_file(source: str) -> Polymatroid:
    """Parse and validate a polymatroid json document from a path or '-'"""
    try:
        document = local_storage.read_json(source)
    except FileNotFoundError:
        raise MalformedInput(f"File not found: {source}", witness=source)
    except ValueError as e:
        raise MalformedInput(f"Not a valid json document: {e}", witness=source)
    try:
        return PolymatroidFile.model_validate(document).to_polymatroid()
    except ValidationError as e:
        raise MalformedInput(
            f"Invalid polymatroid file: {e.error_count()} problem(s)",
            witness=[{"loc": list(err["loc"]), "msg": err["msg"]} for err in e.errors()],
        )


def resolve(source: str) -> Polymatroid:
    """Resolve a FILE argument to a validated polymatroid"""
    if source == "-" or Path(source).is_file():
        return read_polymatroid_file(source)
    return load_fixture(source)
