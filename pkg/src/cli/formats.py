"""
File and output schemas.

Every output model converts to and from its in-memory value, so a json
document written by the CLI parses back to an identical value.
"""

import json
from fractions import Fraction
from typing import Any, Dict, List, Optional

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.invariants import MobiusTable
from src.polycore import PointSet, Polymatroid, base_points, rank_from_points, validate
from src.polyalg import SparsePoly
from src.syzygy import BettiTable, MonomialIdeal
from src.utils.lattice_utils import nonempty_masks, parse_subset_key, subset_key


class StrictModel(BaseModel):
    model_config = ConfigDict(extra="forbid")


# ===== Input =====

class PolymatroidFile(StrictModel):
    """A polymatroid given by a total rank table or by its base points"""

    p: int = Field(ge=1)
    cage: Optional[List[int]] = None
    rank: Optional[Dict[str, int]] = None
    base_points: Optional[List[List[int]]] = None

    @field_validator("rank")
    @classmethod
    def check_subset_keys(cls, rank: Optional[Dict[str, int]]) -> Optional[Dict[str, int]]:
        if rank is not None:
            for key in rank:
                parse_subset_key(key)
        return rank

    @model_validator(mode="after")
    def check_exactly_one_form(self) -> "PolymatroidFile":
        if (self.rank is None) == (self.base_points is None):
            raise ValueError("Exactly one of 'rank' or 'base_points' must be given")
        if self.cage is not None and len(self.cage) != self.p:
            raise ValueError(f"cage must have {self.p} entries")
        if self.base_points is not None and any(len(n) != self.p for n in self.base_points):
            raise ValueError(f"every base point must have {self.p} coordinates")
        return self

    def to_polymatroid(self) -> Polymatroid:
        """Validate into a Polymatroid (AxiomViolation, NotMConvex, ... on failure)"""
        if self.rank is not None:
            table = {parse_subset_key(key): value for key, value in self.rank.items()}
            return validate(self.p, table, self.cage)
        points = PointSet.of(self.p, self.base_points or [])
        return rank_from_points(points, self.cage)

    @classmethod
    def from_polymatroid(cls, P: Polymatroid, as_points: bool = False) -> "PolymatroidFile":
        if as_points:
            return cls(p=P.p, cage=list(P.cage), base_points=[list(n) for n in base_points(P)])
        rank = {subset_key(mask): P.ranks[mask] for mask in nonempty_masks(P.p)}
        return cls(p=P.p, cage=list(P.cage), rank=rank)


# ===== Output =====

class TermOutput(StrictModel):
    exp: List[int]
    coeff: str


class PolynomialOutput(StrictModel):
    vars: List[str]
    terms: List[TermOutput]

    @classmethod
    def from_poly(cls, f: SparsePoly, var_names: Optional[List[str]] = None) -> "PolynomialOutput":
        names = var_names or [f"t{i + 1}" for i in range(f.nvars)]
        return cls(
            vars=list(names),
            terms=[TermOutput(exp=list(exp), coeff=str(c)) for exp, c in f.items()],
        )

    def to_poly(self) -> SparsePoly:
        return SparsePoly(len(self.vars), {tuple(t.exp): Fraction(t.coeff) for t in self.terms})


class PointSetOutput(StrictModel):
    p: int
    points: List[List[int]]

    @classmethod
    def from_point_set(cls, S: PointSet) -> "PointSetOutput":
        return cls(p=S.p, points=[list(n) for n in S])

    def to_point_set(self) -> PointSet:
        return PointSet.of(self.p, self.points)


class MobiusEntry(StrictModel):
    point: List[int]
    value: int


class MobiusOutput(StrictModel):
    p: int
    entries: List[MobiusEntry]

    @classmethod
    def from_table(cls, table: MobiusTable) -> "MobiusOutput":
        return cls(
            p=table.p, entries=[MobiusEntry(point=list(n), value=v) for n, v in table.items()]
        )

    def to_table(self) -> MobiusTable:
        return MobiusTable(self.p, {tuple(e.point): e.value for e in self.entries})


class BettiEntry(StrictModel):
    i: int
    degree: List[int]
    value: int


class BettiOutput(StrictModel):
    nvars: int
    entries: List[BettiEntry]

    @classmethod
    def from_table(cls, table: BettiTable) -> "BettiOutput":
        return cls(
            nvars=table.nvars,
            entries=[BettiEntry(i=i, degree=list(b), value=v) for (i, b), v in table.items()],
        )

    def to_table(self) -> BettiTable:
        return BettiTable(self.nvars, {(e.i, tuple(e.degree)): e.value for e in self.entries})


class IdealOutput(StrictModel):
    nvars: int
    gens: List[List[int]]

    @classmethod
    def from_ideal(cls, ideal: MonomialIdeal) -> "IdealOutput":
        return cls(nvars=ideal.nvars, gens=[list(g) for g in ideal.gens])

    def to_ideal(self) -> MonomialIdeal:
        return MonomialIdeal.of(self.nvars, self.gens)


class VerdictOutput(StrictModel):
    check: str
    ok: bool
    condition: Optional[str] = None
    witness: Any = None


class SplitOutput(StrictModel):
    subset: List[int]
    threshold: int
    s1: PointSetOutput
    s2: PointSetOutput
    s12: PointSetOutput
    checks: List[VerdictOutput] = Field(default_factory=list)


class OutcomeOutput(StrictModel):
    fixture: str
    check: str
    ok: bool
    detail: Any = None


class ErrorOutput(StrictModel):
    code: str
    message: str
    witness: Any = None


class OutcomeList(StrictModel):
    outcomes: List[OutcomeOutput]
    failures: int


class NameList(StrictModel):
    names: List[str]


class ExportedFixture(StrictModel):
    fixture: str
    p: Optional[int] = None
    rank: Optional[int] = None
    cage: Optional[str] = None
    base_points: Optional[int] = None
    in_corpus: Optional[bool] = None


class ExportedFixtureList(StrictModel):
    fixtures: List[ExportedFixture]

    @classmethod
    def from_frame(cls, frame: pd.DataFrame) -> "ExportedFixtureList":
        # to_json turns numpy scalars into plain values and NaN into null
        rows = json.loads(frame.to_json(orient="records"))
        return cls(fixtures=[ExportedFixture.model_validate(row) for row in rows])
