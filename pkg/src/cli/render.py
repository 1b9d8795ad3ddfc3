"""
Rendering of command results in json, pretty and csv form.

Every command builds a Rendered value: the pydantic model for json mode,
the human-readable text for pretty mode, and a DataFrame when the result
is tabular. CSV mode is only available for Betti and Möbius tables and the export index.
"""

from typing import List, NamedTuple, Optional, Sequence

import pandas as pd
from pydantic import BaseModel

from src.invariants import MobiusTable
from src.polycore import PointSet, Polymatroid
from src.polyalg import SparsePoly
from src.syzygy import BettiTable, MonomialIdeal
from src.utils.errors import MalformedInput, PolymatroidError
from src.utils.lattice_utils import nonempty_masks, subset_key
from .formats import (
    BettiOutput,
    ErrorOutput,
    ExportedFixtureList,
    IdealOutput,
    MobiusOutput,
    NameList,
    OutcomeList,
    OutcomeOutput,
    PointSetOutput,
    PolymatroidFile,
    PolynomialOutput,
    SplitOutput,
    VerdictOutput,
)

FORMATS = ("json", "pretty", "csv")


class Rendered(NamedTuple):
    model: BaseModel
    text: str
    frame: Optional[pd.DataFrame] = None
    exclude_none: bool = False


def format_output(result: Rendered, fmt: str) -> str:
    """The exact text written to stdout, newline-terminated"""
    if fmt == "json":
        text = result.model.model_dump_json(indent=2, exclude_none=result.exclude_none)
    elif fmt == "pretty":
        text = result.text
    elif fmt == "csv":
        if result.frame is None:
            raise MalformedInput(
                "csv output is only available for betti, mobius and fixtures exported",
                witness=fmt,
            )
        return result.frame.to_csv(index=False, lineterminator="\n")
    else:
        raise MalformedInput(f"Unknown output format '{fmt}'", witness=list(FORMATS))
    return text if text.endswith("\n") else text + "\n"


def _point(n: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in n) + ")"


def polynomial(f: SparsePoly, var_names: Optional[List[str]] = None) -> Rendered:
    return Rendered(PolynomialOutput.from_poly(f, var_names), f.pretty(var_names))


def points(S: PointSet) -> Rendered:
    return Rendered(PointSetOutput.from_point_set(S), "\n".join(_point(n) for n in S))


def polymatroid(P: Polymatroid, as_points: bool = False) -> Rendered:
    lines = [f"p = {P.p}", f"cage = {_point(P.cage)}"]
    lines += [f"rk{{{subset_key(mask)}}} = {P.ranks[mask]}" for mask in nonempty_masks(P.p)]
    model = PolymatroidFile.from_polymatroid(P, as_points=as_points)
    return Rendered(model, "\n".join(lines), exclude_none=True)


def mobius_table(table: MobiusTable) -> Rendered:
    rows = table.items()
    frame = pd.DataFrame(
        [list(n) + [v] for n, v in rows],
        columns=[f"n{i + 1}" for i in range(table.p)] + ["value"],
    )
    text = "\n".join(f"mu{_point(n)} = {v}" for n, v in rows)
    return Rendered(MobiusOutput.from_table(table), text, frame)


def betti(table: BettiTable) -> Rendered:
    rows = table.items()
    frame = pd.DataFrame(
        [[i] + list(b) + [v] for (i, b), v in rows],
        columns=["i"] + [f"b{k + 1}" for k in range(table.nvars)] + ["value"],
    )
    text = "\n".join(f"beta_{i},{_point(b)} = {v}" for (i, b), v in rows)
    return Rendered(BettiOutput.from_table(table), text, frame)


def ideal(I: MonomialIdeal) -> Rendered:
    return Rendered(IdealOutput.from_ideal(I), I.to_text())


def verdict(model: VerdictOutput) -> Rendered:
    status = "ok" if model.ok else f"fails at {model.condition}"
    text = f"{model.check}: {status}"
    if model.witness is not None:
        text += f"\nwitness: {model.witness}"
    return Rendered(model, text)


def split(model: SplitOutput) -> Rendered:
    lines = [f"split at x({','.join(map(str, model.subset))}) = {model.threshold}"]
    for label, piece in (("S1", model.s1), ("S2", model.s2), ("S12", model.s12)):
        members = " ".join(_point(n) for n in piece.points)
        lines.append(f"{label} ({len(piece.points)}): {members}")
    lines += [verdict(check).text for check in model.checks]
    return Rendered(model, "\n".join(lines))


def outcomes(records: List[OutcomeOutput]) -> Rendered:
    failures = [r for r in records if not r.ok]
    lines = [f"{len(records)} checks, {len(failures)} failed"]
    lines += [f"FAIL {r.fixture}: {r.check} {r.detail}" for r in failures]
    return Rendered(OutcomeList(outcomes=records, failures=len(failures)), "\n".join(lines))


def names(values: List[str]) -> Rendered:
    return Rendered(NameList(names=values), "\n".join(values))


def error(e: PolymatroidError) -> Rendered:
    model = ErrorOutput(code=e.code, message=e.message, witness=e.witness)
    text = f"error [{e.code}]: {e.message}"
    if e.witness is not None:
        text += f"\nwitness: {e.witness}"
    return Rendered(model, text)


def exported(frame: pd.DataFrame) -> Rendered:
    text = frame.to_string(index=False) if not frame.empty else "no exported fixtures"
    return Rendered(ExportedFixtureList.from_frame(frame), text, frame)
