"""
Tests for the command-line interface: commands, output formats and exit codes.
"""

import importlib
import io
import json

import pandas as pd
import pytest

from src.cli import main
from src.cli.fixtures import load_fixture
from src.cli.formats import (
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
from src.invariants import cave, mobius
from src.polycore import base_points
from src.storage import LocalStorage
from src.syzygy import betti_table, polymatroidal_ideal
from tests.conftest import EXAMPLE_KPOLY

# src.cli re-exports main(), which shadows the submodule attribute
cli_main = importlib.import_module("src.cli.main")
fixtures_module = importlib.import_module("src.cli.fixtures")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_file(tmp_path, document):
    path = tmp_path / "input.json"
    path.write_text(json.dumps(document))
    return str(path)


# ===== Commands =====

def test_kpoly_both_routes_json(capsys):
    code, out, _ = run(capsys, "kpoly", "paper-example", "--via", "both", "--format", "json")
    assert code == 0
    parsed = PolynomialOutput.model_validate_json(out)
    assert parsed.vars == ["t1", "t2", "t3"]
    assert {tuple(t.exp): int(t.coeff) for t in parsed.terms} == EXAMPLE_KPOLY


def test_kpoly_via_cave_skips_the_resolution(capsys, mocker):
    betti_route = mocker.spy(cli_main, "k_polynomial_from_betti")
    cave_route = mocker.spy(cli_main, "k_polynomial_from_cave")
    code, _, _ = run(capsys, "kpoly", "paper-example", "--via", "cave")
    assert code == 0
    assert cave_route.call_count == 1
    assert betti_route.call_count == 0


def test_cave_of_rank_zero_fixture(capsys):
    code, out, _ = run(capsys, "cave", "fixtures/rank-zero")
    assert code == 0
    assert out == "1\n"


def test_snapper_with_rational_coefficients(capsys):
    code, out, _ = run(capsys, "snapper", "paper-example-dual", "--format", "json")
    assert code == 0
    f = PolynomialOutput.model_validate_json(out).to_poly()
    assert not f.has_nonnegative_integer_coefficients()
    assert f.evaluate((0, 0, 0)) == 1
    assert f.evaluate((1, 1, 1)) == 18

    code, out, _ = run(capsys, "snapper", "paper-example")
    assert code == 0
    assert out.strip()


def test_hs_both_routes(capsys):
    code, out, _ = run(capsys, "hs", "paper-example", "--index", "1", "--via", "both",
                       "--format", "json")
    assert code == 0
    assert len(IdealOutput.model_validate_json(out).gens) == 6


def test_hs_pretty_is_one_generator_per_line(capsys):
    code, out, _ = run(capsys, "hs", "paper-example", "--index", "2")
    assert code == 0
    assert out.splitlines() == ["x1*x2^2*x3^4", "x1^2*x2*x3^4", "x1^2*x2^2*x3^3"]


def test_betti_json_matches_library(capsys):
    code, out, _ = run(capsys, "betti", "paper-example", "--format", "json")
    assert code == 0
    table = BettiOutput.model_validate_json(out).to_table()
    assert table == betti_table(polymatroidal_ideal(load_fixture("paper-example")))


def test_betti_csv(capsys):
    code, out, _ = run(capsys, "betti", "paper-example", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "i,b1,b2,b3,value"
    table = betti_table(polymatroidal_ideal(load_fixture("paper-example")))
    assert len(lines) == 1 + len(table)
    assert sum(int(line.rsplit(",", 1)[1]) for line in lines[1:]) == 21


def test_mobius_json_matches_library(capsys):
    code, out, _ = run(capsys, "mobius", "u12", "--format", "json")
    assert code == 0
    parsed = MobiusOutput.model_validate_json(out).to_table()
    assert parsed.items() == mobius(load_fixture("u12")).items()


def test_validate_and_recage(capsys):
    code, out, _ = run(capsys, "validate", "paper-example", "--cage", "3,3,5", "--format", "json")
    assert code == 0
    parsed = PolymatroidFile.model_validate_json(out)
    assert parsed.cage == [3, 3, 5]
    assert parsed.rank["1,3"] == 5


def test_validate_pretty(capsys):
    code, out, _ = run(capsys, "validate", "paper-example")
    assert code == 0
    lines = out.splitlines()
    assert lines[:2] == ["p = 3", "cage = (2,2,4)"]
    assert "rk{1,3} = 5" in lines


def test_base_points_pretty(capsys):
    code, out, _ = run(capsys, "base-points", "u12")
    assert code == 0
    assert out.splitlines() == ["(0,1)", "(1,0)"]


def test_lorentzian_verdict(capsys):
    code, out, _ = run(capsys, "lorentzian", "paper-example", "--target", "kpoly")
    assert code == 0
    assert out == "lorentzian:kpoly: ok\n"


def test_split_with_valuative_checks(capsys):
    code, out, _ = run(capsys, "split", "paper-example-dual", "--subset", "3", "--threshold", "1",
                       "--check-valuative")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "split at x(3) = 1"
    assert lines[3] == "S12 (3): (0,2,1) (1,1,1) (2,0,1)"
    assert "relation: ok" in lines
    assert "valuative-cave: ok" in lines


# ===== Fixtures =====

def test_fixtures_list(capsys):
    code, out, _ = run(capsys, "fixtures", "list")
    assert code == 0
    names = out.splitlines()
    assert "paper-example" in names
    assert "U(2;1,1,1)" in names


def test_fixtures_emit_round_trips(capsys):
    code, out, _ = run(capsys, "fixtures", "emit", "U(2;1,1,1)", "--format", "json")
    assert code == 0
    document = json.loads(out)
    assert "base_points" not in document
    assert PolymatroidFile.model_validate(document).to_polymatroid() == load_fixture("U(2;1,1,1)")


def test_fixtures_emit_needs_a_name(capsys):
    code, _, err = run(capsys, "fixtures", "emit")
    assert code == 1
    assert "InvalidParameter" in err


# ===== Input sources =====

def test_reads_a_file(capsys, tmp_path):
    path = write_file(tmp_path, {"p": 2, "rank": {"1": 1, "2": 1, "1,2": 1}})
    code, out, _ = run(capsys, "base-points", path)
    assert code == 0
    assert out.splitlines() == ["(0,1)", "(1,0)"]


def test_reads_base_points_file(capsys, tmp_path):
    path = write_file(tmp_path, {"p": 2, "base_points": [[1, 0], [0, 1]]})
    code, out, _ = run(capsys, "cave", path)
    assert code == 0
    assert out == "t1 + t2 - 1\n"


def test_reads_stdin(capsys, monkeypatch):
    document = {"p": 2, "cage": [1, 1], "rank": {"1": 1, "2": 1, "1,2": 1}}
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(document)))
    code, out, _ = run(capsys, "ideal", "-")
    assert code == 0
    assert out.splitlines() == ["x2", "x1"]


# ===== Errors and exit codes =====

def test_incomplete_rank_table_exits_2(capsys, tmp_path):
    path = write_file(tmp_path, {"p": 2, "rank": {"1": 1}})
    code, _, err = run(capsys, "validate", path)
    assert code == 2
    assert "MissingSubset" in err


def test_axiom_violation_json_error_on_stdout(capsys, tmp_path):
    path = write_file(tmp_path, {"p": 2, "rank": {"1": 1, "2": 1, "1,2": 3}})
    code, out, _ = run(capsys, "validate", path, "--format", "json")
    assert code == 1
    error = json.loads(out)
    assert error["code"] == "AxiomViolation"
    assert error["witness"] == {"J1": [1], "J2": [2]}


def test_bad_json_exits_2(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    code, _, err = run(capsys, "validate", str(path))
    assert code == 2
    assert "MalformedInput" in err


def test_schema_violation_exits_2(capsys, tmp_path):
    path = write_file(tmp_path, {"p": 2, "rank": {"1": 1, "2": 1, "1,2": 1}, "extra": True})
    code, _, _ = run(capsys, "validate", path)
    assert code == 2


def test_unknown_fixture_exits_2(capsys):
    code, _, err = run(capsys, "validate", "no-such-fixture")
    assert code == 2
    assert "UnknownFixture" in err


def test_csv_is_only_for_tables(capsys):
    code, out, err = run(capsys, "cave", "u12", "--format", "csv")
    assert code == 2
    assert out == ""
    assert "MalformedInput" in err


def test_cage_below_singleton_ranks_exits_1(capsys):
    code, _, err = run(capsys, "validate", "paper-example", "--cage", "1,2,4")
    assert code == 1
    assert "CageTooSmall" in err


def test_malformed_cage_vector_exits_2(capsys):
    code, _, err = run(capsys, "validate", "paper-example", "--cage", "2,x,4")
    assert code == 2
    assert "MalformedInput" in err


def test_bad_parallel_is_rejected_by_the_parser():
    with pytest.raises(SystemExit):
        main(["betti", "u12", "--parallel", "0"])


# ===== Stored fixtures =====

U12_DOCUMENT = {"p": 2, "cage": [1, 1], "rank": {"1": 1, "2": 1, "1,2": 1}}
U12_INDEX_ROW = {
    "fixture": "u12", "p": 2, "rank": 1, "cage": "1,1", "base_points": 2, "in_corpus": True,
}


@pytest.fixture
def storage(tmp_path, monkeypatch):
    stored = LocalStorage(tmp_path / "fixtures")
    monkeypatch.setattr(fixtures_module, "local_storage", stored)
    return stored


def test_stored_fixture_resolves_by_name(capsys, storage):
    storage.save_json("my-u12", U12_DOCUMENT)
    code, out, _ = run(capsys, "ideal", "my-u12")
    assert code == 0
    assert out.splitlines() == ["x2", "x1"]


def test_malformed_stored_fixture_exits_2(capsys, storage):
    storage.save_json("broken", {"p": 2})
    code, _, err = run(capsys, "validate", "broken")
    assert code == 2
    assert "MalformedInput" in err


def test_fixtures_exported_reads_the_index(capsys, storage):
    storage.save_json("u12", U12_DOCUMENT)
    storage.save_json("extra", U12_DOCUMENT)
    gone = dict(U12_INDEX_ROW, fixture="gone")
    storage.save_dataframe("index", pd.DataFrame([U12_INDEX_ROW, gone]))

    code, out, _ = run(capsys, "fixtures", "exported", "--format", "json")
    assert code == 0
    rows = ExportedFixtureList.model_validate_json(out).fixtures
    assert [row.fixture for row in rows] == ["u12", "extra"]
    assert (rows[0].cage, rows[0].base_points, rows[0].in_corpus) == ("1,1", 2, True)
    assert rows[1].p is None


def test_fixtures_exported_csv(capsys, storage):
    storage.save_json("u12", U12_DOCUMENT)
    storage.save_dataframe("index", pd.DataFrame([U12_INDEX_ROW]))
    code, out, _ = run(capsys, "fixtures", "exported", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "fixture,p,rank,cage,base_points,in_corpus"
    assert lines[1] == 'u12,2,1,"1,1",2,True'


def test_fixtures_exported_without_exports(capsys, storage):
    code, out, _ = run(capsys, "fixtures", "exported")
    assert code == 0
    assert out == "no exported fixtures\n"


# ===== Output schemas =====

def output_models():
    example = load_fixture("paper-example")
    u12 = load_fixture("u12")
    verdict = VerdictOutput(check="relation", ok=False, condition="mismatch", witness=[1, 2])
    points = PointSetOutput.from_point_set(base_points(example))
    return [
        PolymatroidFile.from_polymatroid(example),
        PolymatroidFile.from_polymatroid(example, as_points=True),
        PolynomialOutput.from_poly(cave(example)),
        points,
        MobiusOutput.from_table(mobius(example)),
        BettiOutput.from_table(betti_table(polymatroidal_ideal(u12))),
        IdealOutput.from_ideal(polymatroidal_ideal(example)),
        verdict,
        SplitOutput(subset=[3], threshold=1, s1=points, s2=points, s12=points, checks=[verdict]),
        OutcomeOutput(fixture="u12", check="kpoly", ok=True, detail={"cage": [1, 1]}),
        ErrorOutput(code="NotMConvex", message="not M-convex", witness=[[0, 1]]),
        OutcomeList(outcomes=[OutcomeOutput(fixture="u12", check="euler", ok=True)], failures=0),
        NameList(names=["u12", "U(2;1,1,1)"]),
        ExportedFixtureList.from_frame(pd.DataFrame([U12_INDEX_ROW])),
    ]


@pytest.mark.parametrize("model", output_models(), ids=lambda model: type(model).__name__)
def test_output_models_survive_json(model):
    parsed = type(model).model_validate_json(model.model_dump_json())
    assert parsed == model


def test_output_models_convert_back_to_values():
    example = load_fixture("paper-example")
    f = cave(example)
    assert PolynomialOutput.from_poly(f).to_poly() == f
    points = base_points(example)
    assert PointSetOutput.from_point_set(points).to_point_set() == points
    table = mobius(example)
    assert MobiusOutput.from_table(table).to_table().items() == table.items()
    ideal = polymatroidal_ideal(example)
    assert IdealOutput.from_ideal(ideal).to_ideal().gens == ideal.gens
    assert PolymatroidFile.from_polymatroid(example).to_polymatroid() == example
