"""
Command-line interface for the polymatroid toolkit.

Usage:
    python -m src.cli <command> FILE [options]

FILE is a polymatroid json file, '-' for standard input, or a built-in
fixture name. Exit codes: 0 success, 1 domain error, 2 malformed input,
3 cross-check mismatch.
"""

import argparse
import sys
from typing import Callable, List, NamedTuple, Optional

from loguru import logger

from config.config import Config
from src.invariants import cave, cave_permuted, generalized_polymatroid_check, mobius, snapper
from src.lorentzian import TARGETS, lorentzian_target
from src.polycore import Polymatroid, base_points, dual, independence_points
from src.polyalg import SparsePoly
from src.syzygy import (
    betti_table,
    hs_from_betti,
    hs_ideal,
    k_polynomial_from_betti,
    k_polynomial_from_cave,
    polymatroidal_ideal,
)
from src.utils.errors import CrossCheckMismatch, InvalidParameter, PolymatroidError
from src.utils.lattice_utils import parse_vector
from src.valuative import (
    check_relation,
    hilbert_valuative_check,
    hyperplane_split,
    mobius_valuative_check,
    split_relation,
    valuative_check,
)
from . import render
from .checks import run_corpus
from .fixtures import exported_fixtures, fixture_names, load_fixture, resolve
from .formats import PointSetOutput, SplitOutput, VerdictOutput

LOG_FORMAT = "<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | <level>{message}</level>"


class CommandResult(NamedTuple):
    rendered: render.Rendered
    ok: bool = True


def configure_logging(verbose: bool = False) -> None:
    """stderr sink at the configured level, plus a rotating file sink when requested"""
    logger.remove()
    level = "DEBUG" if verbose else Config.LOG_LEVEL
    logger.add(sys.stderr, level=level, format=LOG_FORMAT)
    log_file = Config.get_log_file()
    if log_file is not None:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        logger.add(str(log_file), rotation="10 MB", level="DEBUG")


def _load(args: argparse.Namespace) -> Polymatroid:
    P = resolve(args.file)
    if args.cage is not None:
        P = P.with_cage(parse_vector(args.cage))
    logger.debug(f"Loaded polymatroid on {P.p} elements with cage {P.cage}")
    return P


def _differing_terms(f: SparsePoly, g: SparsePoly) -> List[List[int]]:
    a, b = dict(f.items()), dict(g.items())
    return [list(exp) for exp in sorted(set(a) | set(b)) if a.get(exp) != b.get(exp)]


# ===== Commands =====

def cmd_validate(args: argparse.Namespace) -> CommandResult:
    return CommandResult(render.polymatroid(_load(args)))


def cmd_base_points(args: argparse.Namespace) -> CommandResult:
    return CommandResult(render.points(base_points(_load(args))))


def cmd_indep_points(args: argparse.Namespace) -> CommandResult:
    return CommandResult(render.points(independence_points(_load(args))))


def cmd_mobius(args: argparse.Namespace) -> CommandResult:
    return CommandResult(render.mobius_table(mobius(_load(args))))


def cmd_cave(args: argparse.Namespace) -> CommandResult:
    P = _load(args)
    f = cave(P) if args.permute is None else cave_permuted(P, parse_vector(args.permute))
    return CommandResult(render.polynomial(f))


def cmd_snapper(args: argparse.Namespace) -> CommandResult:
    return CommandResult(render.polynomial(snapper(_load(args))))


def cmd_ideal(args: argparse.Namespace) -> CommandResult:
    return CommandResult(render.ideal(polymatroidal_ideal(_load(args))))


def cmd_kpoly(args: argparse.Namespace) -> CommandResult:
    P = _load(args)
    from_cave = from_betti = None
    if args.via in ("cave", "both"):
        from_cave = k_polynomial_from_cave(P)
    if args.via in ("betti", "both"):
        table = betti_table(polymatroidal_ideal(P), parallel=args.parallel)
        from_betti = k_polynomial_from_betti(table)
    if from_cave is not None and from_betti is not None and from_cave != from_betti:
        raise CrossCheckMismatch(
            "K-polynomial from the cave polynomial differs from the Betti route",
            witness={"differing": _differing_terms(from_cave, from_betti)},
        )
    return CommandResult(render.polynomial(from_cave if from_cave is not None else from_betti))


def cmd_betti(args: argparse.Namespace) -> CommandResult:
    table = betti_table(polymatroidal_ideal(_load(args)), parallel=args.parallel)
    return CommandResult(render.betti(table))


def cmd_hs(args: argparse.Namespace) -> CommandResult:
    P = _load(args)
    via_mobius = via_betti = None
    if args.via in ("mobius", "both"):
        via_mobius = hs_ideal(P, i=args.index)
    if args.via in ("betti", "both"):
        table = betti_table(polymatroidal_ideal(P), parallel=args.parallel)
        via_betti = hs_from_betti(table, args.index)
    if via_mobius is not None and via_betti is not None and via_mobius != via_betti:
        raise CrossCheckMismatch(
            f"HS_{args.index} from the dual Möbius function differs from the Betti route",
            witness={
                "mobius": [list(g) for g in via_mobius.gens],
                "betti": [list(g) for g in via_betti.gens],
            },
        )
    return CommandResult(render.ideal(via_mobius if via_mobius is not None else via_betti))


def cmd_dual(args: argparse.Namespace) -> CommandResult:
    return CommandResult(render.polymatroid(dual(_load(args))))


def cmd_check_gpm(args: argparse.Namespace) -> CommandResult:
    ok = generalized_polymatroid_check(cave(_load(args)))
    model = VerdictOutput(check="gpm", ok=ok, condition=None if ok else "mconvex-support")
    return CommandResult(render.verdict(model), ok)


def cmd_lorentzian(args: argparse.Namespace) -> CommandResult:
    verdict = lorentzian_target(_load(args), target=args.target, parallel=args.parallel)
    model = VerdictOutput(
        check=f"lorentzian:{args.target}",
        ok=verdict.ok,
        condition=verdict.condition,
        witness=verdict.witness,
    )
    return CommandResult(render.verdict(model), verdict.ok)


def cmd_split(args: argparse.Namespace) -> CommandResult:
    S = base_points(_load(args))
    subset = parse_vector(args.subset)
    pieces = hyperplane_split(S, subset, args.threshold)

    checks = []
    if args.check_valuative:
        relation = split_relation(S, pieces)
        relation_check = check_relation(relation)
        checks.append(VerdictOutput(
            check="relation",
            ok=relation_check.ok,
            condition=relation_check.level,
            witness=relation_check.witness,
        ))
        if relation_check:
            for verdict_of in (valuative_check, mobius_valuative_check, hilbert_valuative_check):
                verdict = verdict_of(relation)
                checks.append(VerdictOutput(
                    check=f"valuative-{verdict.invariant}",
                    ok=verdict.ok,
                    condition=None if verdict.ok else "nonzero-residual",
                ))

    model = SplitOutput(
        subset=sorted(set(subset)),
        threshold=args.threshold,
        s1=PointSetOutput.from_point_set(pieces.s1),
        s2=PointSetOutput.from_point_set(pieces.s2),
        s12=PointSetOutput.from_point_set(pieces.s12),
        checks=checks,
    )
    return CommandResult(render.split(model), all(check.ok for check in checks))


def cmd_fixtures(args: argparse.Namespace) -> CommandResult:
    if args.action == "list":
        return CommandResult(render.names(fixture_names()))
    if args.action == "exported":
        return CommandResult(render.exported(exported_fixtures()))
    if not args.name:
        raise InvalidParameter("fixtures emit needs a fixture NAME")
    return CommandResult(render.polymatroid(load_fixture(args.name)))


def cmd_check_corpus(args: argparse.Namespace) -> CommandResult:
    if args.cages < 1:
        raise InvalidParameter(f"--cages must be at least 1, got {args.cages}", witness=args.cages)
    records = run_corpus(cages=args.cages, parallel=args.parallel, seed=args.seed)
    return CommandResult(render.outcomes(records), all(record.ok for record in records))


# ===== Parser =====

def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=render.FORMATS, default="pretty",
                        help="Output format (csv only for betti, mobius and fixtures exported)")
    common.add_argument("--cage", default=None, help="Cage m1,...,mp replacing the file's cage")
    common.add_argument("--parallel", type=_positive_int, default=Config.DEFAULT_PARALLEL,
                        help="Worker processes for Betti and Hessian sweeps")
    common.add_argument("--seed", type=int, default=Config.DEFAULT_SEED,
                        help="Seed for randomized split selection")
    common.add_argument("--verbose", action="store_true", help="Log at DEBUG level")

    parser = argparse.ArgumentParser(
        prog="polymatroid",
        description="Exact computations with polymatroids, their ideals and invariants",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler: Callable, help_text: str, with_file: bool = True):
        sub = commands.add_parser(name, parents=[common], help=help_text)
        if with_file:
            sub.add_argument("file", help="Polymatroid file, '-' for stdin, or a fixture name")
        sub.set_defaults(handler=handler)
        return sub

    command("validate", cmd_validate, "Validate a rank table and print it")
    command("base-points", cmd_base_points, "Lattice points of the base polytope")
    command("indep-points", cmd_indep_points, "Lattice points of the independence polytope")
    command("mobius", cmd_mobius, "Möbius function on the independence points")
    cave_parser = command("cave", cmd_cave, "Cave polynomial")
    cave_parser.add_argument("--permute", default=None, help="Permutation pi(1),...,pi(p)")
    command("snapper", cmd_snapper, "Snapper polynomial")
    command("ideal", cmd_ideal, "Minimal generators of the polymatroidal ideal")
    kpoly_parser = command("kpoly", cmd_kpoly, "K-polynomial of the polymatroidal ideal")
    kpoly_parser.add_argument("--via", choices=("cave", "betti", "both"), default="cave")
    command("betti", cmd_betti, "Multigraded Betti numbers")
    hs_parser = command("hs", cmd_hs, "Homological shift ideal HS_i")
    hs_parser.add_argument("--index", type=int, required=True)
    hs_parser.add_argument("--via", choices=("mobius", "betti", "both"), default="mobius")
    command("dual", cmd_dual, "Dual polymatroid with respect to the cage")
    command("check-gpm", cmd_check_gpm, "Generalized-polymatroid check of the cave support")
    lorentzian_parser = command("lorentzian", cmd_lorentzian, "Denormalized Lorentzian check")
    lorentzian_parser.add_argument("--target", choices=TARGETS, default="kpoly")
    split_parser = command("split", cmd_split, "Hyperplane split of the base points")
    split_parser.add_argument("--subset", required=True, help="Subset J, e.g. 1,3")
    split_parser.add_argument("--threshold", type=int, required=True)
    split_parser.add_argument("--check-valuative", action="store_true")
    fixtures_parser = command("fixtures", cmd_fixtures, "Built-in fixtures", with_file=False)
    fixtures_parser.add_argument("action", choices=("list", "emit", "exported"))
    fixtures_parser.add_argument("name", nargs="?", default=None)
    corpus_parser = command("check-corpus", cmd_check_corpus, "Property checks over the corpus",
                            with_file=False)
    corpus_parser.add_argument("--cages", type=int, default=2,
                               help="Legal cages per fixture for the K-polynomial check")
    return parser


def _report_error(e: PolymatroidError, fmt: str) -> int:
    if fmt == "json":
        sys.stdout.write(render.format_output(render.error(e), "json"))
    else:
        sys.stderr.write(render.format_output(render.error(e), "pretty"))
    logger.opt(exception=e).debug(f"{e.code} (exit {e.exit_code})")
    return e.exit_code


def main(argv: Optional[List[str]] = None) -> int:
    """Run one command; returns the process exit code"""
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)

    try:
        Config.validate()
        result = args.handler(args)
        output = render.format_output(result.rendered, args.format)
    except PolymatroidError as e:
        return _report_error(e, args.format)
    except ValueError as e:
        return _report_error(InvalidParameter(str(e)), args.format)

    sys.stdout.write(output)
    if not result.ok:
        logger.warning(f"{args.command} found a failing check")
        return CrossCheckMismatch.exit_code
    return 0

