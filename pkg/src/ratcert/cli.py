"""Command-line front end.

Every subcommand reads JSON instance files, writes a single JSON object to
standard output (newline-terminated), and keeps diagnostics on standard
error.  Exit codes: 0 for the row-functional side of a dichotomy, an
accepted certificate, or an optimal program; 1 for the other side of a
dichotomy or a rejected certificate; 2 for usage and parse errors; 3 for
violated preconditions, including the enumeration column cap.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import alternatives as alt
from . import finance, games, lp
from .cone import COLUMN_LIMIT
from .errors import ColumnLimitError, PreconditionError
from .ratlin import cols, format_rat
from .serialize import (
    FormatError,
    Instance,
    certificate_file,
    decode_vec,
    encode_certificate,
    encode_vec,
    instance_digest,
    load_certificate,
    load_instance,
)


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")


def _fail(message: str) -> None:
    sys.stderr.write(f"error: {message}\n")


def _check_limit(instance: Instance) -> None:
    if cols(instance.A) > COLUMN_LIMIT:
        raise ColumnLimitError(
            f"instance has {cols(instance.A)} columns; the enumeration core"
            f" is capped at {COLUMN_LIMIT}"
        )


def _write_certificate(path: str | None, instance: Instance, certificate) -> None:
    if path is None:
        return
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(
            json.dumps(certificate_file(instance, certificate), separators=(",", ":")) + "\n"
        )


def _run_decider(args, kind: str, decide) -> int:
    instance = load_instance(args.instance, kind)
    _check_limit(instance)
    if kind in ("far", "fred"):
        certificate = decide(instance.A, instance.b)
    else:
        certificate = decide(instance.A)
    _emit(encode_certificate(certificate))
    _write_certificate(getattr(args, "cert_out", None), instance, certificate)
    first = isinstance(
        certificate, (alt.Separation, alt.Orthogonal, alt.SemiPositiveRow, alt.NonNegRow)
    )
    return 0 if first else 1


def _cmd_far(args) -> int:
    return _run_decider(args, "far", alt.farkas)


def _cmd_fred(args) -> int:
    return _run_decider(args, "fred", alt.fredholm)


def _cmd_stiemke(args) -> int:
    return _run_decider(args, "stiemke", alt.stiemke)


def _cmd_alt(args) -> int:
    return _run_decider(args, "alt", alt.alternatives_lemma)


def _cmd_lp_solve(args) -> int:
    instance = load_instance(args.instance, "lp")
    _check_limit(instance)
    outcome = lp.solve_lp(lp.LPProblem(A=instance.A, b=instance.b, c=instance.c))
    if isinstance(outcome, lp.Optimal):
        _emit(
            {
                "variant": "optimal",
                "x": encode_vec(outcome.x),
                "u": encode_vec(outcome.u),
                "value": format_rat(outcome.value),
            }
        )
        return 0
    if isinstance(outcome, lp.PrimalInfeasible):
        _emit({"variant": "infeasible", "xi": encode_vec(outcome.functional)})
        return 1
    _emit({"variant": "unbounded", "ray": encode_vec(outcome.ray)})
    return 1


def _cmd_lp_recover(args) -> int:
    instance = load_instance(args.instance, "lp")
    _check_limit(instance)
    with open(args.dual, "r", encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{args.dual}: malformed JSON ({exc})") from exc
    if not isinstance(data, dict) or "u" not in data:
        raise FormatError("the dual file must be a JSON object with a field 'u'")
    u = decode_vec(data["u"])
    problem = lp.LPProblem(A=instance.A, b=instance.b, c=instance.c)
    x = lp.primal_from_dual(problem, u)
    _emit({"x": encode_vec(x), "value": format_rat(sum(
        (ci * xi for ci, xi in zip(instance.c, x)), Fraction(0)
    ))})
    return 0


def _market(instance: Instance) -> finance.MarketModel:
    return finance.MarketModel(A=instance.A)


def _cmd_price(args) -> int:
    instance = load_instance(args.instance, "market")
    _check_limit(instance)
    if instance.claim is None:
        raise FormatError("pricing requires a claim field in the market instance")
    result = finance.superhedge_price(_market(instance), finance.Claim(instance.claim))
    _emit(
        {
            "price": format_rat(result.price),
            "strategy": encode_vec(result.strategy),
            "measure": encode_vec(result.measure),
        }
    )
    return 0


def _cmd_bounds(args) -> int:
    instance = load_instance(args.instance, "market")
    _check_limit(instance)
    if instance.claim is None:
        raise FormatError("pricing requires a claim field in the market instance")
    lower, upper = finance.price_bounds(_market(instance), finance.Claim(instance.claim))
    _emit({"lower": format_rat(lower), "upper": format_rat(upper)})
    return 0


def _cmd_arbitrage(args) -> int:
    instance = load_instance(args.instance, "market")
    _check_limit(instance)
    outcome = finance.detect_arbitrage(_market(instance))
    if isinstance(outcome, finance.Arbitrage):
        _emit({"variant": "arbitrage", "strategy": encode_vec(outcome.strategy)})
        _write_certificate(
            getattr(args, "cert_out", None), instance, alt.SemiPositiveRow(outcome.strategy)
        )
        return 0
    _emit({"variant": "no_arbitrage", "measure": encode_vec(outcome.measure)})
    _write_certificate(
        getattr(args, "cert_out", None), instance, alt.InteriorMeasure(outcome.measure)
    )
    return 1


def _game_solution_json(solution: games.GameSolution) -> dict:
    return {
        "value": format_rat(solution.value),
        "p": encode_vec(solution.row_strategy),
        "q": encode_vec(solution.col_strategy),
    }


def _cmd_game_solve(args) -> int:
    instance = load_instance(args.instance, "game")
    _check_limit(instance)
    _emit(_game_solution_json(games.solve_game(instance.A)))
    return 0


def _cmd_game_gap(args) -> int:
    instance = load_instance(args.instance, "game")
    _check_limit(instance)
    lower, upper = games.minimax_gap(instance.A)
    _emit({"lower": format_rat(lower), "upper": format_rat(upper)})
    return 0


def _cmd_game_unique(args) -> int:
    instance = load_instance(args.instance, "game")
    _check_limit(instance)
    outcome = games.solution_unique(instance.A)
    if isinstance(outcome, games.UniqueSolution):
        _emit({"variant": "unique", "solution": _game_solution_json(outcome.solution)})
        return 0
    _emit(
        {
            "variant": "multiple",
            "first": _game_solution_json(outcome.first),
            "second": _game_solution_json(outcome.second),
        }
    )
    return 1


# Which certificate kind a given instance kind can be checked against.
_VERIFIABLE = {"far": "far", "fred": "fred", "stiemke": "stiemke", "alt": "alt", "market": "stiemke"}


def _cmd_verify(args) -> int:
    instance = load_instance(args.instance)
    kind, certificate, declared_hash = load_certificate(args.certificate)
    expected = _VERIFIABLE.get(instance.kind)
    if expected != kind:
        _emit(
            {
                "verdict": "reject",
                "reason": f"a {kind} certificate does not apply to a {instance.kind} instance",
            }
        )
        return 1
    if declared_hash is not None and declared_hash != instance_digest(instance):
        _emit(
            {
                "verdict": "reject",
                "reason": "certificate instance hash does not match this instance",
            }
        )
        return 1
    verdict = alt.verify_certificate(kind, instance.A, instance.b, certificate)
    if verdict:
        _emit({"verdict": "accept"})
        return 0
    _emit({"verdict": "reject", "reason": verdict.reason})
    return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ratcert",
        description="Exact rational certificates for linear alternatives, "
        "programs, pricing, and games.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    def with_instance(sub, cert_out: bool = False):
        sub.add_argument("instance", help="path to a JSON instance file")
        if cert_out:
            sub.add_argument(
                "-o",
                "--cert-out",
                default=None,
                help="also write a hashed certificate file to this path",
            )

    for name, helptext, handler in (
        ("far", "nonnegative combination vs separating functional", _cmd_far),
        ("fred", "solvable system vs orthogonal functional", _cmd_fred),
        ("stiemke", "semipositive row image vs interior annihilating measure", _cmd_stiemke),
        ("alt", "nonnegative row mixture vs negative column mixture", _cmd_alt),
    ):
        sub = commands.add_parser(name, help=helptext)
        with_instance(sub, cert_out=True)
        sub.set_defaults(handler=handler)

    lp_parser = commands.add_parser("lp", help="standard-form linear programs")
    lp_commands = lp_parser.add_subparsers(dest="lp_command", required=True)
    solve = lp_commands.add_parser("solve", help="solve with exact duality")
    with_instance(solve)
    solve.set_defaults(handler=_cmd_lp_solve)
    recover = lp_commands.add_parser("recover", help="primal point from a dual optimal one")
    recover.add_argument("instance", help="path to a JSON lp instance file")
    recover.add_argument("dual", help="path to a JSON file with a field 'u'")
    recover.set_defaults(handler=_cmd_lp_recover)

    for name, helptext, handler, cert_out in (
        ("price", "superhedging price of a claim", _cmd_price, False),
        ("bounds", "attained arbitrage-consistent price interval", _cmd_bounds, False),
        ("arbitrage", "arbitrage strategy or interior pricing measure", _cmd_arbitrage, True),
    ):
        sub = commands.add_parser(name, help=helptext)
        with_instance(sub, cert_out=cert_out)
        sub.set_defaults(handler=handler)

    game_parser = commands.add_parser("game", help="zero-sum matrix games")
    game_commands = game_parser.add_subparsers(dest="game_command", required=True)
    for name, helptext, handler in (
        ("solve", "value and optimal strategies", _cmd_game_solve),
        ("gap", "both players' guarantee levels", _cmd_game_gap),
        ("unique", "decide uniqueness of the optimal strategies", _cmd_game_unique),
    ):
        sub = game_commands.add_parser(name, help=helptext)
        with_instance(sub)
        sub.set_defaults(handler=handler)

    verify = commands.add_parser("verify", help="recheck a certificate against an instance")
    verify.add_argument("instance", help="path to a JSON instance file")
    verify.add_argument("certificate", help="path to a JSON certificate file")
    verify.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.handler(args)
    except ColumnLimitError as exc:
        _fail(str(exc))
        return 3
    except PreconditionError as exc:
        _fail(str(exc))
        witness = getattr(exc, "improving_direction", None)
        if witness is not None:
            sys.stderr.write(json.dumps({"xi": encode_vec(witness)}) + "\n")
        arbitrage = getattr(exc, "certificate", None)
        if arbitrage is not None:
            sys.stderr.write(
                json.dumps({"strategy": encode_vec(arbitrage.strategy)}) + "\n"
            )
        return 3
    except (FormatError, OSError) as exc:
        _fail(str(exc))
        return 2
    except ValueError as exc:
        _fail(str(exc))
        return 2


def console() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    console()
