"""
Command-line interface for symbolique.

Each subcommand is a handler registered with `@command`; handlers receive the
parsed arguments and return a JSON-compatible payload (or an `Outcome` when
the exit code depends on the result). Domain errors exit with status 1 and
usage errors with status 2.
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from symbolique.config import configure
from symbolique.core.ideal import MonomialIdeal, mu
from symbolique.core.matroid import Matroid, uniform_matroid
from symbolique.core.monomial import Monomial
from symbolique.exceptions import SymboliqueError
from symbolique.features.bench import run_benchmark
from symbolique.features.invariants import (
    a_r,
    alpha_symbolic,
    analyze,
    mgrade,
    noether_number,
    sdefect_formula,
    waldschmidt,
)
from symbolique.features.matroid_ideals import (
    detect_matroid,
    ideal_of,
    matroid_of_ideal,
    sf_symbolic_lcm,
    sf_symbolic_skeleton,
)
from symbolique.features.oracle import (
    noether_number_bruteforce,
    sdefect_direct,
    symbolic_power_bruteforce,
    symbolic_power_raw,
)
from symbolique.features.sides import Side
from symbolique.features.symbolic_engine import symbolic_power, symbolic_type_of
from symbolique.logger_setup import setup_logging
from symbolique.parser import (
    load_ideal,
    load_json,
    matroid_from_json,
    matroid_to_json,
    to_jsonable,
)

logger = logging.getLogger("symbolique")

Handler = Callable[[argparse.Namespace, argparse.ArgumentParser], Any]
COMMANDS: Dict[str, Handler] = {}


@dataclass
class Outcome:
    payload: Any
    exit_code: int = 0


def command(name: str) -> Callable[[Handler], Handler]:
    def register(func: Handler) -> Handler:
        COMMANDS[name] = func
        return func

    return register


# Input resolution


@dataclass
class Inputs:
    matroid: Optional[Matroid] = None
    ideal: Optional[MonomialIdeal] = None
    side: Side = Side.COVER


def resolve_inputs(args: argparse.Namespace, parser: argparse.ArgumentParser) -> Inputs:
    given = [
        flag
        for flag, value in (
            ("--matroid", args.matroid),
            ("--circuits", args.circuits),
            ("--ideal", args.ideal),
            ("--steiner", args.steiner),
        )
        if value is not None
    ]
    if len(given) != 1:
        parser.error(
            "exactly one of --matroid, --circuits, --ideal, --steiner is required"
            + (f" (got {', '.join(given)})" if given else "")
        )
    side = Side(args.side)
    if args.matroid is not None:
        return Inputs(matroid=matroid_from_json(load_json(args.matroid)), side=side)
    if args.steiner is not None:
        data = load_json(args.steiner)
        if not isinstance(data, dict) or "blocks" not in data:
            parser.error("--steiner expects {\"n\", \"d\", \"t\", \"blocks\"}")
        return Inputs(matroid=matroid_from_json(data), side=side)
    if args.circuits is not None:
        if args.n is None:
            parser.error("--circuits requires --n")
        return Inputs(
            matroid=matroid_from_json({"n": args.n, "circuits": load_json(args.circuits)}),
            side=side,
        )
    return Inputs(ideal=load_ideal(args.ideal, args.n), side=side)


def matroid_inputs(inputs: Inputs) -> Tuple[Matroid, Side]:
    """
    The matroid and side to compute with; a raw ideal is read as a
    Stanley–Reisner ideal and must pass matroid detection.
    """
    if inputs.matroid is not None:
        return inputs.matroid, inputs.side
    logger.info("Reading the input ideal as a Stanley–Reisner ideal")
    return matroid_of_ideal(inputs.ideal), Side.SR


def generator_payload(level: int, ideal: MonomialIdeal) -> Dict[str, Any]:
    return {"l": level, "generators": list(ideal.gens), "count": len(ideal)}


# Commands


@command("sympow")
def run_sympow(args: argparse.Namespace, parser: argparse.ArgumentParser) -> Any:
    inputs = resolve_inputs(args, parser)
    if args.method == "bruteforce":
        if inputs.ideal is not None:
            result = symbolic_power_raw(inputs.ideal, args.l)
        else:
            result = symbolic_power_bruteforce(inputs.matroid, args.l, inputs.side)
        payload = generator_payload(args.l, result)
        if args.towers:
            logger.warning("--towers is only available with --method fast")
        return payload

    matroid, side = matroid_inputs(inputs)
    result = symbolic_power(matroid, args.l, side)
    payload = generator_payload(args.l, result)
    if args.towers:
        payload["towers"] = [
            symbolic_type_of(g, matroid, args.l, side).to_dict() for g in result.gens
        ]
    return payload


@command("sqfree")
def run_sqfree(args: argparse.Namespace, parser: argparse.ArgumentParser) -> Any:
    inputs = resolve_inputs(args, parser)
    if inputs.ideal is not None:
        return generator_payload(args.l, sf_symbolic_lcm(inputs.ideal, args.l))
    return generator_payload(
        args.l, sf_symbolic_skeleton(inputs.matroid, args.l, inputs.side)
    )


@command("alpha")
def run_alpha(args: argparse.Namespace, parser: argparse.ArgumentParser) -> Any:
    matroid, side = matroid_inputs(resolve_inputs(args, parser))
    return {"l": args.l, "alpha": alpha_symbolic(matroid, args.l, side)}


@command("waldschmidt")
def run_waldschmidt(args: argparse.Namespace, parser: argparse.ArgumentParser) -> Any:
    matroid, side = matroid_inputs(resolve_inputs(args, parser))
    return waldschmidt(matroid, side)


@command("sdefect")
def run_sdefect(args: argparse.Namespace, parser: argparse.ArgumentParser) -> Any:
    inputs = resolve_inputs(args, parser)
    if inputs.ideal is not None:
        # Raw ideals go through the oracle so non-matroidal inputs still work
        ideal = inputs.ideal

        def symbolic(level: int) -> MonomialIdeal:
            return symbolic_power_raw(ideal, level)

    else:
        matroid, side = inputs.matroid, inputs.side
        ideal = ideal_of(matroid, side)

        def symbolic(level: int) -> MonomialIdeal:
            return symbolic_power(matroid, level, side)

    symb = symbolic(args.l)
    table = {r: a_r(ideal, r, symbolic(r)) for r in range(1, mgrade(ideal) + 1)}
    return {
        "l": args.l,
        "mu": mu(symb),
        "a": table,
        "formula": sdefect_formula(ideal, args.l, symb, table),
        "direct": sdefect_direct(ideal, args.l, symb),
    }


@command("noether")
def run_noether(args: argparse.Namespace, parser: argparse.ArgumentParser) -> Any:
    matroid, side = matroid_inputs(resolve_inputs(args, parser))
    if args.method == "bruteforce":
        value = noether_number_bruteforce(matroid, side)
    else:
        value = noether_number(matroid, side)
    return {"noether_number": value, "method": args.method}


@command("detect")
def run_detect(args: argparse.Namespace, parser: argparse.ArgumentParser) -> Any:
    inputs = resolve_inputs(args, parser)
    if inputs.ideal is None:
        parser.error("detect requires --ideal")
    return detect_matroid(inputs.ideal).to_dict()


@command("analyze")
def run_analyze(args: argparse.Namespace, parser: argparse.ArgumentParser) -> Any:
    matroid, side = matroid_inputs(resolve_inputs(args, parser))
    return analyze(matroid, side, args.l_max).to_dict()


@command("oracle-check")
def run_oracle_check(args: argparse.Namespace, parser: argparse.ArgumentParser) -> Any:
    matroid, side = matroid_inputs(resolve_inputs(args, parser))
    levels = {}
    agree = True
    for level in range(1, args.l_max + 1):
        fast = symbolic_power(matroid, level, side)
        brute = symbolic_power_bruteforce(matroid, level, side)
        equal = fast == brute
        agree = agree and equal
        if not equal:
            logger.error("Engine and oracle differ at l=%d", level)
        levels[level] = {"fast": len(fast), "bruteforce": len(brute), "equal": equal}
    return Outcome({"levels": levels, "agree": agree}, 0 if agree else 1)


@command("bench")
def run_bench(args: argparse.Namespace, parser: argparse.ArgumentParser) -> Any:
    matroid, side = matroid_inputs(resolve_inputs(args, parser))
    if args.l_min > args.l_max:
        parser.error("--l-min must not exceed --l-max")
    rows = run_benchmark(
        matroid,
        range(args.l_min, args.l_max + 1),
        side,
        oracle_level=args.oracle_l,
        loops=args.loops,
    )
    return [row.to_dict() for row in rows]


@command("steiner")
def run_steiner(args: argparse.Namespace, parser: argparse.ArgumentParser) -> Any:
    matroid, _ = matroid_inputs(resolve_inputs(args, parser))
    return {
        "matroid": matroid_to_json(matroid),
        "rank": matroid.rank,
        "bases": len(matroid.bases),
        "sparse_paving": matroid.is_sparse_paving(),
    }


@command("uniform")
def run_uniform(args: argparse.Namespace, parser: argparse.ArgumentParser) -> Any:
    return matroid_to_json(uniform_matroid(args.n, args.c))


# Output


def _format_value(value: Any) -> str:
    if isinstance(value, Monomial):
        return value.format()
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return ", ".join(_format_value(v) for v in value)
    if isinstance(value, dict):
        return "; ".join(f"{k}={_format_value(v)}" for k, v in value.items())
    return str(to_jsonable(value))


def render_table(payload: Any) -> str:
    if isinstance(payload, dict):
        width = max((len(str(k)) for k in payload), default=0)
        return "\n".join(f"{str(k).ljust(width)}  {_format_value(v)}" for k, v in payload.items())
    if isinstance(payload, list) and payload and isinstance(payload[0], dict):
        columns = list(payload[0])
        rows = [columns] + [[_format_value(row[c]) for c in columns] for row in payload]
        widths = [max(len(str(r[i])) for r in rows) for i in range(len(columns))]
        return "\n".join(
            "  ".join(str(cell).rjust(w) for cell, w in zip(r, widths)) for r in rows
        )
    return _format_value(payload)


def render(payload: Any, table: bool) -> str:
    if table:
        return render_table(payload)
    return json.dumps(to_jsonable(payload))


# Parser


def _input_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--matroid", help="matroid JSON file or inline JSON")
    parent.add_argument("--circuits", help="circuit list as JSON, with --n")
    parent.add_argument("--ideal", help="ideal JSON or generator string, file or inline")
    parent.add_argument("--steiner", help="Steiner system JSON file or inline JSON")
    parent.add_argument("--n", type=int, help="number of ground elements / variables")
    parent.add_argument("--side", choices=[s.value for s in Side], default=Side.COVER.value)
    return parent


def _output_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    group = parent.add_mutually_exclusive_group()
    group.add_argument("--json", dest="table", action="store_false", help="JSON output (default)")
    group.add_argument("--table", dest="table", action="store_true", help="human-readable output")
    parent.set_defaults(table=False)
    return parent


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symbolique",
        description="Symbolic powers and invariants of matroid ideals.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="more logging")
    parser.add_argument("--debug", action="store_true", help="enable internal cross-checks")
    parser.add_argument("--budget", type=_positive, help="oracle budget in LCM operations")
    sub = parser.add_subparsers(dest="command", required=True)
    inputs, output = _input_options(), _output_options()
    both = [inputs, output]

    p = sub.add_parser("sympow", parents=both, help="symbolic power generators")
    p.add_argument("--l", type=_non_negative, required=True)
    p.add_argument("--method", choices=["fast", "bruteforce"], default="fast")
    p.add_argument("--towers", action="store_true", help="include tower decompositions")

    p = sub.add_parser("sqfree", parents=both, help="squarefree part SF_l")
    p.add_argument("--l", type=_positive, required=True)

    p = sub.add_parser("alpha", parents=both, help="initial degree of I^(l)")
    p.add_argument("--l", type=_positive, required=True)

    sub.add_parser("waldschmidt", parents=both, help="Waldschmidt constant")

    p = sub.add_parser("sdefect", parents=both, help="symbolic defect by formula and directly")
    p.add_argument("--l", type=_positive, required=True)

    p = sub.add_parser("noether", parents=both, help="symbolic Noether number")
    p.add_argument("--method", choices=["fast", "bruteforce"], default="fast")

    sub.add_parser("detect", parents=both, help="decide whether an ideal is matroidal")

    p = sub.add_parser("analyze", parents=both, help="invariant report")
    p.add_argument("--l-max", type=_positive, default=6)

    p = sub.add_parser("oracle-check", parents=both, help="compare engine and oracle")
    p.add_argument("--l-max", type=_positive, default=4)

    p = sub.add_parser("bench", parents=both, help="time the engine level by level")
    p.add_argument("--l-min", type=_positive, default=10)
    p.add_argument("--l-max", type=_positive, default=20)
    p.add_argument("--oracle-l", type=_positive, help="also time the oracle at this level")
    p.add_argument("--loops", type=_positive, default=1)

    sub.add_parser("steiner", parents=both, help="matroid of a Steiner system")

    p = sub.add_parser("uniform", parents=[output], help="uniform matroid U(c, n)")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--c", type=_positive, required=True)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    setup_logging(level)
    overrides = {}
    if args.debug:
        overrides["debug"] = True
    if args.budget is not None:
        overrides["oracle_budget"] = args.budget
    if overrides:
        configure(**overrides)

    try:
        result = COMMANDS[args.command](args, parser)
    except SymboliqueError as e:
        logger.error("%s failed: %s", args.command, e)
        lines: List[str] = [f"error: {e}"]
        witness = getattr(e, "witness", None)
        if witness is not None:
            lines.append(f"witness: {json.dumps(to_jsonable(witness))}")
        sys.stderr.write("\n".join(lines) + "\n")
        return 1

    outcome = result if isinstance(result, Outcome) else Outcome(result)
    sys.stdout.write(render(outcome.payload, args.table) + "\n")
    return outcome.exit_code
