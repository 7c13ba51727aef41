"""Command-line front end.

Subcommands: ``trees`` (canonical enumeration), ``structure`` (coproduct or
antipode tables for one element), ``char`` (group arithmetic, exp/log,
evolution and symplectic checks over JSON files).  Exit codes: 0 success,
2 mathematical domain errors, 1 I/O or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .characters import (
    Character,
    InfinitesimalCharacter,
    char_inv,
    char_mul,
    char_exp,
    char_log,
    tree_values_from_json_dict,
)
from .convolution import TruncatedFunctional
from .errors import AlgebraError, ParseError
from .evolution import FunctionalCurve, evolve
from .hopf import resolve_hopf
from .ideals import is_symplectic, symplectic_generators
from .series import FormalSeries, apply_series
from .trees import enumerate_trees


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-N", "--truncation", type=int, default=6,
                        help="truncation degree (default 6)")
    common.add_argument("--hopf", default="ck",
                        help='Hopf algebra id: "ck" or "tensor(d)" (default ck)')
    common.add_argument("--ring", default="rational",
                        help='coefficient ring id: "rational" or "series:M"')
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", help="output file (default stdout)")

    parser = argparse.ArgumentParser(
        prog="hopfchar",
        description="Exact computations in truncated Hopf-algebra character groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_trees = sub.add_parser("trees", parents=[common],
                             help="list canonical trees per order")
    p_trees.add_argument("--max-order", type=int, required=True)

    p_struct = sub.add_parser("structure", parents=[common],
                              help="coproduct/antipode of one element")
    p_struct.add_argument("element", help="basis element (forest or word serialization)")
    p_struct.add_argument("--which", choices=("coproduct", "antipode"), required=True)

    p_char = sub.add_parser("char", parents=[common],
                            help="character arithmetic on JSON files")
    p_char.add_argument(
        "op",
        choices=("mul", "inv", "exp", "log", "evolve", "symplectic", "apply"),
    )
    p_char.add_argument("inputs", nargs="+", help="input JSON file paths")
    p_char.add_argument("--t", default="1",
                        help="evolution end time as a rational (default 1)")
    p_char.add_argument("--series",
                        help='series literal "c0,c1,..." for the apply op')
    return parser


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _load_json(path: str) -> dict:
    with open(path) as handle:
        return json.load(handle)


def _cmd_trees(args) -> str:
    levels = enumerate_trees(args.max_order)
    if args.format == "json":
        return json.dumps(
            {str(n + 1): [t.serial for t in level] for n, level in enumerate(levels)},
            indent=2,
        )
    lines = []
    for n, level in enumerate(levels, start=1):
        lines.append(f"order {n} ({len(level)} trees):")
        for tree in level:
            lines.append(f"  {tree.serial}")
    return "\n".join(lines)


def _cmd_structure(args) -> str:
    hopf = resolve_hopf(args.hopf)
    element = hopf.parse_basis(args.element)
    if args.which == "antipode":
        vec = hopf.antipode(element)
        if args.format == "json":
            return json.dumps(
                {b.serial: str(c) for b, c in sorted(
                    vec, key=lambda kv: (kv[0].degree, kv[0].serial))},
                indent=2,
            )
        return vec.format()
    terms = sorted(
        hopf.coproduct(element),
        key=lambda t: (t[1].degree, t[1].serial, t[2].serial),
    )
    if args.format == "json":
        return json.dumps(
            [[str(c), left.serial, right.serial] for c, left, right in terms],
            indent=2,
        )
    lines = []
    for coeff, left, right in terms:
        prefix = "" if coeff == 1 else f"{coeff} "
        lines.append(f"{prefix}{left.serial} ⊗ {right.serial}")
    return "\n".join(lines)


def _cmd_char(args) -> str:
    op = args.op
    if op == "mul":
        if len(args.inputs) != 2:
            raise ParseError("mul needs exactly two input files", 0)
        phi = Character(TruncatedFunctional.from_json_dict(_load_json(args.inputs[0])))
        psi = Character(TruncatedFunctional.from_json_dict(_load_json(args.inputs[1])))
        return char_mul(phi, psi).functional.to_json()
    if op == "inv":
        phi = Character(TruncatedFunctional.from_json_dict(_load_json(args.inputs[0])))
        return char_inv(phi).functional.to_json()
    if op == "exp":
        phi = InfinitesimalCharacter(
            TruncatedFunctional.from_json_dict(_load_json(args.inputs[0]))
        )
        return char_exp(phi).functional.to_json()
    if op == "log":
        psi = Character(TruncatedFunctional.from_json_dict(_load_json(args.inputs[0])))
        return char_log(psi).functional.to_json()
    if op == "evolve":
        curve = FunctionalCurve.from_json_dict(_load_json(args.inputs[0]))
        return evolve(curve, Fraction(args.t)).to_json()
    if op == "apply":
        if not args.series:
            raise ParseError("apply needs --series \"c0,c1,...\"", 0)
        functional = TruncatedFunctional.from_json_dict(_load_json(args.inputs[0]))
        series = FormalSeries.parse(args.series)
        return apply_series(series, functional).to_json()
    # symplectic: tree-value map JSON {"truncation": N, "trees": {...}}
    values, truncation, ring = tree_values_from_json_dict(_load_json(args.inputs[0]))
    verdict = is_symplectic(values, truncation, ring)
    count = len(symplectic_generators(truncation).generators)
    if args.format == "json":
        return json.dumps({"symplectic": verdict, "generators": count}, indent=2)
    return f"{'true' if verdict else 'false'} (generators checked: {count})"


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.command == "trees":
            output = _cmd_trees(args)
        elif args.command == "structure":
            output = _cmd_structure(args)
        else:
            output = _cmd_char(args)
    except ParseError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError, KeyError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except AlgebraError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    _emit(args, output)
    return 0


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
