#!/usr/bin/env python3
"""
Command-line Arguments for whitealg

Builds the argparse surface, merges a ``--config`` flag file under the explicit
flags and validates flag values before any computation runs.
"""

import argparse
import re
from typing import Optional, Sequence, Tuple

from src.config.config_manager import load_flag_file
from src.errors import UsageError

ALPHA_PATTERN = re.compile(r"^\((\d+),(.*)\)=(-?\d+)$")

OUTPUT_FORMATS = ("table", "json")
RINGS = ("z", "q")
INT_FLAGS = {
    "dim",
    "max_dim",
    "index",
    "truncate",
    "m",
    "n",
    "alpha1",
    "alpha2",
    "degree_cap",
}

# Shared flags: dest -> value used when neither the command line nor --config sets it
COMMON_DEFAULTS = {
    "space": "hp",
    "ring": "z",
    "output": None,
    "degree_cap": None,
    "notation": "whitehead",
}

# Per-command flags that have no default and may come from --config
COMMAND_FLAGS = {
    "basis": ("dim",),
    "rank-table": ("max_dim",),
    "reduce": ("expr",),
    "primitive-check": ("expr",),
    "hurewicz": ("index",),
    "suspension": ("expr",),
    "aut-report": ("truncate", "alpha"),
    "order": ("truncate", "morphism"),
    "noncommute-witness": ("m", "alpha1", "alpha2"),
    "exact-seq": ("n",),
    "snt-witness": ("truncate", "alpha"),
}


def parse_alpha(text: str) -> Tuple[int, str, int]:
    """
    Parse ``(n,w)=k`` into (layer, bracket expression, coefficient).

    Raises:
        UsageError: If the text does not have that shape
    """
    match = ALPHA_PATTERN.match("".join(str(text).split()))
    if not match:
        raise UsageError(f"Bad --alpha {text!r}; expected (n,[x1,x2])=k")
    return int(match.group(1)), match.group(2), int(match.group(3))


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--space", help="hp, cp, rp or custom:<Whitehead degrees>")
    common.add_argument("--ring", type=str.lower, choices=RINGS, help="z or q")
    common.add_argument("--output", type=str.lower, choices=OUTPUT_FORMATS)
    common.add_argument("--degree-cap", type=int, help="Samelson degree cap")
    common.add_argument(
        "--notation", choices=("whitehead", "samelson"), help="Bracket notation"
    )
    common.add_argument("--config", help="YAML file of flag values")
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    return common


def build_parser() -> argparse.ArgumentParser:
    """Parser with one subcommand per computation."""
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="whitealg",
        description="Exact computations in Whitehead algebras of suspensions",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    basis = subparsers.add_parser(
        "basis", parents=[common], help="Basis of pi_D (x) Q in one dimension"
    )
    basis.add_argument("--dim", type=int, help="Whitehead dimension")

    rank_table = subparsers.add_parser(
        "rank-table", parents=[common], help="Ranks up to a dimension"
    )
    rank_table.add_argument("--max-dim", type=int, help="Largest Whitehead dimension")

    reduce = subparsers.add_parser(
        "reduce", parents=[common], help="Normal form of a bracket expression"
    )
    reduce.add_argument("--expr", help="Bracket expression")

    primitive = subparsers.add_parser(
        "primitive-check", parents=[common], help="Primitivity of a tensor expression"
    )
    primitive.add_argument("--expr", help="Expression in b-words or brackets")
    primitive.add_argument(
        "--via-hurewicz", action="store_true", help="Send each generator to its lift"
    )

    hurewicz = subparsers.add_parser(
        "hurewicz", parents=[common], help="Primitive lift of b_n"
    )
    hurewicz.add_argument("--index", type=int, help="Generator index n")

    suspension = subparsers.add_parser(
        "suspension", parents=[common], help="Homology suspension of an element"
    )
    suspension.add_argument("--expr", help="Tensor expression")
    suspension.add_argument("--via-hurewicz", action="store_true")

    aut = subparsers.add_parser(
        "aut-report", parents=[common], help="Structure of Aut(L<=n)"
    )
    aut.add_argument("--truncate", type=int, help="Truncation n")
    aut.add_argument("--alpha", action="append", help="(n,w)=k unipotent coefficient")

    order = subparsers.add_parser(
        "order", parents=[common], help="Order of an automorphism"
    )
    order.add_argument("--truncate", type=int, help="Truncation n")
    order.add_argument("--morphism", help='"xk -> expr; ..." specification')

    noncommute = subparsers.add_parser(
        "noncommute-witness", parents=[common], help="Non-commuting unipotent pair"
    )
    noncommute.add_argument("--m", type=int, help="Layer m >= 3")
    noncommute.add_argument("--alpha1", type=int, help="Coefficient on x_m")
    noncommute.add_argument("--alpha2", type=int, help="Coefficient on x_(m+1)")

    exact = subparsers.add_parser(
        "exact-seq", parents=[common], help="Exact-sequence checks at layer n"
    )
    exact.add_argument("--n", type=int, help="Layer n")

    snt = subparsers.add_parser(
        "snt-witness", parents=[common], help="Finite-cokernel witness"
    )
    snt.add_argument("--truncate", type=int, help="Truncation n")
    snt.add_argument("--alpha", action="append", help="(n,w)=k coefficient")

    return parser


def _merge_flag_file(args: argparse.Namespace) -> None:
    allowed = set(COMMON_DEFAULTS) | set(COMMAND_FLAGS[args.command]) | {"verbose"}
    if args.command in ("primitive-check", "suspension"):
        allowed.add("via_hurewicz")
    for key, value in load_flag_file(args.config).items():
        if key not in allowed:
            raise UsageError(
                f"Flag {key!r} in {args.config} does not apply to {args.command}"
            )
        if getattr(args, key, None) in (None, False):
            if key == "alpha" and not isinstance(value, list):
                value = [value]
            if key in INT_FLAGS:
                value = int(value)
            setattr(args, key, value)


def parse_args(
    argv: Optional[Sequence[str]] = None, parser: argparse.ArgumentParser = None
) -> argparse.Namespace:
    """
    Parse and validate a command line.

    Values from ``--config`` fill flags the command line left unset; built-in
    defaults fill the rest.

    Raises:
        SystemExit: On argparse errors (status 2)
        UsageError: On invalid flag values or an unreadable flag file
    """
    parser = parser or build_parser()
    args = parser.parse_args(argv)

    if args.config:
        try:
            _merge_flag_file(args)
        except (OSError, ValueError) as e:
            raise UsageError(str(e))

    for key, default in COMMON_DEFAULTS.items():
        if getattr(args, key, None) is None:
            setattr(args, key, default)
    if getattr(args, "alpha1", 0) is None:
        args.alpha1 = 1
    if getattr(args, "alpha2", 0) is None:
        args.alpha2 = 1

    if str(args.ring).lower() not in RINGS:
        raise UsageError(f"Unknown ring: {args.ring}")
    args.ring = str(args.ring).lower()
    if args.output is not None and str(args.output).lower() not in OUTPUT_FORMATS:
        raise UsageError(f"Unknown output format: {args.output}")
    if args.degree_cap is not None and int(args.degree_cap) <= 0:
        raise UsageError("--degree-cap must be positive")
    if getattr(args, "alpha", None) is not None:
        args.alpha = [parse_alpha(text) for text in args.alpha]
    return args

