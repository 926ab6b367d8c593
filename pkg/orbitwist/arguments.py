import argparse
from pathlib import Path
from typing import Any, Dict, Optional

from orbitwist.src.constants.cli_constants import OUTPUT_MODES


def add_common_arguments(parser):
    """Add the flags every subcommand understands."""
    parser.add_argument(
        "--out",
        choices=OUTPUT_MODES,
        default="json",
        help="Output format [default: json]",
    )
    parser.add_argument(
        "--threads",
        type=int,
        help="Worker threads for brute-force counting (values never depend on it) [default: config or 1]",
    )
    parser.add_argument(
        "--seed",
        type=int,
        help="Scheduling seed; never changes results [default: none]",
    )
    parser.add_argument(
        "--verbose",
        action="store_true",
        help="Log progress to stderr [default: disabled]",
    )


def add_file_arguments(parser, *names: str):
    helps = {
        "group": "Group file: Cayley table or permutation generators (JSON)",
        "curve": "Curve file: components, markings and nodes (JSON)",
        "bundle": "Orbifold bundle file: rank, desingularization degree, exponents (JSON)",
        "rep": "Representation file: per-element exponents or from_permutation_action (JSON)",
        "chars": "Character table file for the Frobenius cross-check (JSON)",
    }
    for name in names:
        parser.add_argument(f"--{name}", type=Path, help=helps[name])


def add_surface_arguments(parser):
    parser.add_argument("--genus", type=int, help="Genus g [default: 0]")
    parser.add_argument(
        "--classes",
        type=str,
        help="Comma-separated conjugacy class indices at the punctures, e.g. 2,2,1",
    )
    parser.add_argument(
        "--exact-orders",
        dest="exact_orders",
        type=str,
        help="Comma-separated exact element orders for further punctures, e.g. 2,3",
    )


def add_dimension_arguments(parser):
    parser.add_argument("--chern", type=str, help="c₁(TX)·A as p/q [default: 0]")
    parser.add_argument("--n", type=int, help="Complex dimension of the target [default: 0]")
    parser.add_argument("--genus", type=int, help="Genus g [default: 0]")
    parser.add_argument("--k", type=int, help="Number of marked points [default: inferred]")
    parser.add_argument(
        "--shifts", type=str, help="Comma-separated degree shifting numbers p/q,..."
    )


def split_namespace(args: argparse.Namespace) -> "tuple[Dict[str, Optional[Path]], Dict[str, Any]]":
    """Separate file references from flag values for parse_inputs."""
    values = vars(args)
    paths = {name: values.get(name) for name in ("group", "curve", "bundle", "rep", "chars")}
    flags = {
        key: value
        for key, value in values.items()
        if key not in paths and key not in ("threads", "seed", "verbose")
    }
    flags["subcommand"] = values.get("command")
    return paths, flags
