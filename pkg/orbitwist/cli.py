import argparse
import sys
from typing import List, Optional

from rich.console import Console
from rich.panel import Panel
from rich.text import Text
from rich.theme import Theme
from rich_argparse import RichHelpFormatter

from orbitwist.arguments import (
    add_common_arguments,
    add_dimension_arguments,
    add_file_arguments,
    add_surface_arguments,
    split_namespace,
)
from orbitwist.logger import get_console, set_verbose
from orbitwist.src.constants.cli_constants import (
    APP_DESCRIPTION,
    EXIT_DOMAIN,
    EXIT_OK,
    EXIT_PARSE,
    __version__,
    get_banner_text,
)
from orbitwist.src.errors import OrbitwistError


class OrbitwistHelpFormatter(RichHelpFormatter):
    """Custom formatter for the Orbitwist CLI that enhances the output with rich styling."""

    def __init__(self, prog):
        super().__init__(prog, max_help_position=30, width=100)
        self.console = Console(
            theme=Theme(
                {
                    "command": "bold cyan",
                    "argument": "green",
                    "option": "yellow",
                    "version": "blue",
                    "title": "bold magenta",
                }
            )
        )

    def start_section(self, heading):
        # Make section headings more prominent
        heading_text = Text(heading, style="title")
        super().start_section(str(heading_text))


def display_banner():
    """Display a stylish banner for Orbitwist."""
    banner = get_banner_text()
    version_info = Text(f"v{__version__}", style="blue")
    tagline = Text(APP_DESCRIPTION, style="italic")
    panel = Panel.fit(
        Text.assemble(banner, "\n", tagline, "\n", version_info),
        border_style="green",
        padding=(1, 2),
    )
    get_console().print(panel)


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbitwist",
        description=f"Orbitwist: {APP_DESCRIPTION}",
        formatter_class=OrbitwistHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"Orbitwist {__version__}")
    subparsers = parser.add_subparsers(dest="command")

    def subcommand(name: str, help_text: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(
            name, help=help_text, description=help_text, formatter_class=OrbitwistHelpFormatter
        )
        add_common_arguments(sub)
        return sub

    group_parser = subcommand("group", "Conjugacy classes and centralizers of a finite group")
    add_file_arguments(group_parser, "group")

    curve_parser = subcommand(
        "curve", "Canonical degree, arithmetic genus and stability of an orbicurve"
    )
    add_file_arguments(curve_parser, "curve", "group")
    curve_parser.add_argument("--classes", type=str, help="Class index per marked point")
    curve_parser.add_argument(
        "--constant", type=str, help="Comma-separated components carrying a constant map"
    )

    bundle_parser = subcommand(
        "bundle", "Chern number and index of an orbifold bundle, or degree shifting numbers"
    )
    add_file_arguments(bundle_parser, "bundle", "curve", "rep", "group")

    homs_parser = subcommand("homs", "Count or enumerate twisted boundary conditions")
    homs_parser.add_argument("action", choices=["count", "enum"])
    add_file_arguments(homs_parser, "group", "chars")
    add_surface_arguments(homs_parser)
    homs_parser.add_argument(
        "--up-to-conj",
        dest="up_to_conj",
        action="store_true",
        help="Enumerate one representative per conjugation orbit [default: disabled]",
    )

    ring_parser = subcommand("ring", "Sector product table, associativity and splitting checks")
    ring_parser.add_argument("action", choices=["table", "assoc", "split"])
    add_file_arguments(ring_parser, "group")
    add_surface_arguments(ring_parser)
    ring_parser.add_argument("--split", type=str, help="Separating split g1,k1")

    dim_parser = subcommand("dim", "Virtual dimension of the moduli space")
    add_dimension_arguments(dim_parser)

    select_parser = subcommand("select", "Degree selection rule for an invariant")
    add_dimension_arguments(select_parser)
    select_parser.add_argument("--degK", type=int, help="Degree of the class K [default: 0]")
    select_parser.add_argument(
        "--insertions", type=str, help='Insertions "deg+l,deg+l", e.g. "0+0,2+1"'
    )

    return parser


def _emit(data: bytes) -> None:
    """Write the result bytes unchanged (no newline translation)."""
    buffer = getattr(sys.stdout, "buffer", None)
    if buffer is not None:
        sys.stdout.flush()
        buffer.write(data)
        buffer.flush()
    else:
        sys.stdout.write(data.decode("utf-8"))
    sys.stdout.flush()


def main(argv: Optional[List[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv

    # Display the banner before the help text
    if not argv or "-h" in argv or "--help" in argv:
        display_banner()

    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_PARSE if e.code else EXIT_OK

    if args.command is None:
        parser.print_help()
        return EXIT_PARSE

    set_verbose(args.verbose)

    from orbitwist.commands import run_command
    from orbitwist.src.io.inputs import parse_inputs
    from orbitwist.src.io.output import format_output
    from orbitwist.src.utils.config_loader import get_limits

    console = get_console()
    out = getattr(args, "out", "json")
    try:
        limits = get_limits(threads=args.threads, seed=args.seed)
        paths, flags = split_namespace(args)
        request = parse_inputs(paths, flags, order_cap=limits.order_cap)
        result = run_command(request, limits)
    except OrbitwistError as e:
        console.print(f"[red]Error:[/] {e.code}: {e.message}")
        _emit(format_output(e.to_document(), out))
        return e.exit_code
    except ValueError as e:
        console.print(f"[red]Error:[/] {e}")
        document = {"error": {"code": "orbitwist.ValueError", "message": str(e)}}
        _emit(format_output(document, out))
        return EXIT_DOMAIN

    _emit(format_output(result, out))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
