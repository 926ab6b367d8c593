"""
Constants used in the CLI interface of Orbitwist.
"""

from rich.text import Text

# Define version
__version__ = "0.1.0"

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_BUDGET = 4

SUBCOMMANDS = ("group", "curve", "bundle", "homs", "ring", "dim", "select")
OUTPUT_MODES = ("json", "tsv")

# Banner ASCII art
def get_banner_text():
    """Return the stylized banner text object."""
    banner = Text()
    banner.append(" ___  ____  ____  ___ _______        _____ ____ _____\n", style="cyan")
    banner.append("/ _ \\|  _ \\| __ )|_ _|_   _\\ \\      / /_ _/ ___|_   _|\n", style="cyan")
    banner.append("| | | | |_) |  _ \\ | |  | |  \\ \\ /\\ / / | |\\___ \\ | |\n", style="blue")
    banner.append("| |_| |  _ <| |_) || |  | |   \\ V  V /  | | ___) || |\n", style="blue")
    banner.append(" \\___/|_| \\_\\____/|___| |_|    \\_/\\_/  |___|____/ |_|\n", style="magenta")
    return banner


# Application description
APP_DESCRIPTION = "Exact bookkeeping for twisted sectors and orbifold curves"
