from rich.console import Console
from functools import lru_cache

_verbose = False


@lru_cache(maxsize=1)
def get_console() -> Console:
    """Get or create the shared Console instance (stderr, stdout carries results only)"""
    return Console(stderr=True, highlight=False, color_system="auto")


def set_verbose(enabled: bool) -> None:
    global _verbose
    _verbose = enabled


def log_progress(message: str) -> None:
    """Log a progress line, only shown with --verbose."""
    if _verbose:
        get_console().log(message)
