# Package for Orbitwist commands
from orbitwist.src.io.inputs import CommandRequest
from orbitwist.src.utils.config_loader import Limits


def run_command(request: CommandRequest, limits: Limits) -> dict:
    """Dispatch a validated request to the module that owns it."""
    if request.subcommand == "group":
        from orbitwist.commands.group import run_group_command

        return run_group_command(request, limits)
    elif request.subcommand == "curve":
        from orbitwist.commands.curve import run_curve_command

        return run_curve_command(request, limits)
    elif request.subcommand == "bundle":
        from orbitwist.commands.bundle import run_bundle_command

        return run_bundle_command(request, limits)
    elif request.subcommand == "homs":
        from orbitwist.commands.homs import run_homs_command

        return run_homs_command(request, limits)
    elif request.subcommand == "ring":
        from orbitwist.commands.ring import run_ring_command

        return run_ring_command(request, limits)
    elif request.subcommand == "dim":
        from orbitwist.commands.dim import run_dim_command

        return run_dim_command(request, limits)
    elif request.subcommand == "select":
        from orbitwist.commands.dim import run_select_command

        return run_select_command(request, limits)
    raise ValueError(f"unknown subcommand {request.subcommand}")
