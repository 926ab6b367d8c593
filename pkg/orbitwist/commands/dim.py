from orbitwist.src.gw.dimension import (
    DimensionInput,
    SelectionInput,
    expected_total_degree,
    insertion_degree,
    selection_rule,
    virtual_dimension,
)
from orbitwist.src.io.inputs import CommandRequest
from orbitwist.src.utils.config_loader import Limits


def _dimension_input(request: CommandRequest) -> DimensionInput:
    options = request.options
    return DimensionInput(
        chern_pairing=options["chern"],
        complex_dim=options["n"],
        genus=options["genus"],
        num_marked=options["k"],
        shifts=tuple(options["shifts"]),
    )


def run_dim_command(request: CommandRequest, limits: Limits) -> dict:
    result = virtual_dimension(_dimension_input(request))
    return {"d": result.d, "two_d": result.two_d}


def run_select_command(request: CommandRequest, limits: Limits) -> dict:
    data = _dimension_input(request)
    selection = SelectionInput(
        deg_k=request.options["deg_k"], insertions=tuple(request.options["insertions"])
    )
    return {
        "allowed": selection_rule(selection, data),
        "insertion_degree": insertion_degree(selection),
        "expected_degree": expected_total_degree(data),
    }
