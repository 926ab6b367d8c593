from orbitwist.src.bundle.orbibundle import chern_number, riemann_roch_index
from orbitwist.src.errors import SchemaError
from orbitwist.src.group.conjugacy import conjugacy_table
from orbitwist.src.gw.sectors import sector_degrees
from orbitwist.src.io.inputs import CommandRequest
from orbitwist.src.utils.config_loader import Limits


def run_bundle_command(request: CommandRequest, limits: Limits) -> dict:
    result = {}
    if request.bundle is not None:
        curve = request.curve
        if len(curve.components) != 1 or curve.nodes:
            raise SchemaError("--curve", "bundle invariants need a smooth (one-component) curve")
        component = curve.components[0]
        result["chern_number"] = chern_number(request.bundle, component)
        result["index"] = riemann_roch_index(request.bundle, component)
        result["rank"] = request.bundle.rank

    if request.rep is not None:
        group = request.group
        table = conjugacy_table(group)
        degrees = sector_degrees(group, request.rep)
        result["rows"] = [
            {
                "class": i,
                "element_order": table.element_orders[i],
                "degree_shifting": degrees[i] / 2,
                "orbifold_degree": degrees[i],
                "inverse_class": table.inverse_class[i],
            }
            for i in range(table.num_classes)
        ]
        result["elements_with_data"] = len(request.rep.exponents)
    return result
