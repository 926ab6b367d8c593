from orbitwist.src.bundle.orbibundle import check_canonical_consistency
from orbitwist.src.curve.orbicurve import (
    arithmetic_genus,
    canonical_degree,
    check_stability,
    geometry_type,
    orbifold_euler_characteristic,
)
from orbitwist.src.gw.splitting import nodal_characteristic_count
from orbitwist.src.homs.twisted import count_twisted_boundary_conditions
from orbitwist.src.io.inputs import CommandRequest
from orbitwist.src.utils.config_loader import Limits


def run_curve_command(request: CommandRequest, limits: Limits) -> dict:
    curve = request.curve
    stability = check_stability(curve, request.options["constant"])
    result = {
        "components": len(curve.components),
        "nodes": len(curve.nodes),
        "arithmetic_genus": arithmetic_genus(curve),
        "markings": list(curve.marking_multiplicities()),
        "stable_as_curve": stability.stable_as_curve,
        "stable_as_map": stability.stable_as_map,
        "offending": list(stability.offending),
        "rows": [
            {
                "component": nu,
                "genus": component.genus,
                "special_points": curve.special_points(nu),
                "canonical_degree": check_canonical_consistency(component),
                "euler_characteristic": orbifold_euler_characteristic(component),
                "geometry": geometry_type(component),
            }
            for nu, component in enumerate(curve.components)
        ],
    }
    if len(curve.components) == 1 and not curve.nodes:
        result["canonical_degree"] = canonical_degree(curve.components[0])

    if request.group is not None:
        classes = request.options["classes"]
        if classes or curve.nodes:
            result["characteristic_count"] = nodal_characteristic_count(
                request.group, curve, classes
            )
        else:
            result["characteristic_count"] = count_twisted_boundary_conditions(
                request.group, curve.components[0]
            )
    return result
