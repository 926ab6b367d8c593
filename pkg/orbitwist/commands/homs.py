from orbitwist.src.homs.counting import count_homs
from orbitwist.src.homs.enumeration import conjugation_orbits, enumerate_characteristics
from orbitwist.src.homs.frobenius import count_homs_frobenius
from orbitwist.src.homs.surface import surface_spec
from orbitwist.src.io.inputs import CommandRequest
from orbitwist.src.utils.config_loader import Limits


def _spec(request: CommandRequest):
    options = request.options
    return surface_spec(options["genus"] or 0, options["classes"], options["exact_orders"])


def run_homs_command(request: CommandRequest, limits: Limits) -> dict:
    group = request.group
    spec = _spec(request)

    if request.action == "count":
        result = count_homs(group, spec, limits)
        if request.chars is not None:
            result["frobenius"] = count_homs_frobenius(group, spec, request.chars)
            result["frobenius_agrees"] = result["frobenius"] == result["count"]
        return result

    if request.options["up_to_conj"]:
        orbits = conjugation_orbits(group, spec, limits)
        return {
            "characteristics": [
                {
                    "handles": list(o.representative.handle_images),
                    "punctures": list(o.representative.puncture_images),
                    "orbit_size": o.size,
                }
                for o in orbits
            ],
            "count": sum(o.size for o in orbits),
            "orbits": len(orbits),
        }

    characteristics = enumerate_characteristics(group, spec, limits)
    return {
        "characteristics": [
            {"handles": list(c.handle_images), "punctures": list(c.puncture_images)}
            for c in characteristics
        ],
        "count": len(characteristics),
    }
