from orbitwist.src.gw.sectors import check_associativity, product_table, sectors_and_pairing
from orbitwist.src.gw.splitting import IdentityCheck, splitting_identities
from orbitwist.src.io.inputs import CommandRequest
from orbitwist.src.utils.config_loader import Limits


def run_ring_command(request: CommandRequest, limits: Limits) -> dict:
    group = request.group

    if request.action == "table":
        sectors, pairing = sectors_and_pairing(group)
        return {
            "sectors": [
                {
                    "class": s.index,
                    "size": s.size,
                    "centralizer_order": s.centralizer_order,
                    "inverse_class": s.inverse,
                }
                for s in sectors
            ],
            "pairing": [list(row) for row in pairing.matrix],
            "structure_constants": product_table(group).to_nested(),
        }

    if request.action == "assoc":
        report = check_associativity(group)
        result = {"associative": report.associative}
        if report.counterexample is not None:
            result["counterexample"] = list(report.counterexample)
        return result

    options = request.options
    report = splitting_identities(
        group,
        options["genus"] or 0,
        options["classes"],
        split=tuple(options["split"]) if options["split"] else None,
        limits=limits,
    )
    result = {
        "genus": report.genus,
        "classes": list(report.classes),
        "holds": report.holds,
    }
    if report.separating is not None:
        result["split"] = list(report.split)
        result["separating"] = _check_document(report.separating)
    if report.non_separating is not None:
        result["non_separating"] = _check_document(report.non_separating)
    return result


def _check_document(check: IdentityCheck) -> dict:
    return {
        "lhs": check.lhs,
        "rhs": check.rhs,
        "holds": check.holds,
        "lhs_method": check.lhs_method,
    }
