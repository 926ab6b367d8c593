from orbitwist.src.group.conjugacy import conjugacy_table
from orbitwist.src.io.inputs import CommandRequest
from orbitwist.src.utils.config_loader import Limits


def run_group_command(request: CommandRequest, limits: Limits) -> dict:
    """Order, classes, centralizers, inverse classes and element orders."""
    group = request.group
    table = conjugacy_table(group)
    rows = [
        {
            "class": i,
            "size": table.sizes[i],
            "centralizer_order": table.centralizer_orders[i],
            "inverse_class": table.inverse_class[i],
            "element_order": table.element_orders[i],
            "elements": list(members),
        }
        for i, members in enumerate(table.classes)
    ]
    return {
        "order": group.order,
        "identity": group.identity,
        "num_classes": table.num_classes,
        "rows": rows,
    }
