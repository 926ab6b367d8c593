"""
Input schemas. Every referenced file is parsed and validated here, before any
computation starts.
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence, Union

from orbitwist.logger import get_console
from orbitwist.src.bundle.orbibundle import OrbiBundleData, make_orbibundle
from orbitwist.src.bundle.representation import (
    LinearRepData,
    make_linear_rep,
    rep_from_permutation_action,
)
from orbitwist.src.constants.cli_constants import OUTPUT_MODES, SUBCOMMANDS
from orbitwist.src.curve.orbicurve import (
    NodalOrbicurve,
    Node,
    make_marked_orbicurve,
    make_nodal_orbicurve,
)
from orbitwist.src.errors import ParseError, SchemaError
from orbitwist.src.group.conjugacy import conjugacy_table
from orbitwist.src.group.finite_group import (
    FiniteGroup,
    build_group_from_permutations,
    build_group_from_table,
    element_order,
)
from orbitwist.src.gw.dimension import Insertion
from orbitwist.src.homs.frobenius import CharacterTable, make_character_table
from orbitwist.src.utils.config_loader import DEFAULT_ORDER_CAP
from orbitwist.src.utils.rationals import parse_rational

ACTIONS = {
    "homs": ("count", "enum"),
    "ring": ("table", "assoc", "split"),
}


@dataclass
class CommandRequest:
    subcommand: str
    action: Optional[str] = None
    options: Dict[str, Any] = field(default_factory=dict)
    group: Optional[FiniteGroup] = None
    curve: Optional[NodalOrbicurve] = None
    bundle: Optional[OrbiBundleData] = None
    rep: Optional[LinearRepData] = None
    chars: Optional[CharacterTable] = None
    warnings: List[str] = field(default_factory=list)


def _warn(request_warnings: List[str]):
    def record(message: str) -> None:
        request_warnings.append(message)
        get_console().print(f"[yellow]Warning:[/] {message}")

    return record


def load_json(path: Union[str, Path]) -> Any:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(str(path), "file", e.strerror or str(e))
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(str(path), f"line {e.lineno} column {e.colno}", e.msg)


def _require(document: Mapping, key: str, kind, where: str):
    if not isinstance(document, dict) or key not in document:
        raise SchemaError(f"{where}.{key}", "missing")
    value = document[key]
    if kind is int and (isinstance(value, bool) or not isinstance(value, int)):
        raise SchemaError(f"{where}.{key}", f"expected an integer, got {value!r}")
    if kind is not int and not isinstance(value, kind):
        raise SchemaError(f"{where}.{key}", f"expected {kind.__name__}, got {value!r}")
    return value


def _optional_list(document: Mapping, key: str, where: str) -> list:
    if key not in document:
        return []
    return _require(document, key, list, where)


def _int_list(values: Any, where: str) -> List[int]:
    if not isinstance(values, list) or any(
        isinstance(v, bool) or not isinstance(v, int) for v in values
    ):
        raise SchemaError(where, f"expected a list of integers, got {values!r}")
    return list(values)


def parse_group_document(document: Any, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    if not isinstance(document, dict):
        raise SchemaError("group", "expected a JSON object")
    if "table" in document:
        order = _require(document, "order", int, "group")
        rows = _require(document, "table", list, "group")
        if len(rows) != order:
            raise SchemaError("group.table", f"expected {order} rows, got {len(rows)}")
        for i, row in enumerate(rows):
            entries = _int_list(row, f"group.table[{i}]")
            if len(entries) != order:
                raise SchemaError(f"group.table[{i}]", f"expected {order} entries")
            if any(not 0 <= e < order for e in entries):
                raise SchemaError("group.table", "table entry out of range")
        return build_group_from_table(order, rows)

    if "perm_generators" in document:
        degree = _require(document, "degree", int, "group")
        generators = _require(document, "perm_generators", list, "group")
        for i, generator in enumerate(generators):
            if not isinstance(generator, list):
                raise SchemaError(f"group.perm_generators[{i}]", "expected a list of cycles")
            for cycle in generator:
                _int_list(cycle, f"group.perm_generators[{i}]")
        return build_group_from_permutations(generators, degree, order_cap=order_cap)

    raise SchemaError("group", "expected 'table' or 'perm_generators'")


def parse_curve_document(document: Any) -> NodalOrbicurve:
    if not isinstance(document, dict):
        raise SchemaError("curve", "expected a JSON object")
    if "components" not in document:
        genus = _require(document, "genus", int, "curve")
        markings = _int_list(document.get("markings", []), "curve.markings")
        return make_nodal_orbicurve([make_marked_orbicurve(genus, markings)], [])

    components = []
    for i, raw in enumerate(_require(document, "components", list, "curve")):
        genus = _require(raw, "genus", int, f"curve.components[{i}]")
        markings = _int_list(raw.get("markings", []), f"curve.components[{i}].markings")
        components.append(make_marked_orbicurve(genus, markings))

    nodes = []
    for j, raw in enumerate(_optional_list(document, "nodes", "curve")):
        where = f"curve.nodes[{j}]"
        a = _int_list(_require(raw, "a", list, where), f"{where}.a")
        b = _int_list(_require(raw, "b", list, where), f"{where}.b")
        if len(a) != 2 or len(b) != 2:
            raise SchemaError(where, "branches are [component, slot] pairs")
        mult = _require(raw, "mult", int, where)
        nodes.append(Node(branch_a=(a[0], a[1]), branch_b=(b[0], b[1]), multiplicity=mult))

    markings = None
    if "marking_slots" in document:
        markings = []
        for i, slot in enumerate(_require(document, "marking_slots", list, "curve")):
            pair = _int_list(slot, f"curve.marking_slots[{i}]")
            if len(pair) != 2:
                raise SchemaError(f"curve.marking_slots[{i}]", "expected [component, slot]")
            markings.append((pair[0], pair[1]))
    return make_nodal_orbicurve(components, nodes, markings)


def parse_bundle_document(document: Any) -> OrbiBundleData:
    rank = _require(document, "rank", int, "bundle")
    desing = _require(document, "desing_degree", int, "bundle")
    points = []
    for i, raw in enumerate(_optional_list(document, "points", "bundle")):
        mult = _require(raw, "mult", int, f"bundle.points[{i}]")
        exponents = _int_list(raw.get("exponents", []), f"bundle.points[{i}].exponents")
        points.append((mult, exponents))
    return make_orbibundle(rank, desing, points)


def parse_rep_document(document: Any, group: FiniteGroup, warn=None) -> LinearRepData:
    if not isinstance(document, dict):
        raise SchemaError("rep", "expected a JSON object")
    if document.get("from_permutation_action"):
        return rep_from_permutation_action(group)

    exponents: Dict[int, List[Fraction]] = {}
    rank = None
    for i, raw in enumerate(_require(document, "elements", list, "rep")):
        where = f"rep.elements[{i}]"
        index = _require(raw, "index", int, where)
        if not 0 <= index < group.order:
            raise SchemaError(f"{where}.index", f"element {index} is not in the group")
        if "order" in raw:
            declared = _require(raw, "order", int, where)
            if declared != element_order(group, index):
                raise SchemaError(
                    f"{where}.order",
                    f"element {index} has order {element_order(group, index)}, not {declared}",
                )
        values = [
            parse_rational(v, f"{where}.exponents", warn)
            for v in _require(raw, "exponents", list, where)
        ]
        if rank is None:
            rank = len(values)
        exponents[index] = values
    if rank is None:
        raise SchemaError("rep.elements", "no elements given")
    return make_linear_rep(group, rank, exponents)


def _complex(entry: Any, where: str) -> complex:
    if isinstance(entry, (int, float)) and not isinstance(entry, bool):
        return complex(entry)
    if (
        isinstance(entry, list)
        and len(entry) == 2
        and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in entry)
    ):
        return complex(entry[0], entry[1])
    raise SchemaError(where, f"expected a number or [re, im], got {entry!r}")


def parse_chars_document(document: Any, group: FiniteGroup) -> CharacterTable:
    classes = _int_list(_require(document, "classes", list, "chars"), "chars.classes")
    rows = _require(document, "chars", list, "chars")
    characters = []
    for i, row in enumerate(rows):
        if not isinstance(row, list):
            raise SchemaError(f"chars.chars[{i}]", "expected a list")
        characters.append([_complex(v, f"chars.chars[{i}]") for v in row])
    return make_character_table(conjugacy_table(group), classes, characters)


def parse_int_list(text: Optional[str], field_name: str) -> List[int]:
    if text is None or text.strip() == "":
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise SchemaError(field_name, f"expected comma-separated integers, got {text!r}")


def parse_rational_list(text: Optional[str], field_name: str, warn=None) -> List[Fraction]:
    if text is None or text.strip() == "":
        return []
    return [parse_rational(part, field_name, warn) for part in text.split(",")]


def parse_insertions(text: Optional[str], warn=None) -> List[Insertion]:
    """"deg+l,deg+l,…" with deg a rational orbifold degree and l a descendant power."""
    insertions = []
    if text is None or text.strip() == "":
        return insertions
    for part in text.split(","):
        degree_text, _, power_text = part.partition("+")
        power_text = power_text.strip() or "0"
        try:
            power = int(power_text)
        except ValueError:
            raise SchemaError("insertions", f"bad descendant power in {part!r}")
        if power < 0:
            raise SchemaError("insertions", f"negative descendant power in {part!r}")
        degree = parse_rational(degree_text, "insertions", warn)
        insertions.append(Insertion(orbifold_degree=degree, descendant_power=power))
    return insertions


def _needs(request: CommandRequest, paths: Mapping[str, Optional[Path]], *names: str) -> None:
    for name in names:
        if paths.get(name) is None:
            raise SchemaError(f"--{name}", f"required by '{request.subcommand}'")


def parse_inputs(
    paths: Mapping[str, Optional[Path]],
    flags: Mapping[str, Any],
    order_cap: int = DEFAULT_ORDER_CAP,
) -> CommandRequest:
    """Build a fully validated CommandRequest from file paths and flag values."""
    subcommand = flags.get("subcommand")
    if subcommand not in SUBCOMMANDS:
        raise SchemaError("subcommand", f"expected one of {', '.join(SUBCOMMANDS)}")
    request = CommandRequest(subcommand=subcommand)
    warn = _warn(request.warnings)

    action = flags.get("action")
    if subcommand in ACTIONS:
        if action not in ACTIONS[subcommand]:
            raise SchemaError("action", f"'{subcommand}' expects one of {ACTIONS[subcommand]}")
        request.action = action

    out = flags.get("out") or "json"
    if out not in OUTPUT_MODES:
        raise SchemaError("--out", f"expected one of {OUTPUT_MODES}")

    if paths.get("group") is not None:
        request.group = parse_group_document(load_json(paths["group"]), order_cap)
    if paths.get("curve") is not None:
        request.curve = parse_curve_document(load_json(paths["curve"]))
    if paths.get("bundle") is not None:
        request.bundle = parse_bundle_document(load_json(paths["bundle"]))
    if paths.get("rep") is not None:
        _needs(request, paths, "group")
        request.rep = parse_rep_document(load_json(paths["rep"]), request.group, warn)
    if paths.get("chars") is not None:
        _needs(request, paths, "group")
        request.chars = parse_chars_document(load_json(paths["chars"]), request.group)

    options: Dict[str, Any] = {
        "out": out,
        "genus": flags.get("genus"),
        "classes": parse_int_list(flags.get("classes"), "--classes"),
        "exact_orders": parse_int_list(flags.get("exact_orders"), "--exact-orders"),
        "up_to_conj": bool(flags.get("up_to_conj")),
        "constant": parse_int_list(flags.get("constant"), "--constant"),
        "split": parse_int_list(flags.get("split"), "--split"),
    }
    if options["genus"] is not None and options["genus"] < 0:
        raise SchemaError("--genus", "must be non-negative")
    if options["split"] and len(options["split"]) != 2:
        raise SchemaError("--split", "expected g1,k1")

    if subcommand in ("group", "homs", "ring"):
        _needs(request, paths, "group")
    elif subcommand == "curve":
        _needs(request, paths, "curve")
    elif subcommand == "bundle":
        if paths.get("bundle") is not None:
            _needs(request, paths, "curve")
        else:
            _needs(request, paths, "rep")
    elif subcommand in ("dim", "select"):
        options["chern"] = parse_rational(flags.get("chern") or "0", "--chern", warn)
        options["n"] = flags.get("n") if flags.get("n") is not None else 0
        options["shifts"] = parse_rational_list(flags.get("shifts"), "--shifts", warn)
        if subcommand == "select":
            options["insertions"] = parse_insertions(flags.get("insertions"), warn)
            options["deg_k"] = flags.get("degK") or 0
            k = flags.get("k")
            options["k"] = len(options["insertions"]) if k is None else k
            if options["shifts"] and len(options["shifts"]) != len(options["insertions"]):
                raise SchemaError(
                    "--shifts",
                    f"expected {len(options['insertions'])} shifts, one per insertion, "
                    f"got {len(options['shifts'])}",
                )
        else:
            k = flags.get("k")
            options["k"] = len(options["shifts"]) if k is None else k
        if options["n"] < 0 or options["k"] < 0:
            raise SchemaError("--n/--k", "must be non-negative")
        if options["genus"] is None:
            options["genus"] = 0
        if not options["shifts"]:
            options["shifts"] = [Fraction(0)] * options["k"]

    request.options = options
    return request
