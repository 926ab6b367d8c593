import cmath
import json
from pathlib import Path

import pytest

from orbitwist.src.group import build_group_from_permutations, conjugacy_table, element_order
from orbitwist.src.homs import make_character_table

FIXTURES = Path(__file__).parent / "fixtures"

GENERATORS = {
    "Z2": (2, [[[1, 2]]]),
    "Z3": (3, [[[1, 2, 3]]]),
    "Z4": (4, [[[1, 2, 3, 4]]]),
    "Z2xZ2": (4, [[[1, 2], [3, 4]], [[1, 3], [2, 4]]]),
    "S3": (3, [[[1, 2]], [[1, 2, 3]]]),
    "D4": (4, [[[1, 2, 3, 4]], [[1, 3]]]),
    # left regular representation on 1, i, j, k, -1, -i, -j, -k
    "Q8": (8, [[[1, 2, 5, 6], [3, 4, 7, 8]], [[1, 3, 5, 7], [2, 8, 6, 4]]]),
    "A4": (4, [[[1, 2, 3]], [[2, 3, 4]]]),
    "S4": (4, [[[1, 2]], [[1, 2, 3, 4]]]),
}

SMALL = ["Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4", "Q8"]


@pytest.fixture(scope="session")
def groups():
    return {
        name: build_group_from_permutations(gens, degree)
        for name, (degree, gens) in GENERATORS.items()
    }


@pytest.fixture(scope="session")
def s3(groups):
    return groups["S3"]


@pytest.fixture(scope="session")
def s3_classes(s3):
    """Class indices of S₃ by name: e, T (transpositions), R (3-cycles)."""
    table = conjugacy_table(s3)
    return {
        "e": table.identity_class,
        "T": table.classes_of_order(2)[0],
        "R": table.classes_of_order(3)[0],
    }


def class_by_order_and_size(group, order, size):
    table = conjugacy_table(group)
    for i in range(table.num_classes):
        if table.element_orders[i] == order and table.sizes[i] == size:
            return i
    raise LookupError(f"no class of order {order} and size {size}")


def s3_character_table(group):
    e = class_by_order_and_size(group, 1, 1)
    t = class_by_order_and_size(group, 2, 3)
    r = class_by_order_and_size(group, 3, 2)
    return make_character_table(
        conjugacy_table(group),
        [e, t, r],
        [[1, 1, 1], [1, -1, 1], [2, 0, -1]],
    )


def s4_character_table(group):
    columns = [
        class_by_order_and_size(group, 1, 1),
        class_by_order_and_size(group, 2, 6),  # transpositions
        class_by_order_and_size(group, 2, 3),  # double transpositions
        class_by_order_and_size(group, 3, 8),
        class_by_order_and_size(group, 4, 6),
    ]
    rows = [
        [1, 1, 1, 1, 1],
        [1, -1, 1, 1, -1],
        [3, 1, -1, 0, -1],
        [3, -1, -1, 0, 1],
        [2, 0, 2, -1, 0],
    ]
    return make_character_table(conjugacy_table(group), columns, rows)


def cyclic_character_table(group):
    n = group.order
    generator = next(x for x in range(n) if element_order(group, x) == n)
    power = {}
    x = group.identity
    for a in range(n):
        power[x] = a
        x = group.mul(x, generator)
    table = conjugacy_table(group)
    exponents = [power[table.representative(i)] for i in range(table.num_classes)]
    rows = [[cmath.exp(2j * cmath.pi * j * a / n) for a in exponents] for j in range(n)]
    return make_character_table(table, list(range(table.num_classes)), rows)


@pytest.fixture
def write_json(tmp_path):
    def write(name, payload):
        path = tmp_path / name
        path.write_text(json.dumps(payload), encoding="utf-8")
        return path

    return write
