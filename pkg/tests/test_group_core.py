import gc
import weakref
from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from orbitwist.src.errors import DimensionMismatch, NotAGroup, OrderCapExceeded
from orbitwist.src.group import (
    brute_convolve,
    build_group_from_permutations,
    build_group_from_table,
    conjugacy_table,
    convolve,
    delta_identity,
    element_order,
    indicator,
    make_class_function,
    structure_constants,
)
from orbitwist.src.homs import commutator_kernel

from conftest import GENERATORS


def test_z2_table():
    group = build_group_from_table(2, [[0, 1], [1, 0]])
    assert group.order == 2
    assert group.identity == 0
    assert group.inverses.tolist() == [0, 1]


def test_s3_table_input_matches_brute_force_inverses(s3):
    group = build_group_from_table(6, s3.table.tolist())
    assert group.order == 6
    for x in range(6):
        expected = [y for y in range(6) if s3.mul(x, y) == s3.identity]
        assert group.inv(x) == expected[0]
    fixed = [x for x in range(6) if group.inv(x) == x]
    assert len(fixed) == 4  # identity and the three transpositions


def test_repeated_row_has_no_inverse():
    with pytest.raises(NotAGroup, match="no inverse for element 1"):
        build_group_from_table(2, [[0, 1], [0, 1]])


def test_non_associative_loop_is_rejected():
    loop = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(NotAGroup, match="not associative"):
        build_group_from_table(5, loop)


def test_table_entry_out_of_range():
    with pytest.raises(NotAGroup, match="out of range"):
        build_group_from_table(2, [[0, 1], [1, 2]])


def test_permutation_closure_orders(groups):
    assert build_group_from_permutations([[[1, 2]]], 2).order == 2
    assert groups["S3"].order == 6
    klein = groups["Z2xZ2"]
    assert klein.order == 4
    assert all(klein.inv(x) == x for x in range(4))
    expected = {"Z4": 4, "D4": 8, "Q8": 8, "A4": 12, "S4": 24}
    for name, order in expected.items():
        assert groups[name].order == order


def test_permutation_closure_is_deterministic():
    degree, gens = GENERATORS["S4"]
    first = build_group_from_permutations(gens, degree)
    second = build_group_from_permutations(gens, degree)
    assert np.array_equal(first.table, second.table)
    assert first.identity == 0


def test_order_cap():
    degree, gens = GENERATORS["S4"]
    with pytest.raises(OrderCapExceeded):
        build_group_from_permutations(gens, degree, order_cap=10)


def test_cycle_points_must_fit_degree():
    with pytest.raises(NotAGroup):
        build_group_from_permutations([[[1, 5]]], 3)


def test_trivial_group():
    group = build_group_from_permutations([], 1)
    assert group.order == 1
    assert conjugacy_table(group).num_classes == 1


@pytest.mark.parametrize("name", list(GENERATORS))
def test_associativity_holds(groups, name):
    t = groups[name].table
    n = t.shape[0]
    idx = np.arange(n)
    left = t[t[:, :, None], idx[None, None, :]]
    right = t[idx[:, None, None], t[None, :, :]]
    assert np.array_equal(left, right)


def test_s3_conjugacy(s3):
    table = conjugacy_table(s3)
    assert table.sizes == (1, 2, 3)
    assert table.centralizer_orders == (6, 3, 2)
    assert table.element_orders == (1, 3, 2)
    assert table.classes[0] == (s3.identity,)
    # brute-force conjugation orbits
    for members in table.classes:
        orbit = {s3.conjugate(g, members[0]) for g in range(6)}
        assert orbit == set(members)


@pytest.mark.parametrize("name", ["Z2", "Z3", "Z4", "Z2xZ2"])
def test_abelian_groups_have_singleton_classes(groups, name):
    table = conjugacy_table(groups[name])
    assert table.num_classes == groups[name].order
    assert set(table.sizes) == {1}


def test_q8_class_sizes(groups):
    assert conjugacy_table(groups["Q8"]).sizes == (1, 1, 2, 2, 2)


@pytest.mark.parametrize("name", list(GENERATORS))
def test_class_table_invariants(groups, name):
    group = groups[name]
    table = conjugacy_table(group)
    elements = sorted(x for c in table.classes for x in c)
    assert elements == list(range(group.order))
    for i, members in enumerate(table.classes):
        assert len(members) * table.centralizer_orders[i] == group.order
        assert list(members) == sorted(members)
        assert table.inverse_class[table.inverse_class[i]] == i
    assert table.inverse_class[table.identity_class] == table.identity_class
    keys = [(len(c), c[0]) for c in table.classes]
    assert keys == sorted(keys)


def test_element_orders(s3, s3_classes):
    table = conjugacy_table(s3)
    assert element_order(s3, s3.identity) == 1
    assert element_order(s3, table.representative(s3_classes["T"])) == 2
    assert element_order(s3, table.representative(s3_classes["R"])) == 3
    for name_order in range(s3.order):
        assert s3.order % element_order(s3, name_order) == 0


def test_delta_is_convolution_identity(s3):
    table = conjugacy_table(s3)
    f = make_class_function(table, [Fraction(1, 2), 3, -7])
    assert convolve(table, delta_identity(table), f) == f
    assert convolve(table, f, delta_identity(table)) == f


def test_transposition_square(s3, s3_classes):
    table = conjugacy_table(s3)
    ind_t = indicator(table, [s3_classes["T"]])
    square = convolve(table, ind_t, ind_t)
    assert square.at_class(s3_classes["e"]) == 3
    assert square.at_class(s3_classes["R"]) == 3
    assert square.at_class(s3_classes["T"]) == 0


@pytest.mark.parametrize("name", list(GENERATORS))
def test_convolution_matches_brute_force(groups, name):
    table = conjugacy_table(groups[name])
    r = table.num_classes
    for i, j in product(range(r), repeat=2):
        f, g = indicator(table, [i]), indicator(table, [j])
        assert convolve(table, f, g) == brute_convolve(table, f, g)


@pytest.mark.parametrize("name", list(GENERATORS))
def test_convolution_commutative_associative_and_mass(groups, name):
    table = conjugacy_table(groups[name])
    r = table.num_classes
    ind = [indicator(table, [i]) for i in range(r)]
    for i, j in product(range(r), repeat=2):
        ij = convolve(table, ind[i], ind[j])
        assert ij == convolve(table, ind[j], ind[i])
        assert ij.total_mass() == table.sizes[i] * table.sizes[j]
        for k in range(r):
            assert convolve(table, ij, ind[k]) == convolve(
                table, ind[i], convolve(table, ind[j], ind[k])
            )


def test_convolve_rejects_foreign_class_functions(groups):
    a = conjugacy_table(groups["S3"])
    b = conjugacy_table(groups["Z3"])
    with pytest.raises(DimensionMismatch):
        convolve(a, delta_identity(a), delta_identity(b))
    with pytest.raises(DimensionMismatch):
        make_class_function(a, [1, 2])


def test_derived_tables_live_on_the_group():
    group = build_group_from_permutations([[[1, 2, 3]]], 3)
    table = conjugacy_table(group)
    assert conjugacy_table(group) is table
    assert structure_constants(table) is structure_constants(conjugacy_table(group))
    assert commutator_kernel(group) is commutator_kernel(group)
    assert len(group.derived) == 3

    other = build_group_from_permutations([[[1, 2, 3]]], 3)
    assert other.derived == {}
    assert conjugacy_table(other) is not table


def _table_of_temporary_group():
    group = build_group_from_permutations([[[1, 2], [3, 4]], [[1, 3], [2, 4]]], 4)
    commutator_kernel(group)
    return weakref.ref(conjugacy_table(group))


def test_derived_tables_are_released_with_the_group():
    table_ref = _table_of_temporary_group()
    gc.collect()
    assert table_ref() is None
