import random
from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from orbitwist.src.curve import (
    Node,
    arithmetic_genus,
    make_marked_orbicurve,
    make_nodal_orbicurve,
    nodal_from_marked,
)
from orbitwist.src.errors import ArityMismatch, InvalidMultiplicity, SchemaError
from orbitwist.src.group import build_group_from_permutations, conjugacy_table
from orbitwist.src.gw import (
    DimensionInput,
    Insertion,
    SelectionInput,
    check_associativity,
    expected_total_degree,
    insertion_degree,
    make_dimension_input,
    nodal_characteristic_count,
    product_table,
    sector_degrees,
    sectors_and_pairing,
    selection_rule,
    splitting_identities,
    three_point_count,
    virtual_dimension,
)
from orbitwist.src.bundle import rep_from_permutation_action
from orbitwist.src.homs import count_homs_convolution, surface_function, surface_spec
from orbitwist.src.gw.splitting import default_split
from orbitwist.src.utils.config_loader import Limits

from conftest import GENERATORS


def test_s3_sectors(s3, s3_classes):
    sectors, pairing = sectors_and_pairing(s3)
    assert len(sectors) == 3
    for sector in sectors:
        assert sector.inverse == sector.index
    assert pairing.eta(s3_classes["e"], s3_classes["e"]) == 6
    assert pairing.eta(s3_classes["T"], s3_classes["T"]) == 2
    assert pairing.eta(s3_classes["R"], s3_classes["R"]) == 3
    assert pairing.eta(s3_classes["T"], s3_classes["R"]) == 0


def test_z3_sectors(groups):
    z3 = groups["Z3"]
    table = conjugacy_table(z3)
    sectors, pairing = sectors_and_pairing(z3)
    nontrivial = [s.index for s in sectors if s.index != table.identity_class]
    a, b = nontrivial
    assert sectors[a].inverse == b
    assert pairing.eta(a, b) == 3
    assert pairing.eta(a, a) == 0


def test_trivial_group_sector():
    trivial = build_group_from_permutations([], 1)
    sectors, pairing = sectors_and_pairing(trivial)
    assert len(sectors) == 1
    assert pairing.eta(0, 0) == 1
    assert three_point_count(trivial, 0, 0, 0) == 1
    assert check_associativity(trivial).associative
    report = splitting_identities(trivial, 2, [])
    assert report.holds
    assert report.separating.lhs == 1


def test_three_point_counts(groups, s3, s3_classes):
    e, t, r = s3_classes["e"], s3_classes["T"], s3_classes["R"]
    assert three_point_count(s3, t, t, r) == 6
    assert three_point_count(s3, r, r, r) == 2
    for group in groups.values():
        i = conjugacy_table(group).identity_class
        assert three_point_count(group, i, i, i) == 1


@pytest.mark.parametrize("name", list(GENERATORS))
def test_three_point_symmetries(groups, name):
    group = groups[name]
    table = conjugacy_table(group)
    inv = table.inverse_class
    for a, b, c in product(range(table.num_classes), repeat=3):
        n = three_point_count(group, a, b, c)
        assert n == three_point_count(group, b, c, a)
        assert n == three_point_count(group, inv[c], inv[b], inv[a])


def test_s3_product_table(s3, s3_classes):
    e, t, r = s3_classes["e"], s3_classes["T"], s3_classes["R"]
    coefficients = product_table(s3)
    tt = [coefficients.coefficient(t, t, k) for k in range(3)]
    assert tt[e] == 3 and tt[r] == 3 and tt[t] == 0
    rr = [coefficients.coefficient(r, r, k) for k in range(3)]
    assert rr[e] == 2 and rr[r] == 1 and rr[t] == 0


@pytest.mark.parametrize("name", list(GENERATORS))
def test_product_table_properties(groups, name):
    group = groups[name]
    table = conjugacy_table(group)
    a = product_table(group).coefficients
    sizes = np.asarray(table.sizes)
    assert (a >= 0).all()
    e = table.identity_class
    assert np.array_equal(a[e], np.eye(table.num_classes, dtype=a.dtype))
    for i, j in product(range(table.num_classes), repeat=2):
        assert int(a[i, j] @ sizes) == table.sizes[i] * table.sizes[j]


@pytest.mark.parametrize("name", list(GENERATORS))
def test_associativity(groups, name):
    report = check_associativity(groups[name])
    assert report.associative
    assert report.counterexample is None


def test_s3_splitting(s3, s3_classes):
    report = splitting_identities(s3, 1, [s3_classes["R"]])
    assert report.separating.lhs == 18
    assert report.non_separating.lhs == 18
    assert report.non_separating.rhs == 18
    assert report.holds
    # 18 = |C(T)|·N₀(T, T, R) + |C(R)|·N₀(R, R, R)
    t, r = s3_classes["T"], s3_classes["R"]
    assert 2 * three_point_count(s3, r, t, t) + 3 * three_point_count(s3, r, r, r) == 18


def test_handle_count_from_classes(groups):
    for group in groups.values():
        table = conjugacy_table(group)
        report = splitting_identities(group, 1, [], limits=Limits(brute_budget=10**5))
        assert report.non_separating.rhs == group.order * table.num_classes
        assert report.holds


@pytest.mark.parametrize("name", list(GENERATORS))
def test_splitting_identities_hold(groups, name):
    group = groups[name]
    r = conjugacy_table(group).num_classes
    limits = Limits(brute_budget=10**4)
    for genus in range(3):
        for k in range(4):
            for classes in product(range(r), repeat=k):
                report = splitting_identities(group, genus, classes, limits=limits)
                assert report.holds, (genus, classes)
                assert (report.non_separating is None) == (genus == 0)
                assert (report.separating is None) == ((genus, k) in {(0, 0), (0, 1), (1, 0)})


@pytest.mark.parametrize(
    "genus, k, expected",
    [(0, 0, None), (0, 1, None), (1, 0, None), (0, 2, (0, 1)), (0, 3, (0, 1)),
     (1, 1, (1, 0)), (1, 3, (1, 1)), (2, 0, (1, 0)), (3, 2, (2, 1))],
)
def test_default_split_has_two_sides(genus, k, expected):
    assert default_split(genus, k) == expected


def test_separating_check_is_not_a_restatement(s3, s3_classes):
    r = s3_classes["R"]
    report = splitting_identities(s3, 1, [r])
    assert report.split == (1, 0)
    # Σ_x T(x)·1_R(x⁻¹) = |R|·T(R)
    kernel = surface_function(s3, surface_spec(1))
    assert report.separating.rhs == kernel.at_class(r) * conjugacy_table(s3).sizes[r] == 18
    with pytest.raises(SchemaError, match="empty"):
        splitting_identities(s3, 1, [r], split=(0, 0))
    with pytest.raises(SchemaError, match="empty"):
        splitting_identities(s3, 1, [r], split=(1, 1))


def test_splitting_with_explicit_split(s3, s3_classes):
    classes = [s3_classes["T"], s3_classes["T"], s3_classes["R"]]
    report = splitting_identities(s3, 2, classes, split=(1, 2), limits=Limits(brute_budget=100))
    assert report.split == (1, 2)
    assert report.holds
    assert report.separating.lhs_method == "convolution"
    with pytest.raises(SchemaError):
        splitting_identities(s3, 1, classes, split=(2, 0))


def test_sector_degrees(s3, s3_classes):
    degrees = sector_degrees(s3, rep_from_permutation_action(s3))
    assert degrees[s3_classes["e"]] == 0
    assert degrees[s3_classes["T"]] == 1
    assert degrees[s3_classes["R"]] == 2


def test_virtual_dimension_examples():
    assert virtual_dimension(make_dimension_input(0, 0, 0, [0, 0, 0])).d == 0
    for n in range(5):
        result = virtual_dimension(make_dimension_input(Fraction(7, 2), n, 1))
        assert result.d == Fraction(7, 2)
        assert result.two_d == 7
    assert virtual_dimension(make_dimension_input(0, 3, 0, [1, 1, 1])).d == 0


@pytest.mark.parametrize(
    "chern, n, genus, k, expected",
    [
        (0, 0, 0, 3, 0),
        (0, 0, 0, 4, 1),
        (0, 0, 1, 1, 1),
        (0, 0, 2, 0, 3),
        (0, 0, 3, 0, 6),
        (0, 1, 0, 3, 1),
        (0, 1, 2, 0, 2),
        (0, 2, 1, 2, 2),
        (0, 3, 0, 0, 0),
        (0, 3, 5, 1, 1),
        (2, 1, 0, 0, 0),
        (3, 2, 0, 0, 2),
        (4, 2, 0, 1, 4),
        (3, 3, 0, 0, 3),
        (4, 3, 0, 0, 4),
        (2, 3, 1, 0, 2),
        (1, 3, 1, 2, 3),
        (5, 5, 0, 2, 9),
        (6, 4, 2, 1, 6),
        (0, 4, 3, 3, 1),
    ],
)
def test_classical_dimension(chern, n, genus, k, expected):
    result = virtual_dimension(make_dimension_input(chern, n, genus, [0] * k))
    assert result.d == expected


def test_dimension_input_validation():
    with pytest.raises(ArityMismatch):
        DimensionInput(Fraction(0), 0, 0, 2, (Fraction(0),))
    with pytest.raises(SchemaError):
        make_dimension_input(0, 0, 0, [-1])
    with pytest.raises(SchemaError):
        make_dimension_input(0, 0, -1, [])


def test_selection_examples():
    point = make_dimension_input(0, 0, 0, [0, 0, 0])
    zeros = SelectionInput(0, tuple(Insertion(Fraction(0)) for _ in range(3)))
    assert selection_rule(zeros, point)
    shifted = SelectionInput(0, (Insertion(Fraction(2)), Insertion(Fraction(0)), Insertion(Fraction(0))))
    assert not selection_rule(shifted, point)

    line = make_dimension_input(0, 1, 0, [0, 0, 0])
    two = SelectionInput(
        0, (Insertion(Fraction(1)), Insertion(Fraction(1, 2)), Insertion(Fraction(1, 2)))
    )
    assert selection_rule(two, line)

    with pytest.raises(ArityMismatch):
        selection_rule(SelectionInput(0, ()), point)


def test_selection_agrees_with_dimension():
    rng = random.Random(7)
    for _ in range(1000):
        k = rng.randint(0, 5)
        shifts = [Fraction(rng.randint(0, 6), rng.randint(1, 4)) for _ in range(k)]
        data = make_dimension_input(
            Fraction(rng.randint(-6, 6), rng.randint(1, 3)),
            rng.randint(0, 5),
            rng.randint(0, 3),
            shifts,
        )
        insertions = tuple(
            Insertion(Fraction(rng.randint(0, 8), rng.randint(1, 2)), rng.randint(0, 2))
            for _ in range(k)
        )
        selection = SelectionInput(rng.randint(0, 6), insertions)
        two_d = virtual_dimension(data).two_d
        shifted_total = insertion_degree(selection) - 2 * sum(shifts, Fraction(0))
        assert selection_rule(selection, data) == (shifted_total == two_d)
        assert expected_total_degree(data) == two_d + 2 * sum(shifts, Fraction(0))


def test_divisor_axiom_vacuous_for_point_target():
    # point target: the chern pairing vanishes and degree counting alone decides
    data = make_dimension_input(0, 0, 0, [0, 0, 0, 0])
    divisor = SelectionInput(0, tuple(Insertion(Fraction(d)) for d in (2, 0, 0, 0)))
    assert virtual_dimension(data).d == 1
    assert selection_rule(divisor, data)


def test_nodal_count_matches_smooth_count(groups, s3, s3_classes):
    e, t, r = s3_classes["e"], s3_classes["T"], s3_classes["R"]
    left = make_marked_orbicurve(0, [1, 1, 1])
    right = make_marked_orbicurve(0, [1, 1, 1])
    nodal = make_nodal_orbicurve([left, right], [Node((0, 2), (1, 0), 1)])
    classes = [t, t, r, e]
    count = nodal_characteristic_count(s3, nodal, classes, respect_node_orders=False)
    assert count == count_homs_convolution(s3, surface_spec(0, classes))

    sphere = make_marked_orbicurve(0, [1, 1, 1, 1])
    loop = make_nodal_orbicurve([sphere], [Node((0, 2), (0, 3), 1)])
    assert arithmetic_genus(loop) == 1
    count = nodal_characteristic_count(s3, loop, [r, r], respect_node_orders=False)
    assert count == count_homs_convolution(s3, surface_spec(1, [r, r]))


def test_nodal_count_respects_node_orders(s3, s3_classes):
    t, r = s3_classes["T"], s3_classes["R"]
    left = make_marked_orbicurve(0, [2, 2, 3])
    right = make_marked_orbicurve(0, [3, 2, 2])
    nodal = make_nodal_orbicurve([left, right], [Node((0, 2), (1, 0), 3)])
    # only the R sector twists a node of order 3: |C(R)|·N₀(T,T,R)² / |G|
    expected = 3 * 6 * 6 // 6
    assert nodal_characteristic_count(s3, nodal, [t, t, t, t]) == expected

    smooth = nodal_from_marked(make_marked_orbicurve(0, [2, 2, 3]))
    with pytest.raises(InvalidMultiplicity):
        nodal_characteristic_count(s3, smooth, [t, t, t])
    with pytest.raises(SchemaError):
        nodal_characteristic_count(s3, smooth, [t, t])
