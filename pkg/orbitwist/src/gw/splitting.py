"""
Splitting identities at the level of exact counts, and counts of twisted
boundary conditions on nodal curves by summing over balanced node twistings.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import prod
from typing import List, Optional, Sequence, Tuple

from orbitwist.logger import log_progress
from orbitwist.src.curve.orbicurve import NodalOrbicurve
from orbitwist.src.errors import BudgetExceeded, InvalidMultiplicity, SchemaError
from orbitwist.src.group.conjugacy import conjugacy_table
from orbitwist.src.group.finite_group import FiniteGroup
from orbitwist.src.gw.sectors import sectors_and_pairing
from orbitwist.src.homs.counting import (
    brute_cost,
    count_homs_brute,
    count_homs_convolution,
    gluing_sum,
    surface_function,
)
from orbitwist.src.homs.surface import surface_spec
from orbitwist.src.utils.config_loader import Limits
from orbitwist.src.utils.rationals import as_integer

# Upper bound on balanced twistings summed by nodal_characteristic_count
MAX_NODE_ASSIGNMENTS = 10**6


@dataclass(frozen=True)
class IdentityCheck:
    lhs: Fraction
    rhs: Fraction
    lhs_method: str

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class SplittingReport:
    genus: int
    classes: Tuple[int, ...]
    split: Optional[Tuple[int, int]]  # (g₁, k₁) of the separating degeneration
    separating: Optional[IdentityCheck]  # None when no split has two non-empty sides
    non_separating: Optional[IdentityCheck]  # None in genus 0

    @property
    def holds(self) -> bool:
        return all(
            check.holds for check in (self.separating, self.non_separating) if check is not None
        )


def _direct_count(group: FiniteGroup, genus: int, classes: Sequence[int], limits: Limits):
    spec = surface_spec(genus, classes)
    if brute_cost(group, spec) <= limits.brute_budget:
        return Fraction(count_homs_brute(group, spec, limits)), "brute"
    return Fraction(count_homs_convolution(group, spec)), "convolution"


def default_split(genus: int, k: int) -> Optional[Tuple[int, int]]:
    """A separating split (g₁, k₁) with neither half a bare disc, or None."""
    split = ((genus + 1) // 2, k // 2)
    return split if _is_proper_split(genus, k, split) else None


def _is_proper_split(genus: int, k: int, split: Tuple[int, int]) -> bool:
    g1, k1 = split
    return (g1, k1) != (0, 0) and (genus - g1, k - k1) != (0, 0)


def splitting_identities(
    group: FiniteGroup,
    genus: int,
    classes: Sequence[int],
    split: Optional[Tuple[int, int]] = None,
    limits: Limits = Limits(),
) -> SplittingReport:
    """Both degenerations of N_g(C₁…C_k), the left side counted directly.

    separating:     F_{g,k}(e) = Σ_x F_{g₁,k₁}(x)·F_{g₂,k₂}(x⁻¹)
    non-separating: N_{g}(C…) = Σ_C η(C, I(C))·N_{g−1}(C…, C, I(C))
    """
    classes = tuple(classes)
    table = conjugacy_table(group)
    k = len(classes)
    if split is None:
        split = default_split(genus, k)
    else:
        split = tuple(split)
        g1, k1 = split
        if not (0 <= g1 <= genus and 0 <= k1 <= k):
            raise SchemaError("split", f"({g1}, {k1}) does not fit genus {genus}, k {k}")
        if not _is_proper_split(genus, k, split):
            raise SchemaError("split", f"({g1}, {k1}) leaves one side empty")

    lhs, method = _direct_count(group, genus, classes, limits)
    separating = None
    if split is not None:
        g1, k1 = split
        first = surface_function(group, surface_spec(g1, classes[:k1]))
        second = surface_function(group, surface_spec(genus - g1, classes[k1:]))
        separating = IdentityCheck(lhs=lhs, rhs=gluing_sum(first, second), lhs_method=method)

    non_separating = None
    if genus >= 1:
        _, pairing = sectors_and_pairing(group)
        rhs = Fraction(0)
        for c in range(table.num_classes):
            inverse = table.inverse_class[c]
            rhs += pairing.eta(c, inverse) * count_homs_convolution(
                group, surface_spec(genus - 1, classes + (c, inverse))
            )
        non_separating = IdentityCheck(lhs=lhs, rhs=rhs, lhs_method=method)

    log_progress(f"splitting checks for genus {genus}, classes {list(classes)} done")
    return SplittingReport(
        genus=genus,
        classes=classes,
        split=split,
        separating=separating,
        non_separating=non_separating,
    )


def nodal_characteristic_count(
    group: FiniteGroup,
    nodal: NodalOrbicurve,
    marking_classes: Sequence[int],
    respect_node_orders: bool = True,
) -> int:
    """Σ over balanced node twistings (C on branch_a, I(C) on branch_b) of
    Π_edges |C_G(C_e)| · Π_components N_{g_ν}(…) / |G|^{V−1}."""
    table = conjugacy_table(group)
    marking_classes = tuple(marking_classes)
    if len(marking_classes) != len(nodal.marking_assignment):
        raise SchemaError(
            "classes",
            f"{len(marking_classes)} classes for {len(nodal.marking_assignment)} markings",
        )
    for i, (c, m) in enumerate(zip(marking_classes, nodal.marking_multiplicities())):
        if not 0 <= c < table.num_classes:
            raise SchemaError("classes", f"marking {i}: class {c} does not exist")
        if respect_node_orders and table.element_orders[c] != m:
            raise InvalidMultiplicity(
                f"marking {i}: class {c} has order {table.element_orders[c]}, multiplicity {m}"
            )

    node_options: List[List[int]] = [
        table.classes_of_order(node.multiplicity)
        if respect_node_orders
        else list(range(table.num_classes))
        for node in nodal.nodes
    ]
    assignments = prod(len(o) for o in node_options)
    if assignments > MAX_NODE_ASSIGNMENTS:
        raise BudgetExceeded(f"{assignments} node twistings exceed {MAX_NODE_ASSIGNMENTS}")

    total = Fraction(0)
    for node_classes in product(*node_options):
        slot_class = {}
        for slot, c in zip(nodal.marking_assignment, marking_classes):
            slot_class[slot] = c
        weight = 1
        for node, c in zip(nodal.nodes, node_classes):
            slot_class[node.branch_a] = c
            slot_class[node.branch_b] = table.inverse_class[c]
            weight *= table.centralizer_orders[c]

        term = Fraction(weight)
        for nu, component in enumerate(nodal.components):
            classes = [slot_class[(nu, s)] for s in range(component.num_markings)]
            term *= count_homs_convolution(group, surface_spec(component.genus, classes))
            if not term:
                break
        total += term

    total /= group.order ** (nodal.num_components - 1)
    return as_integer(total, "nodal characteristic count")
