"""
Counting homomorphisms from a punctured surface group into a finite group.

Two independent paths: a literal search over tuples (the oracle) and the
class-function product T^{⋆g} ⋆ 1_{C₁} ⋆ … ⋆ 1_{C_k} evaluated at the identity.
"""

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from math import prod
from typing import List, Optional, Sequence

import numpy as np

from orbitwist.logger import log_progress
from orbitwist.src.errors import BudgetExceeded, InvariantViolation
from orbitwist.src.group.class_functions import (
    ClassFunction,
    convolve,
    delta_identity,
    indicator,
    make_class_function,
)
from orbitwist.src.group.conjugacy import ConjugacyClassTable, conjugacy_table
from orbitwist.src.group.finite_group import FiniteGroup, cached_on_group
from orbitwist.src.homs.surface import (
    SurfaceGroupSpec,
    constraint_classes,
    constraint_elements,
    validate_spec,
)
from orbitwist.src.utils.config_loader import Limits
from orbitwist.src.utils.rationals import as_integer


class _SearchPlan:
    """Free levels of the search (one per handle, one per non-final puncture)
    and the membership mask the last puncture image is checked against."""

    def __init__(self, group: FiniteGroup, spec: SurfaceGroupSpec):
        table = conjugacy_table(group)
        validate_spec(table, spec)
        self.group = group
        commutators = group.commutator_table().ravel()
        self.levels: List[np.ndarray] = [commutators] * spec.genus
        punctures = [constraint_elements(table, c) for c in spec.puncture_constraints]
        self.final_mask: Optional[np.ndarray] = None
        if punctures:
            self.levels.extend(punctures[:-1])
            self.final_mask = np.zeros(group.order, dtype=bool)
            self.final_mask[punctures[-1]] = True
        self.num_handle_levels = spec.genus

    @property
    def cost(self) -> int:
        return prod(len(level) for level in self.levels)

    def closes(self, partials: np.ndarray) -> np.ndarray:
        """Boolean mask: which partial products admit a valid last image."""
        if self.final_mask is None:
            return partials == self.group.identity
        return self.final_mask[self.group.inverses[partials]]


def _count_from(plan: _SearchPlan, partial: int, depth: int) -> int:
    table = plan.group.table
    if depth == len(plan.levels):
        return int(plan.closes(np.asarray([partial]))[0])
    level = plan.levels[depth]
    if depth == len(plan.levels) - 1:
        return int(np.count_nonzero(plan.closes(table[partial, level])))
    return sum(_count_from(plan, int(table[partial, v]), depth + 1) for v in level)


def count_homs_brute(
    group: FiniteGroup, spec: SurfaceGroupSpec, limits: Limits = Limits()
) -> int:
    """Number of tuples (a₁, b₁, …, c_k) with Π[a_i, b_i]·Πc_j = e meeting the
    puncture constraints. The last puncture image is forced by the relation."""
    plan = _SearchPlan(group, spec)
    if plan.cost > limits.brute_budget:
        raise BudgetExceeded(
            f"brute-force search needs {plan.cost} steps, budget is {limits.brute_budget}"
        )
    log_progress(f"brute-force search over {plan.cost} tuples")

    if not plan.levels:
        return _count_from(plan, group.identity, 0)

    first = plan.levels[0]
    starts = [int(group.table[group.identity, v]) for v in first]
    if limits.threads > 1 and len(plan.levels) > 1:
        with ThreadPoolExecutor(max_workers=limits.threads) as pool:
            parts = pool.map(lambda p: _count_from(plan, p, 1), starts)
            return sum(parts)
    return _count_from(plan, group.identity, 0)


@cached_on_group
def commutator_kernel(group: FiniteGroup) -> ClassFunction:
    """T(c) = #{(a, b) : [a, b] = c}, checked against
    Σ_C (|G|/|C|)·(1_C ⋆ 1_{C⁻¹})."""
    table = conjugacy_table(group)
    hits = np.bincount(group.commutator_table().ravel(), minlength=group.order)
    values = []
    for i, members in enumerate(table.classes):
        if len(set(int(hits[x]) for x in members)) != 1:
            raise InvariantViolation(f"commutator count is not constant on class {i}")
        values.append(int(hits[members[0]]))
    kernel = make_class_function(table, values)

    if kernel != handle_sum(table):
        raise InvariantViolation("commutator kernel disagrees with the handle identity")
    return kernel


def handle_sum(table: ConjugacyClassTable) -> ClassFunction:
    """Σ_C (|G|/|C|)·(1_C ⋆ 1_{C⁻¹})"""
    total = make_class_function(table, [0] * table.num_classes)
    for i in range(table.num_classes):
        term = convolve(
            table, indicator(table, [i]), indicator(table, [table.inverse_class[i]])
        )
        total = total + term.scaled(table.centralizer_orders[i])
    return total


def surface_function(group: FiniteGroup, spec: SurfaceGroupSpec) -> ClassFunction:
    """F_{g,k} = T^{⋆g} ⋆ 1_{C₁} ⋆ … ⋆ 1_{C_k}; F(x) counts tuples with product x."""
    table = conjugacy_table(group)
    validate_spec(table, spec)
    result = delta_identity(table)
    if spec.genus:
        kernel = commutator_kernel(group)
        for _ in range(spec.genus):
            result = convolve(table, result, kernel)
    for constraint in spec.puncture_constraints:
        result = convolve(table, result, indicator(table, constraint_classes(table, constraint)))
    return result


def count_homs_convolution(group: FiniteGroup, spec: SurfaceGroupSpec) -> int:
    value = surface_function(group, spec).at_identity()
    return as_integer(value, "convolution count")


def count_homs(
    group: FiniteGroup, spec: SurfaceGroupSpec, limits: Limits = Limits(), check: bool = True
) -> dict:
    """Convolution count, cross-checked against the brute-force oracle when
    the search fits the budget."""
    count = count_homs_convolution(group, spec)
    checked = False
    if check and _SearchPlan(group, spec).cost <= limits.brute_budget:
        oracle = count_homs_brute(group, spec, limits)
        if oracle != count:
            raise InvariantViolation(f"convolution gave {count}, brute force {oracle}")
        checked = True
    return {"count": count, "method": "convolution", "oracle_checked": checked}


def brute_cost(group: FiniteGroup, spec: SurfaceGroupSpec) -> int:
    return _SearchPlan(group, spec).cost


def gluing_sum(first: ClassFunction, second: ClassFunction) -> Fraction:
    """Σ_{x∈G} F₁(x)·F₂(x⁻¹)"""
    table = first.table
    return sum(
        (
            size * first.values[i] * second.values[table.inverse_class[i]]
            for i, size in enumerate(table.sizes)
        ),
        Fraction(0),
    )
