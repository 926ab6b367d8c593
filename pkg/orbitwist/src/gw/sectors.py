"""
Sector bookkeeping for a point quotient [pt/G]: sectors are conjugacy
classes, the pairing joins a sector with its inverse, and the degree-zero
sector product is multiplication of class sums.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from orbitwist.src.bundle.representation import LinearRepData, class_degree_shifting
from orbitwist.src.errors import InvariantViolation
from orbitwist.src.group.class_functions import structure_constants
from orbitwist.src.group.conjugacy import conjugacy_table
from orbitwist.src.group.finite_group import FiniteGroup
from orbitwist.src.homs.counting import count_homs_convolution
from orbitwist.src.homs.surface import surface_spec


@dataclass(frozen=True)
class Sector:
    index: int
    size: int
    centralizer_order: int
    element_order: int
    inverse: int


@dataclass(frozen=True)
class SectorPairing:
    """η(C_a, C_b) = |C_G(C_a)| when C_b = I(C_a), else 0."""

    matrix: Tuple[Tuple[int, ...], ...]

    def eta(self, a: int, b: int) -> int:
        return self.matrix[a][b]


def sectors_and_pairing(group: FiniteGroup) -> Tuple[List[Sector], SectorPairing]:
    table = conjugacy_table(group)
    r = table.num_classes
    sectors = [
        Sector(
            index=i,
            size=table.sizes[i],
            centralizer_order=table.centralizer_orders[i],
            element_order=table.element_orders[i],
            inverse=table.inverse_class[i],
        )
        for i in range(r)
    ]
    matrix = tuple(
        tuple(
            table.centralizer_orders[a] if b == table.inverse_class[a] else 0
            for b in range(r)
        )
        for a in range(r)
    )
    return sectors, SectorPairing(matrix)


def three_point_count(group: FiniteGroup, c1: int, c2: int, c3: int) -> int:
    """N₀(C₁, C₂, C₃) = #{(x, y, z) ∈ C₁×C₂×C₃ : xyz = e}"""
    return count_homs_convolution(group, surface_spec(0, [c1, c2, c3]))


@dataclass(frozen=True, eq=False)
class ProductTable:
    """K_{C_i}·K_{C_j} = Σ_k coefficients[i, j, k]·K_{C_k}"""

    coefficients: np.ndarray

    def coefficient(self, i: int, j: int, k: int) -> int:
        return int(self.coefficients[i, j, k])

    def to_nested(self) -> List[List[List[int]]]:
        return self.coefficients.tolist()


def product_table(group: FiniteGroup) -> ProductTable:
    """a_ijk = N₀(C_i, C_j, I(C_k)) / |C_k|, cross-checked against the class
    multiplication coefficients."""
    table = conjugacy_table(group)
    r = table.num_classes
    coefficients = np.zeros((r, r, r), dtype=np.int64)
    for i in range(r):
        for j in range(r):
            for k in range(r):
                n0 = three_point_count(group, i, j, table.inverse_class[k])
                a, remainder = divmod(n0, table.sizes[k])
                if remainder:
                    raise InvariantViolation(
                        f"N₀({i}, {j}, I({k})) = {n0} is not divisible by |C_{k}|"
                    )
                coefficients[i, j, k] = a
    if not np.array_equal(coefficients, structure_constants(table)):
        raise InvariantViolation("three-point counts disagree with class multiplication")
    coefficients.flags.writeable = False
    return ProductTable(coefficients)


@dataclass(frozen=True)
class AssociativityReport:
    associative: bool
    counterexample: Optional[Tuple[int, int, int]] = None


def check_associativity(group: FiniteGroup) -> AssociativityReport:
    """(K_a·K_b)·K_c = K_a·(K_b·K_c) for all class triples, exactly."""
    a = product_table(group).coefficients
    r = a.shape[0]
    for x in range(r):
        for y in range(r):
            for z in range(r):
                # (K_x K_y) K_z = Σ_m a[x,y,m] a[m,z,:]
                left = a[x, y] @ a[:, z, :]
                # K_x (K_y K_z) = Σ_m a[y,z,m] a[x,m,:]
                right = a[y, z] @ a[x, :, :]
                if not np.array_equal(left, right):
                    return AssociativityReport(False, (x, y, z))
    return AssociativityReport(True)


def sector_degrees(group: FiniteGroup, rep: LinearRepData) -> List[Fraction]:
    """Orbifold degree 2·ι_(C) of each sector of [C^n/G]."""
    return [2 * shift for shift in class_degree_shifting(rep, conjugacy_table(group))]
