"""
Class functions on a finite group and their convolution.

A class function is stored by its value on each conjugacy class. Convolution
goes through the class multiplication coefficients a[i, j, k], the number of
pairs (x, y) in C_i × C_j with x·y equal to a fixed element of C_k, so the
hot loop never touches individual group elements.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

import numpy as np

from orbitwist.src.errors import DimensionMismatch, InvariantViolation
from orbitwist.src.group.conjugacy import ConjugacyClassTable, conjugacy_table
from orbitwist.src.group.finite_group import FiniteGroup, cached_on_group


@dataclass(frozen=True)
class ClassFunction:
    table: ConjugacyClassTable
    values: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != self.table.num_classes:
            raise DimensionMismatch(
                f"{len(self.values)} values for {self.table.num_classes} classes"
            )

    def at_class(self, class_index: int) -> Fraction:
        return self.values[class_index]

    def at(self, element: int) -> Fraction:
        return self.values[int(self.table.class_of[element])]

    def at_identity(self) -> Fraction:
        return self.values[self.table.identity_class]

    def scaled(self, factor) -> "ClassFunction":
        return ClassFunction(self.table, tuple(v * factor for v in self.values))

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        _check_same_table(self, other)
        return ClassFunction(
            self.table, tuple(a + b for a, b in zip(self.values, other.values))
        )

    def total_mass(self) -> Fraction:
        """Sum of the function over all group elements."""
        return sum(
            (v * size for v, size in zip(self.values, self.table.sizes)), Fraction(0)
        )


def make_class_function(table: ConjugacyClassTable, values: Iterable) -> ClassFunction:
    return ClassFunction(table, tuple(Fraction(v) for v in values))


def indicator(table: ConjugacyClassTable, class_indices: Iterable[int]) -> ClassFunction:
    """Indicator function of a union of conjugacy classes."""
    chosen = set(class_indices)
    return ClassFunction(
        table,
        tuple(Fraction(1 if i in chosen else 0) for i in range(table.num_classes)),
    )


def delta_identity(table: ConjugacyClassTable) -> ClassFunction:
    return indicator(table, [table.identity_class])


def structure_constants(table: ConjugacyClassTable) -> np.ndarray:
    """a[i, j, k] with C_i · C_j = Σ_k a[i, j, k] C_k as multisets."""
    return _class_products(table.group)


@cached_on_group
def _class_products(group: FiniteGroup) -> np.ndarray:
    table = conjugacy_table(group)
    r = table.num_classes
    sizes = np.asarray(table.sizes, dtype=np.int64)
    coefficients = np.zeros((r, r, r), dtype=np.int64)
    for i, ci in enumerate(table.classes):
        for j, cj in enumerate(table.classes):
            products = group.table[np.ix_(ci, cj)].ravel()
            hits = np.bincount(table.class_of[products], minlength=r)
            if np.any(hits % sizes):
                raise InvariantViolation(
                    f"class product C_{i}·C_{j} is not a union of whole classes"
                )
            coefficients[i, j] = hits // sizes
    coefficients.flags.writeable = False
    return coefficients


def _check_same_table(f: ClassFunction, g: ClassFunction) -> None:
    if f.table is not g.table:
        raise DimensionMismatch("class functions belong to different class tables")
    if len(f.values) != len(g.values):
        raise DimensionMismatch(f"lengths {len(f.values)} and {len(g.values)} differ")


def convolve(
    table: ConjugacyClassTable, f: ClassFunction, g: ClassFunction
) -> ClassFunction:
    """h(z) = Σ_{x·y=z} f(x) g(y), exactly."""
    if f.table is not table or g.table is not table:
        raise DimensionMismatch("class functions belong to a different class table")
    _check_same_table(f, g)

    a = structure_constants(table)
    r = table.num_classes
    pairs = [
        (i, j, f.values[i] * g.values[j])
        for i in range(r)
        if f.values[i]
        for j in range(r)
        if g.values[j]
    ]
    values = []
    for k in range(r):
        values.append(sum((w * int(a[i, j, k]) for i, j, w in pairs), Fraction(0)))
    return ClassFunction(table, tuple(values))


def convolve_all(
    table: ConjugacyClassTable, functions: Sequence[ClassFunction]
) -> ClassFunction:
    result = delta_identity(table)
    for f in functions:
        result = convolve(table, result, f)
    return result


def brute_convolve(
    table: ConjugacyClassTable, f: ClassFunction, g: ClassFunction
) -> ClassFunction:
    """Element-level double loop over G × G; the reference for ``convolve``."""
    group = table.group
    totals = [Fraction(0)] * group.order
    for x in range(group.order):
        fx = f.at(x)
        if not fx:
            continue
        for y in range(group.order):
            gy = g.at(y)
            if gy:
                totals[group.mul(x, y)] += fx * gy
    return ClassFunction(table, tuple(totals[c[0]] for c in table.classes))
