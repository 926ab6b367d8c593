from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Tuple

from orbitwist.src.errors import ArityMismatch, SchemaError


@dataclass(frozen=True)
class DimensionInput:
    chern_pairing: Fraction  # c₁(TX)·A
    complex_dim: int
    genus: int
    num_marked: int
    shifts: Tuple[Fraction, ...] = field(default=())

    def __post_init__(self):
        if len(self.shifts) != self.num_marked:
            raise ArityMismatch(
                f"{len(self.shifts)} degree shifting numbers for {self.num_marked} markings"
            )
        if any(s < 0 for s in self.shifts):
            raise SchemaError("shifts", "degree shifting numbers must be non-negative")
        if self.genus < 0 or self.complex_dim < 0 or self.num_marked < 0:
            raise SchemaError("dimension", "genus, n and k must be non-negative")


@dataclass(frozen=True)
class Insertion:
    orbifold_degree: Fraction
    descendant_power: int = 0


@dataclass(frozen=True)
class SelectionInput:
    deg_k: int  # degree of the class pulled back from Deligne–Mumford space
    insertions: Tuple[Insertion, ...] = ()

    def __post_init__(self):
        for i, insertion in enumerate(self.insertions):
            if insertion.orbifold_degree < 0:
                raise SchemaError("insertions", f"insertion {i}: negative orbifold degree")
            if insertion.descendant_power < 0:
                raise SchemaError("insertions", f"insertion {i}: negative descendant power")


@dataclass(frozen=True)
class DimensionResult:
    d: Fraction
    two_d: Fraction


def make_dimension_input(
    chern_pairing, complex_dim: int, genus: int, shifts: Sequence = ()
) -> DimensionInput:
    shifts = tuple(Fraction(s) for s in shifts)
    return DimensionInput(Fraction(chern_pairing), complex_dim, genus, len(shifts), shifts)


def virtual_dimension(data: DimensionInput) -> DimensionResult:
    """d = c₁(TX)·A + (n − 3)(1 − g) + k − ι(x)"""
    d = (
        data.chern_pairing
        + (data.complex_dim - 3) * (1 - data.genus)
        + data.num_marked
        - sum(data.shifts, Fraction(0))
    )
    return DimensionResult(d=d, two_d=2 * d)


def expected_total_degree(data: DimensionInput) -> Fraction:
    """2c₁(A) + 2(n − 3)(1 − g) + 2k"""
    return (
        2 * data.chern_pairing
        + 2 * (data.complex_dim - 3) * (1 - data.genus)
        + 2 * data.num_marked
    )


def insertion_degree(selection: SelectionInput) -> Fraction:
    """deg K + Σ_i (deg_orb(α_i) + 2·l_i)"""
    return selection.deg_k + sum(
        (i.orbifold_degree + 2 * i.descendant_power for i in selection.insertions),
        Fraction(0),
    )


def selection_rule(selection: SelectionInput, data: DimensionInput) -> bool:
    """True when the invariant is allowed to be nonzero by degree count."""
    if len(selection.insertions) != data.num_marked:
        raise ArityMismatch(
            f"{len(selection.insertions)} insertions for {data.num_marked} markings"
        )
    return insertion_degree(selection) == expected_total_degree(data)
