"""
Exact eigenvalue data of a linear action of a finite group.

An element g of order m acting on C^n is recorded by n exponents a_j/m in
[0, 1), the eigenvalues being e^{2πi·a_j/m}. Nothing here is floating point.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, NamedTuple, Sequence, Tuple

from orbitwist.src.errors import InvalidRepData, MissingRepData
from orbitwist.src.group.conjugacy import ConjugacyClassTable
from orbitwist.src.group.finite_group import FiniteGroup, cycle_type, element_order


class Exponent(NamedTuple):
    numerator: int
    modulus: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.modulus)

    def __str__(self) -> str:
        return f"{self.numerator}/{self.modulus}"


@dataclass(frozen=True, eq=False)
class LinearRepData:
    group: FiniteGroup
    rank: int
    exponents: Mapping[int, Tuple[Fraction, ...]]  # element -> sorted exponents


def _complement(values: Sequence[Fraction]) -> List[Fraction]:
    return sorted((1 - v) % 1 for v in values)


def make_linear_rep(
    group: FiniteGroup, rank: int, exponents: Mapping[int, Sequence[Fraction]]
) -> LinearRepData:
    """Validate per-element exponent data.

    Checks range, denominators against element orders, the identity acting
    trivially, and complementarity between g and g⁻¹ when both are given.
    """
    if rank < 1:
        raise InvalidRepData(f"rank must be positive, got {rank}")
    cleaned: Dict[int, Tuple[Fraction, ...]] = {}
    for element, values in exponents.items():
        if not 0 <= element < group.order:
            raise InvalidRepData(f"element {element} is not in the group")
        values = [Fraction(v) for v in values]
        if len(values) != rank:
            raise InvalidRepData(f"element {element}: {len(values)} exponents, rank {rank}")
        m = element_order(group, element)
        for v in values:
            if not 0 <= v < 1:
                raise InvalidRepData(f"element {element}: exponent {v} outside [0, 1)")
            if m % v.denominator:
                raise InvalidRepData(
                    f"element {element}: exponent {v} does not match element order {m}"
                )
        cleaned[element] = tuple(sorted(values))

    identity_values = cleaned.get(group.identity)
    if identity_values is not None and any(identity_values):
        raise InvalidRepData("identity must act trivially")

    for element, values in cleaned.items():
        inverse = group.inv(element)
        if inverse in cleaned and list(cleaned[inverse]) != _complement(values):
            raise InvalidRepData(
                f"exponents of {element} and its inverse {inverse} are not complementary"
            )
    return LinearRepData(group=group, rank=rank, exponents=cleaned)


def exponents_from_permutation(group: FiniteGroup, element: int) -> List[Exponent]:
    """Eigenvalue angles of a permutation matrix: an ℓ-cycle gives 0/ℓ, …, (ℓ−1)/ℓ."""
    result = []
    for length in sorted(cycle_type(group, element)):
        result.extend(Exponent(a, length) for a in range(length))
    return result


def rep_from_permutation_action(group: FiniteGroup) -> LinearRepData:
    if group.permutations is None:
        raise MissingRepData("group was not given by permutations")
    exponents = {
        x: [e.value for e in exponents_from_permutation(group, x)]
        for x in range(group.order)
    }
    return make_linear_rep(group, group.degree, exponents)


def degree_shifting(rep: LinearRepData, element: int) -> Fraction:
    """ι_(g) = Σ_j a_j/m"""
    try:
        values = rep.exponents[element]
    except KeyError:
        raise MissingRepData(f"no exponent data for element {element}")
    return sum(values, Fraction(0))


def class_degree_shifting(
    rep: LinearRepData, table: ConjugacyClassTable
) -> List[Fraction]:
    """ι per conjugacy class, read off any member carrying data."""
    shifts = []
    for i, members in enumerate(table.classes):
        known = [x for x in members if x in rep.exponents]
        if not known:
            raise MissingRepData(f"no exponent data for any element of class {i}")
        shifts.append(degree_shifting(rep, known[0]))
    return shifts


def nonzero_exponents(rep: LinearRepData, element: int) -> int:
    try:
        return sum(1 for v in rep.exponents[element] if v)
    except KeyError:
        raise MissingRepData(f"no exponent data for element {element}")
