from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

import numpy as np

from orbitwist.src.errors import SchemaError
from orbitwist.src.group.conjugacy import ConjugacyClassTable
from orbitwist.src.group.finite_group import FiniteGroup


@dataclass(frozen=True)
class ClassConstraint:
    class_index: int


@dataclass(frozen=True)
class ExactOrderConstraint:
    """The puncture image must have exactly this order (injective local homomorphism)."""

    order: int


PunctureConstraint = Union[ClassConstraint, ExactOrderConstraint]


@dataclass(frozen=True)
class SurfaceGroupSpec:
    genus: int
    puncture_constraints: Tuple[PunctureConstraint, ...] = ()

    @property
    def num_punctures(self) -> int:
        return len(self.puncture_constraints)


@dataclass(frozen=True)
class Characteristic:
    """Images of a₁, b₁, …, a_g, b_g and of the puncture loops c₁, …, c_k."""

    handle_images: Tuple[int, ...]
    puncture_images: Tuple[int, ...]

    def as_tuple(self) -> Tuple[int, ...]:
        return self.handle_images + self.puncture_images

    def satisfies_relation(self, group: FiniteGroup) -> bool:
        product = group.identity
        for i in range(0, len(self.handle_images), 2):
            a, b = self.handle_images[i], self.handle_images[i + 1]
            product = group.mul(product, group.commutator(a, b))
        return group.product([product, *self.puncture_images]) == group.identity


def surface_spec(
    genus: int,
    classes: Sequence[int] = (),
    exact_orders: Sequence[int] = (),
) -> SurfaceGroupSpec:
    """Class constraints first, then exact-order constraints."""
    constraints: List[PunctureConstraint] = [ClassConstraint(c) for c in classes]
    constraints.extend(ExactOrderConstraint(m) for m in exact_orders)
    return SurfaceGroupSpec(genus=genus, puncture_constraints=tuple(constraints))


def validate_spec(table: ConjugacyClassTable, spec: SurfaceGroupSpec) -> None:
    if spec.genus < 0:
        raise SchemaError("genus", f"must be non-negative, got {spec.genus}")
    for j, constraint in enumerate(spec.puncture_constraints):
        if isinstance(constraint, ClassConstraint):
            if not 0 <= constraint.class_index < table.num_classes:
                raise SchemaError(
                    "classes",
                    f"puncture {j}: class {constraint.class_index} does not exist "
                    f"(group has {table.num_classes} classes)",
                )
        elif constraint.order < 1:
            raise SchemaError("exact-orders", f"puncture {j}: order must be >= 1")


def constraint_classes(
    table: ConjugacyClassTable, constraint: PunctureConstraint
) -> List[int]:
    """Conjugacy classes a puncture image may lie in."""
    if isinstance(constraint, ClassConstraint):
        return [constraint.class_index]
    return table.classes_of_order(constraint.order)


def constraint_elements(
    table: ConjugacyClassTable, constraint: PunctureConstraint
) -> np.ndarray:
    members = [x for c in constraint_classes(table, constraint) for x in table.classes[c]]
    return np.asarray(sorted(members), dtype=np.int64)
