"""
Twisted boundary conditions on a smooth marked orbicurve and the G-cover a
surjective characteristic determines.
"""

from fractions import Fraction

from orbitwist.src.bundle.orbibundle import quotient_chern_number
from orbitwist.src.curve.orbicurve import MarkedOrbicurve, canonical_degree
from orbitwist.src.errors import InvalidMultiplicity, InvariantViolation, NotSurjective
from orbitwist.src.group.finite_group import FiniteGroup, element_order
from orbitwist.src.homs.counting import count_homs_convolution
from orbitwist.src.homs.surface import (
    Characteristic,
    ExactOrderConstraint,
    SurfaceGroupSpec,
)
from orbitwist.src.utils.rationals import as_integer


def curve_spec(curve: MarkedOrbicurve) -> SurfaceGroupSpec:
    """A point of multiplicity m_i must map to an element of order exactly m_i."""
    return SurfaceGroupSpec(
        genus=curve.genus,
        puncture_constraints=tuple(ExactOrderConstraint(m) for m in curve.markings),
    )


def count_twisted_boundary_conditions(group: FiniteGroup, curve: MarkedOrbicurve) -> int:
    return count_homs_convolution(group, curve_spec(curve))


def cover_genus(
    group: FiniteGroup, curve: MarkedOrbicurve, characteristic: Characteristic
) -> int:
    """Genus of the connected G-cover: 2g̃ − 2 = |G|·deg K_Σ."""
    if len(characteristic.handle_images) != 2 * curve.genus:
        raise InvalidMultiplicity(
            f"expected {2 * curve.genus} handle images, got {len(characteristic.handle_images)}"
        )
    if len(characteristic.puncture_images) != curve.num_markings:
        raise InvalidMultiplicity(
            f"expected {curve.num_markings} puncture images, "
            f"got {len(characteristic.puncture_images)}"
        )
    if not characteristic.satisfies_relation(group):
        raise InvariantViolation("images do not satisfy the surface group relation")
    for i, (x, m) in enumerate(zip(characteristic.puncture_images, curve.markings)):
        if element_order(group, x) != m:
            raise InvalidMultiplicity(
                f"puncture {i}: image has order {element_order(group, x)}, multiplicity {m}"
            )
    if len(group.generated_subgroup(characteristic.as_tuple())) != group.order:
        raise NotSurjective("images do not generate the group; the cover is disconnected")

    upstairs = group.order * canonical_degree(curve)
    euler_upstairs = as_integer(upstairs, "canonical degree of the cover")
    if quotient_chern_number(euler_upstairs, group.order) != canonical_degree(curve):
        raise InvariantViolation("cover and quotient canonical degrees disagree")
    return as_integer(Fraction(euler_upstairs + 2, 2), "cover genus")
