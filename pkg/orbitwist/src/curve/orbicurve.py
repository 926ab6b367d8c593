from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from orbitwist.src.errors import (
    Disconnected,
    InvalidMultiplicity,
    InvalidSlot,
    NodeMultiplicityMismatch,
    SlotConflict,
)

Slot = Tuple[int, int]  # (component, slot on that component)


@dataclass(frozen=True)
class MarkedOrbicurve:
    """Genus plus the multiplicity of each marked point (1 = smooth point)."""

    genus: int
    markings: Tuple[int, ...] = ()

    @property
    def num_markings(self) -> int:
        return len(self.markings)

    @property
    def orbifold_points(self) -> Tuple[int, ...]:
        return tuple(m for m in self.markings if m > 1)


@dataclass(frozen=True)
class Node:
    branch_a: Slot
    branch_b: Slot
    multiplicity: int

    @property
    def is_self_node(self) -> bool:
        return self.branch_a[0] == self.branch_b[0]


@dataclass(frozen=True)
class NodalOrbicurve:
    """Components glued at nodes. Each component's ``markings`` lists the
    multiplicities of all its special points (slots); a slot is either a node
    branch or a global marked point."""

    components: Tuple[MarkedOrbicurve, ...]
    nodes: Tuple[Node, ...] = ()
    marking_assignment: Tuple[Slot, ...] = ()
    dual_graph: Tuple[Tuple[int, int], ...] = field(default=(), compare=False)

    @property
    def num_components(self) -> int:
        return len(self.components)

    def marking_multiplicities(self) -> Tuple[int, ...]:
        return tuple(self.components[c].markings[s] for c, s in self.marking_assignment)

    def special_points(self, component: int) -> int:
        """k_ν: node branches (twice for a self-node) plus markings on the component."""
        return self.components[component].num_markings


def make_marked_orbicurve(genus: int, multiplicities: Iterable[int] = ()) -> MarkedOrbicurve:
    if genus < 0:
        raise InvalidMultiplicity(f"genus must be non-negative, got {genus}")
    markings = tuple(multiplicities)
    for m in markings:
        if m < 1:
            raise InvalidMultiplicity(f"marked point multiplicity must be >= 1, got {m}")
    return MarkedOrbicurve(genus=genus, markings=markings)


def _check_slot(components: Sequence[MarkedOrbicurve], slot: Slot, what: str) -> Slot:
    component, position = slot
    if not 0 <= component < len(components):
        raise InvalidSlot(f"{what}: component {component} does not exist")
    if not 0 <= position < components[component].num_markings:
        raise InvalidSlot(f"{what}: component {component} has no slot {position}")
    return (component, position)


def _is_connected(num_vertices: int, edges: Sequence[Tuple[int, int]]) -> bool:
    adjacency: List[List[int]] = [[] for _ in range(num_vertices)]
    for a, b in edges:
        adjacency[a].append(b)
        adjacency[b].append(a)
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in adjacency[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == num_vertices


def make_nodal_orbicurve(
    components: Sequence[MarkedOrbicurve],
    nodes: Sequence[Node],
    markings: Optional[Sequence[Slot]] = None,
) -> NodalOrbicurve:
    """Validate a nodal orbicurve.

    ``markings`` assigns global marked points to slots; when omitted every slot
    not taken by a node becomes a marked point, in (component, slot) order.
    """
    if not components:
        raise Disconnected("a nodal orbicurve needs at least one component")

    taken = {}
    for j, node in enumerate(nodes):
        if node.multiplicity < 1:
            raise InvalidMultiplicity(f"node {j}: multiplicity must be >= 1")
        a = _check_slot(components, node.branch_a, f"node {j}")
        b = _check_slot(components, node.branch_b, f"node {j}")
        m_a = components[a[0]].markings[a[1]]
        m_b = components[b[0]].markings[b[1]]
        if m_a != m_b:
            raise NodeMultiplicityMismatch(
                f"node {j}: branch_a has multiplicity {m_a}, branch_b has {m_b}"
            )
        if node.multiplicity != m_a:
            raise NodeMultiplicityMismatch(
                f"node {j}: multiplicity {node.multiplicity} but its branches have {m_a}"
            )
        for slot in (a, b):
            if slot in taken:
                raise SlotConflict(f"slot {slot} used by node {taken[slot]} and node {j}")
            taken[slot] = j

    if markings is None:
        assignment = tuple(
            (c, s)
            for c, component in enumerate(components)
            for s in range(component.num_markings)
            if (c, s) not in taken
        )
    else:
        assignment = tuple(_check_slot(components, slot, "marking") for slot in markings)
        for i, slot in enumerate(assignment):
            if slot in taken:
                raise SlotConflict(f"marking {i} sits on slot {slot}, already a node branch")
        if len(set(assignment)) != len(assignment):
            raise SlotConflict("two markings share a slot")
        covered = set(taken) | set(assignment)
        for c, component in enumerate(components):
            for s in range(component.num_markings):
                if (c, s) not in covered:
                    raise InvalidSlot(
                        f"slot {(c, s)} is neither a node branch nor a marked point"
                    )

    edges = tuple((node.branch_a[0], node.branch_b[0]) for node in nodes)
    if not _is_connected(len(components), edges):
        raise Disconnected("dual graph is not connected")

    return NodalOrbicurve(
        components=tuple(components),
        nodes=tuple(nodes),
        marking_assignment=assignment,
        dual_graph=edges,
    )


def nodal_from_marked(curve: MarkedOrbicurve) -> NodalOrbicurve:
    return make_nodal_orbicurve([curve], [])


def canonical_degree(curve: MarkedOrbicurve) -> Fraction:
    """Degree of the orbifold canonical bundle: 2g − 2 + Σ(1 − 1/m_i)."""
    correction = sum((1 - Fraction(1, m) for m in curve.markings), Fraction(0))
    return 2 * curve.genus - 2 + correction


def orbifold_euler_characteristic(curve: MarkedOrbicurve) -> Fraction:
    return -canonical_degree(curve)


def geometry_type(curve: MarkedOrbicurve) -> str:
    """spherical, euclidean or hyperbolic, by the sign of the Euler characteristic."""
    chi = orbifold_euler_characteristic(curve)
    if chi > 0:
        return "spherical"
    if chi == 0:
        return "euclidean"
    return "hyperbolic"


def arithmetic_genus(nodal: NodalOrbicurve) -> int:
    """Σ g_ν + rank H₁ of the dual graph (E − V + 1 for a connected graph)."""
    betti = len(nodal.nodes) - nodal.num_components + 1
    return sum(c.genus for c in nodal.components) + betti


@dataclass(frozen=True)
class StabilityReport:
    stable_as_curve: bool
    stable_as_map: bool
    offending: Tuple[int, ...]  # components with k_ν + 2g_ν < 3


def check_stability(
    nodal: NodalOrbicurve, constant_components: Iterable[int] = ()
) -> StabilityReport:
    constant = set(constant_components)
    for c in constant:
        if not 0 <= c < nodal.num_components:
            raise InvalidSlot(f"constant component {c} does not exist")

    offending = tuple(
        nu
        for nu, component in enumerate(nodal.components)
        if nodal.special_points(nu) + 2 * component.genus < 3
    )
    return StabilityReport(
        stable_as_curve=not offending,
        stable_as_map=not (constant & set(offending)),
        offending=offending,
    )
