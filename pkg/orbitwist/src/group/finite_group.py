from collections import deque
from dataclasses import dataclass, field
from functools import wraps
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, TypeVar

import numpy as np
from sympy.combinatorics import Permutation

from orbitwist.logger import log_progress
from orbitwist.src.errors import NotAGroup, OrderCapExceeded
from orbitwist.src.utils.config_loader import DEFAULT_ORDER_CAP

# Triples checked exhaustively up to this order, sampled above it
EXHAUSTIVE_ASSOCIATIVITY_ORDER = 64
SAMPLED_TRIPLES = 100_000


def _frozen(array: np.ndarray) -> np.ndarray:
    array.flags.writeable = False
    return array


T = TypeVar("T")


def cached_on_group(compute: Callable[["FiniteGroup"], T]) -> Callable[["FiniteGroup"], T]:
    """Memoize ``compute(group)`` in ``group.derived``; the result lives as long as the group."""
    key = f"{compute.__module__}.{compute.__qualname__}"

    @wraps(compute)
    def cached(group: "FiniteGroup") -> T:
        if key not in group.derived:
            group.derived[key] = compute(group)
        return group.derived[key]

    return cached


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group stored as its full Cayley table.

    ``table[x, y]`` is the index of the product x·y. For groups generated by
    permutations, ``permutations[x]`` is the 0-based image array of element x
    and x·y means "apply x, then y".
    """

    order: int
    table: np.ndarray
    identity: int
    inverses: np.ndarray
    permutations: Optional[np.ndarray] = None
    derived: Dict[str, Any] = field(default_factory=dict, init=False, repr=False)

    @property
    def degree(self) -> Optional[int]:
        return None if self.permutations is None else self.permutations.shape[1]

    @property
    def elements(self) -> range:
        return range(self.order)

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def inv(self, x: int) -> int:
        return int(self.inverses[x])

    def product(self, elements: Sequence[int]) -> int:
        result = self.identity
        for x in elements:
            result = int(self.table[result, x])
        return result

    def conjugate(self, g: int, x: int) -> int:
        """g·x·g⁻¹"""
        return int(self.table[self.table[g, x], self.inverses[g]])

    def commutator(self, a: int, b: int) -> int:
        """[a, b] = a·b·a⁻¹·b⁻¹"""
        ab = self.table[a, b]
        return int(self.table[self.table[ab, self.inverses[a]], self.inverses[b]])

    def conjugation_table(self) -> np.ndarray:
        """``result[g, x] = g·x·g⁻¹`` for all pairs."""
        return self.table[self.table, self.inverses[:, None]]

    def commutator_table(self) -> np.ndarray:
        """``result[a, b] = [a, b]`` for all pairs."""
        t = self.table
        ab = t
        aba = t[ab, self.inverses[:, None]]
        return t[aba, self.inverses[None, :]]

    def generated_subgroup(self, generators: Sequence[int]) -> List[int]:
        """Sorted element indices of the subgroup generated by ``generators``."""
        seen = {self.identity}
        queue = deque([self.identity])
        while queue:
            x = queue.popleft()
            for g in generators:
                y = int(self.table[x, g])
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return sorted(seen)


def _check_associativity(table: np.ndarray) -> Optional[Tuple[int, int, int]]:
    n = table.shape[0]
    if n <= EXHAUSTIVE_ASSOCIATIVITY_ORDER:
        idx = np.arange(n)
        left = table[table[:, :, None], idx[None, None, :]]
        right = table[idx[:, None, None], table[None, :, :]]
        bad = np.argwhere(left != right)
        return tuple(int(v) for v in bad[0]) if len(bad) else None

    # Fixed seed: the verdict must not vary between runs
    rng = np.random.default_rng(0)
    x, y, z = rng.integers(0, n, size=(3, SAMPLED_TRIPLES))
    left = table[table[x, y], z]
    right = table[x, table[y, z]]
    bad = np.flatnonzero(left != right)
    if len(bad):
        i = bad[0]
        return int(x[i]), int(y[i]), int(z[i])
    return None


def build_group_from_table(order: int, table: Sequence[Sequence[int]]) -> FiniteGroup:
    """Validate a Cayley table and return the group it defines.

    Raises NotAGroup naming the first failed axiom.
    """
    if order < 1:
        raise NotAGroup("order must be positive")
    array = np.asarray(table, dtype=np.int64)
    if array.shape != (order, order):
        raise NotAGroup(f"table must be {order}x{order}, got shape {array.shape}")
    if array.min() < 0 or array.max() >= order:
        raise NotAGroup("table entry out of range")

    everything = np.arange(order)
    left_identities = [e for e in range(order) if np.array_equal(array[e], everything)]
    if not left_identities:
        raise NotAGroup("no identity element")
    identity = left_identities[0]

    inverses = np.empty(order, dtype=np.int64)
    for x in range(order):
        candidates = np.flatnonzero(array[:, x] == identity)
        if len(candidates) == 0:
            raise NotAGroup(f"no inverse for element {x}")
        inverses[x] = candidates[0]

    if not np.array_equal(array[:, identity], everything):
        raise NotAGroup(f"element {identity} is not a two-sided identity")
    for x in range(order):
        if array[x, inverses[x]] != identity:
            raise NotAGroup(f"no inverse for element {x}")

    bad_triple = _check_associativity(array)
    if bad_triple is not None:
        raise NotAGroup(f"not associative at {bad_triple}")

    return FiniteGroup(
        order=order,
        table=_frozen(array),
        identity=identity,
        inverses=_frozen(inverses),
    )


def parse_cycles(cycles: Sequence[Sequence[int]], degree: int) -> Permutation:
    """Turn 1-based cycle notation, e.g. [[1, 2], [3, 4]], into a Permutation."""
    seen = set()
    for cycle in cycles:
        for point in cycle:
            if not isinstance(point, int) or not 1 <= point <= degree:
                raise NotAGroup(f"cycle point {point!r} outside 1..{degree}")
            if point in seen:
                raise NotAGroup(f"point {point} repeated in cycle notation")
            seen.add(point)
    zero_based = [[p - 1 for p in cycle] for cycle in cycles if len(cycle) > 1]
    if not zero_based:
        return Permutation(list(range(degree)))
    return Permutation(zero_based, size=degree)


def build_group_from_permutations(
    generators: Sequence[Sequence[Sequence[int]]],
    degree: int,
    order_cap: int = DEFAULT_ORDER_CAP,
) -> FiniteGroup:
    """Breadth-first closure of permutation generators.

    Element 0 is the identity; the remaining elements are numbered in the order
    the closure discovers them, so the numbering is reproducible.
    """
    if degree < 1:
        raise NotAGroup("degree must be positive")
    gens = [tuple(parse_cycles(g, degree).array_form) for g in generators]

    identity = tuple(range(degree))
    index = {identity: 0}
    elements = [identity]
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for g in gens:
            # apply current, then g
            image = tuple(g[p] for p in current)
            if image not in index:
                if len(elements) >= order_cap:
                    raise OrderCapExceeded(
                        f"closure exceeds the order cap of {order_cap} elements"
                    )
                index[image] = len(elements)
                elements.append(image)
                queue.append(image)

    perms = np.asarray(elements, dtype=np.int64)
    order = len(elements)
    log_progress(f"closure of {len(gens)} generators on {degree} points: order {order}")

    table = np.empty((order, order), dtype=np.int64)
    for x in range(order):
        # row x: composites x then y, i.e. y[x[p]]
        composed = perms[:, perms[x]]
        table[x] = [index[tuple(row)] for row in composed.tolist()]

    inverses = np.empty(order, dtype=np.int64)
    for x in range(order):
        inverse = np.empty(degree, dtype=np.int64)
        inverse[perms[x]] = np.arange(degree)
        inverses[x] = index[tuple(inverse.tolist())]

    return FiniteGroup(
        order=order,
        table=_frozen(table),
        identity=0,
        inverses=_frozen(inverses),
        permutations=_frozen(perms),
    )


def element_order(group: FiniteGroup, x: int) -> int:
    """Smallest m >= 1 with x^m = identity."""
    m = 1
    power = x
    while power != group.identity:
        power = int(group.table[power, x])
        m += 1
    return m


def cycle_type(group: FiniteGroup, x: int) -> List[int]:
    """Cycle lengths of a permutation element, longest first, fixed points included."""
    if group.permutations is None:
        raise ValueError("group was not built from permutations")
    structure = Permutation(group.permutations[x].tolist()).cycle_structure
    lengths: List[int] = []
    for length in sorted(structure, reverse=True):
        lengths.extend([length] * structure[length])
    return lengths
