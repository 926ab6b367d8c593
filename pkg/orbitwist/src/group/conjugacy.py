from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from orbitwist.src.group.finite_group import FiniteGroup, cached_on_group, element_order


@dataclass(frozen=True, eq=False)
class ConjugacyClassTable:
    """Conjugacy classes of a group, ordered by (size, minimal element)."""

    group: FiniteGroup
    classes: Tuple[Tuple[int, ...], ...]
    class_of: np.ndarray
    centralizer_orders: Tuple[int, ...]
    inverse_class: Tuple[int, ...]
    element_orders: Tuple[int, ...]  # order of the elements in each class

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    @property
    def identity_class(self) -> int:
        return int(self.class_of[self.group.identity])

    def representative(self, class_index: int) -> int:
        return self.classes[class_index][0]

    def classes_of_order(self, order: int) -> List[int]:
        return [i for i, m in enumerate(self.element_orders) if m == order]


@cached_on_group
def conjugacy_table(group: FiniteGroup) -> ConjugacyClassTable:
    conj = group.conjugation_table()
    assigned = np.full(group.order, -1, dtype=np.int64)
    orbits: List[Tuple[int, ...]] = []
    for x in range(group.order):
        if assigned[x] >= 0:
            continue
        orbit = tuple(int(y) for y in np.unique(conj[:, x]))
        assigned[list(orbit)] = len(orbits)
        orbits.append(orbit)

    classes = tuple(sorted(orbits, key=lambda c: (len(c), c[0])))
    class_of = np.empty(group.order, dtype=np.int64)
    for i, members in enumerate(classes):
        class_of[list(members)] = i
    class_of.flags.writeable = False

    centralizer_orders = tuple(group.order // len(c) for c in classes)
    inverse_class = tuple(int(class_of[group.inverses[c[0]]]) for c in classes)
    element_orders = tuple(element_order(group, c[0]) for c in classes)

    return ConjugacyClassTable(
        group=group,
        classes=classes,
        class_of=class_of,
        centralizer_orders=centralizer_orders,
        inverse_class=inverse_class,
        element_orders=element_orders,
    )
