from dataclasses import dataclass
from typing import Iterator, List, Tuple

import numpy as np

from orbitwist.src.errors import CapExceeded
from orbitwist.src.group.finite_group import FiniteGroup
from orbitwist.src.homs.counting import _SearchPlan, count_homs_convolution
from orbitwist.src.homs.surface import Characteristic, SurfaceGroupSpec
from orbitwist.src.utils.config_loader import Limits


@dataclass(frozen=True)
class CharacteristicOrbit:
    """Lexicographically minimal member of a simultaneous-conjugation orbit."""

    representative: Characteristic
    size: int


def _walk(plan: _SearchPlan, group: FiniteGroup) -> Iterator[Tuple[int, ...]]:
    """Solutions in lexicographic order of (a₁, b₁, …, c₁, …, c_k)."""
    n = group.order
    table = group.table
    handle_depth = plan.num_handle_levels
    last_is_puncture = plan.final_mask is not None

    def choices(depth: int) -> Iterator[Tuple[int, Tuple[int, ...]]]:
        level = plan.levels[depth]
        if depth < handle_depth:
            # level lists [a, b] for a in G, b in G: position p is (p // n, p % n)
            for p, value in enumerate(level.tolist()):
                yield value, (p // n, p % n)
        else:
            for value in level.tolist():
                yield value, (value,)

    def descend(partial: int, depth: int, prefix: Tuple[int, ...]):
        if depth == len(plan.levels):
            if not plan.closes(np.asarray([partial]))[0]:
                return
            if last_is_puncture:
                yield prefix + (int(group.inverses[partial]),)
            else:
                yield prefix
            return
        for value, picked in choices(depth):
            yield from descend(int(table[partial, value]), depth + 1, prefix + picked)

    yield from descend(group.identity, 0, ())


def _split(group_genus: int, solution: Tuple[int, ...]) -> Characteristic:
    cut = 2 * group_genus
    return Characteristic(handle_images=solution[:cut], puncture_images=solution[cut:])


def enumerate_characteristics(
    group: FiniteGroup,
    spec: SurfaceGroupSpec,
    limits: Limits = Limits(),
) -> List[Characteristic]:
    """All solutions in lexicographic order."""
    total = count_homs_convolution(group, spec)
    if total > limits.enumeration_cap:
        raise CapExceeded(
            f"{total} characteristics exceed the enumeration cap of {limits.enumeration_cap}"
        )
    plan = _SearchPlan(group, spec)
    return [_split(spec.genus, s) for s in _walk(plan, group)]


def conjugation_orbits(
    group: FiniteGroup,
    spec: SurfaceGroupSpec,
    limits: Limits = Limits(),
) -> List[CharacteristicOrbit]:
    """One lexicographically minimal representative per orbit of simultaneous
    conjugation, with orbit sizes; sizes sum to the raw count."""
    solutions = enumerate_characteristics(group, spec, limits)
    conj = group.conjugation_table()
    seen = set()
    orbits = []
    for characteristic in solutions:
        key = characteristic.as_tuple()
        if key in seen:
            continue
        # every smaller member was visited earlier, so key is the orbit minimum
        images = conj[:, list(key)] if key else np.zeros((1, 0), dtype=np.int64)
        orbit = {tuple(row) for row in images.tolist()}
        seen.update(orbit)
        orbits.append(CharacteristicOrbit(representative=characteristic, size=len(orbit)))
    return orbits
