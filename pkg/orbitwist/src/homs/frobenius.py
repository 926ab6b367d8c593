"""
Frobenius' character formula, used as an independent cross-check:

    |G|^{2g−1} · Π_j |C_j| · Σ_χ Π_j χ(c_j) / χ(1)^{k+2g−2}

Character tables are supplied by the caller; they are never computed here.
"""

from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence

import numpy as np

from orbitwist.src.errors import MissingCharacterTable, NonIntegralResult, SchemaError
from orbitwist.src.group.conjugacy import ConjugacyClassTable, conjugacy_table
from orbitwist.src.group.finite_group import FiniteGroup
from orbitwist.src.homs.surface import SurfaceGroupSpec, constraint_classes, validate_spec

TOLERANCE = 1e-6


@dataclass(frozen=True, eq=False)
class CharacterTable:
    """``values[χ, i]`` is the character χ on our class i (columns already
    permuted into class-table order)."""

    values: np.ndarray


def make_character_table(
    table: ConjugacyClassTable,
    class_order: Sequence[int],
    characters: Sequence[Sequence[complex]],
) -> CharacterTable:
    """``class_order[c]`` names our class index for column c of ``characters``."""
    r = table.num_classes
    if sorted(class_order) != list(range(r)):
        raise SchemaError("classes", f"must be a permutation of 0..{r - 1}")
    if len(characters) != r:
        raise SchemaError("chars", f"expected {r} characters, got {len(characters)}")
    raw = np.asarray(characters, dtype=complex)
    if raw.shape != (r, r):
        raise SchemaError("chars", f"expected a {r}x{r} table, got shape {raw.shape}")
    values = np.empty_like(raw)
    values[:, list(class_order)] = raw
    return CharacterTable(values=values)


def frobenius_value(
    group: FiniteGroup, genus: int, classes: Sequence[int], chars: CharacterTable
) -> complex:
    table = conjugacy_table(group)
    k = len(classes)
    degrees = chars.values[:, table.identity_class]
    prefactor = float(group.order) ** (2 * genus - 1)
    for c in classes:
        prefactor *= table.sizes[c]
    terms = np.ones(len(degrees), dtype=complex)
    for c in classes:
        terms *= chars.values[:, c]
    terms /= degrees ** (k + 2 * genus - 2)
    return prefactor * terms.sum()


def count_homs_frobenius(
    group: FiniteGroup, spec: SurfaceGroupSpec, chars: Optional[CharacterTable]
) -> int:
    """Exact-order constraints are expanded into a sum over their classes."""
    if chars is None:
        raise MissingCharacterTable("a character table is required for the Frobenius count")
    table = conjugacy_table(group)
    validate_spec(table, spec)
    options = [constraint_classes(table, c) for c in spec.puncture_constraints]

    total = 0j
    for classes in product(*options):
        total += frobenius_value(group, spec.genus, classes, chars)

    nearest = round(total.real)
    error = abs(total - nearest)
    if error >= TOLERANCE:
        raise NonIntegralResult(
            f"Frobenius sum {total} is {error:.3g} away from an integer; "
            "check the character table"
        )
    return int(nearest)
