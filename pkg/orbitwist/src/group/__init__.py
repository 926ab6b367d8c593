from orbitwist.src.group.finite_group import (
    FiniteGroup,
    build_group_from_permutations,
    build_group_from_table,
    cycle_type,
    element_order,
)
from orbitwist.src.group.conjugacy import ConjugacyClassTable, conjugacy_table
from orbitwist.src.group.class_functions import (
    ClassFunction,
    brute_convolve,
    convolve,
    convolve_all,
    delta_identity,
    indicator,
    make_class_function,
    structure_constants,
)
