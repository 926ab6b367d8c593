from orbitwist.src.homs.surface import (
    Characteristic,
    ClassConstraint,
    ExactOrderConstraint,
    SurfaceGroupSpec,
    surface_spec,
)
from orbitwist.src.homs.counting import (
    brute_cost,
    commutator_kernel,
    count_homs,
    count_homs_brute,
    count_homs_convolution,
    gluing_sum,
    handle_sum,
    surface_function,
)
from orbitwist.src.homs.enumeration import (
    CharacteristicOrbit,
    conjugation_orbits,
    enumerate_characteristics,
)
from orbitwist.src.homs.frobenius import (
    CharacterTable,
    count_homs_frobenius,
    make_character_table,
)
from orbitwist.src.homs.twisted import (
    count_twisted_boundary_conditions,
    cover_genus,
    curve_spec,
)
