from orbitwist.src.curve.orbicurve import (
    MarkedOrbicurve,
    NodalOrbicurve,
    Node,
    StabilityReport,
    arithmetic_genus,
    canonical_degree,
    check_stability,
    geometry_type,
    make_marked_orbicurve,
    make_nodal_orbicurve,
    nodal_from_marked,
    orbifold_euler_characteristic,
)
