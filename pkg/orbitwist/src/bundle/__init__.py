from orbitwist.src.bundle.orbibundle import (
    OrbiBundleData,
    OrbiPoint,
    canonical_bundle_of,
    check_canonical_consistency,
    chern_number,
    make_orbibundle,
    quotient_chern_number,
    riemann_roch_index,
)
from orbitwist.src.bundle.representation import (
    Exponent,
    LinearRepData,
    class_degree_shifting,
    degree_shifting,
    exponents_from_permutation,
    make_linear_rep,
    nonzero_exponents,
    rep_from_permutation_action,
)
