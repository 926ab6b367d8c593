from orbitwist.src.gw.sectors import (
    AssociativityReport,
    ProductTable,
    Sector,
    SectorPairing,
    check_associativity,
    product_table,
    sector_degrees,
    sectors_and_pairing,
    three_point_count,
)
from orbitwist.src.gw.dimension import (
    DimensionInput,
    DimensionResult,
    Insertion,
    SelectionInput,
    expected_total_degree,
    insertion_degree,
    make_dimension_input,
    selection_rule,
    virtual_dimension,
)
from orbitwist.src.gw.splitting import (
    IdentityCheck,
    SplittingReport,
    nodal_characteristic_count,
    splitting_identities,
)
