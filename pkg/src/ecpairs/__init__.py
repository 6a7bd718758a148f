"""Elliptic pairs, cycles, and lists over squarefree d, with exact arithmetic."""

from .arith import (
    SquarefreeSplit,
    crt,
    is_prime,
    is_square,
    kronecker,
    mod_sqrt,
    primes_up_to,
    squarefree_part,
)
from .census import (
    CensusRecord,
    CensusTable,
    cd_estimate,
    census_discriminants,
    count_pairs,
    scan_census,
    table2,
    write_census_csv,
)
from .curves import (
    SixOrders,
    curve_order,
    ec_add,
    ec_mul,
    find_k,
    jacobi_sum,
    naive_order,
    six_orders,
)
from .lists_cycles import (
    AliquotNotFoundError,
    EllipticList,
    SixCycle,
    aliquot_k,
    build_list,
    cycle_from_ab,
    cycle_values,
    discrepancy,
    find_6cycles,
    longest_list,
    mod7_product,
    mod7_row,
)
from .pairs import (
    EllipticPair,
    a_pq,
    anomalous_primes,
    certificate,
    find_d,
    is_pair,
    orders_from_A,
    pair_numerator,
)
from .quadform import CmDecomposition, class_number, decompose, decompose3, max_allowable

__version__ = "0.1.0"
