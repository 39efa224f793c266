"""Maximum element orders of the symplectic groups Sp(2m, q), q even."""

from .arith import (
    FieldSize,
    ceil_pow2_factor,
    cyclotomic_product,
    lcm_signed_list,
    q_power_pm,
    structured_gcd,
    two_adic_valuation,
)
from .formula import (
    CaseTag,
    FormulaCase,
    OrderBounds,
    aut_max_order,
    bounds,
    classify,
    max_order,
    table_reference,
)
from .partition import (
    SignedPartition,
    count_signed_partitions,
    enumerate_distinct_signed_partitions,
    enumerate_signed_partitions,
    two_adic_expansion,
)
from .search import SearchMode, SearchReport, SearchWitness, l_value, maximize, verify_theorem2

__version__ = "0.1.0"
