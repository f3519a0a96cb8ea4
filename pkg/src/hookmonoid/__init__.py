"""Central-hook calculus on integer partitions.

The partition product, unique hook factorization, the quotient by hook
type, and exact counts of partitions by hook structure, each checked
against brute-force enumeration.
"""

from .counting import (
    ConsistencyError,
    DifferenceSet,
    classes_by_product,
    dh,
    h_r,
    hooktypes,
    hooktypes_single_d,
    p_hdecomp,
    p_hooktype,
    p_n,
    p_nr,
    p_nr_closed,
    pi_count,
    po_count,
    weight_extremes,
)
from .monoid import Hook1, durfee_split, durfee_square, factor, peel_inner, product, product_all
from .partitions import (
    EMPTY,
    BoundedPartition,
    DifferenceSequence,
    FrobeniusSymbol,
    HookType,
    Partition,
    conjugate,
    delta_of,
    delta_weight,
    from_frobenius,
    hook_type,
    hooktype_of,
    render,
    to_frobenius,
)
from .quotient import (
    TriangularMatrix3,
    class_cardinality,
    class_count,
    delta_product,
    hooktype_product,
    index_convert,
    phi3,
    phi4,
    pi_product,
)
from .series import MultiPoly, Series, gf_dh_coeff, gf_pn_coeff, gf_pnr_coeff, mv_coeff

__version__ = "0.1.0"
