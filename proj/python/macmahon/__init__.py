"""Plane-partition generating functions via transfer operators.

Series are returned as lists of Python ints, coefficient of q^k at index k.
Partitions are weakly decreasing lists of positive ints.
"""

from fractions import Fraction

from ._core import (
    ValidationError,
    count_plane_partitions,
    count_skew_ssyt,
    finite_grid_product,
    gamma_chain_matrix_element,
    interlaces,
    macmahon_product,
    partitions,
    slice,
    transfer_partition_function,
    unslice,
)
from ._core import _commutation_check

__all__ = [
    "ValidationError",
    "commutation_check",
    "count_plane_partitions",
    "count_skew_ssyt",
    "finite_grid_product",
    "gamma_chain_matrix_element",
    "interlaces",
    "macmahon_product",
    "partitions",
    "slice",
    "transfer_partition_function",
    "unslice",
]


def commutation_check(mu, mu1, x, y):
    """Both sides of (1 - xy) lhs = rhs at a rational point, as Fractions.

    x and y may be ints, Fractions or "p/q" strings.
    """
    result = _commutation_check(list(mu), list(mu1), str(Fraction(x)), str(Fraction(y)))
    for key in ("lhs", "rhs", "factor"):
        result[key] = Fraction(*result[key])
    return result
