"""Bijections between row-increasing arrays, hook tableau pairs, and
two-row standard Young tableaux."""

from ._core import (
    certify,
    certify_remark,
    count_syt,
    enumerate_arrays,
    enumerate_syt,
    forward_step,
    from_hook_pair,
    from_two_row_syt,
    hook_partitions,
    identity_sides,
    in_hook,
    inverse_step,
    is_standard,
    partitions,
    plus_one,
    remark_matching_weights,
    remark_pair_sum,
    to_hook_pair,
    to_two_row_syt,
    trace,
)

__all__ = [
    "certify",
    "certify_remark",
    "count_syt",
    "enumerate_arrays",
    "enumerate_syt",
    "forward_step",
    "from_hook_pair",
    "from_two_row_syt",
    "hook_partitions",
    "identity_sides",
    "in_hook",
    "inverse_step",
    "is_standard",
    "partitions",
    "plus_one",
    "remark_matching_weights",
    "remark_pair_sum",
    "to_hook_pair",
    "to_two_row_syt",
    "trace",
]
