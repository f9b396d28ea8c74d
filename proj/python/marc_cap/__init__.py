"""Capacity bounds for the degraded Gaussian multiaccess relay channel."""

from ._core import (
    Channel,
    DomainError,
    NumericalError,
    UnsupportedDimension,
    ValidationError,
    awgn_capacity,
    beta_star,
    classify_inner,
    classify_outer,
    df_bound,
    grid_maxmin,
    intersection_max_sum,
    mc_conditional_variance,
    outer_bound,
    region,
    solve_equalizer,
    sum_capacity,
)

__all__ = [
    "Channel",
    "DomainError",
    "NumericalError",
    "UnsupportedDimension",
    "ValidationError",
    "awgn_capacity",
    "beta_star",
    "classify_inner",
    "classify_outer",
    "df_bound",
    "grid_maxmin",
    "intersection_max_sum",
    "mc_conditional_variance",
    "outer_bound",
    "region",
    "solve_equalizer",
    "sum_capacity",
]
