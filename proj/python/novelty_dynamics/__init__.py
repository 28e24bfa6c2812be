"""Simulation and estimation for novelty-discounted multiplicative growth."""

from ._core import (
    DegenerateData,
    Error,
    InvalidArgument,
    NotDecaying,
    estimate_growth_ratio,
    estimate_novelty,
    fit_kww,
    fit_lognormal,
    half_life,
    ks_test,
    kww_partial_integral,
    kww_total_integral,
    mean_variance_series,
    mix_seed,
    normalized_kww,
    qq_points,
    roundtrip,
    simulate,
)

__all__ = [
    "DegenerateData",
    "Error",
    "InvalidArgument",
    "NotDecaying",
    "estimate_growth_ratio",
    "estimate_novelty",
    "fit_kww",
    "fit_lognormal",
    "half_life",
    "ks_test",
    "kww_partial_integral",
    "kww_total_integral",
    "mean_variance_series",
    "mix_seed",
    "normalized_kww",
    "qq_points",
    "roundtrip",
    "simulate",
]
