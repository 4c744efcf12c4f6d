"""Outage probability of full-duplex multi-relay selective decode-and-forward links."""

from ._core import (
    CombineMethod,
    MiMode,
    OutageEstimate,
    RelayPowerPolicy,
    SchemeKind,
    SyncMode,
    SystemConfig,
    db_to_linear,
    default_delays,
    erlang_cdf,
    estimate_outage,
    eta,
    exact_rate,
    lambda_spectrum,
    link_outages,
    lower_incomplete_gamma_int,
    p_cond_async,
    p_cond_sync,
    preset_config,
    run_preset,
    run_sweep_json,
    config_from_json,
    total_outage,
    validate_config,
)

__all__ = [
    "CombineMethod",
    "MiMode",
    "OutageEstimate",
    "RelayPowerPolicy",
    "SchemeKind",
    "SyncMode",
    "SystemConfig",
    "config_from_json",
    "db_to_linear",
    "default_delays",
    "erlang_cdf",
    "estimate_outage",
    "eta",
    "exact_rate",
    "lambda_spectrum",
    "link_outages",
    "lower_incomplete_gamma_int",
    "p_cond_async",
    "p_cond_sync",
    "preset_config",
    "run_preset",
    "run_sweep_json",
    "total_outage",
    "validate_config",
]
