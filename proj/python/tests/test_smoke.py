import csv
import io
import json
import math
import os
import subprocess

import pytest

import fdrelay


def test_special_functions():
    assert fdrelay.lower_incomplete_gamma_int(1, 1.0) == pytest.approx(1 - math.exp(-1))
    assert fdrelay.lower_incomplete_gamma_int(3, 2.0) == pytest.approx(0.646647167633873, rel=1e-13)
    assert fdrelay.erlang_cdf(3, 1.0, 2.0) == pytest.approx(0.323323583816937, rel=1e-13)
    assert fdrelay.eta(2.0, 500, 10) == pytest.approx(2 ** 2.04 - 1, rel=1e-14)
    with pytest.raises(ValueError):
        fdrelay.lower_incomplete_gamma_int(0, 1.0)


def test_config_validation_errors_are_value_errors():
    cfg = fdrelay.SystemConfig()
    cfg.n_relays = 2
    cfg.delays = [1, 1]
    with pytest.raises(ValueError, match="duplicate delays"):
        fdrelay.validate_config(cfg)


def test_closed_form_and_monte_carlo_agree():
    cfg = fdrelay.preset_config("fig2")
    p = fdrelay.total_outage(cfg)
    est = fdrelay.estimate_outage(cfg, fdrelay.SchemeKind.multi_relay, trials=200000, seed=3)
    assert abs(est.p_hat - p) <= 3 * math.sqrt(p * (1 - p) / est.trials)
    enum = fdrelay.total_outage(cfg, method=fdrelay.CombineMethod.enumeration)
    assert enum == pytest.approx(p, abs=1e-12)


def test_spectrum_four_bins():
    cfg = fdrelay.SystemConfig()
    cfg.block_len = 4
    cfg.delays = [1]
    cfg.cp_len = 1
    lam = fdrelay.lambda_spectrum(cfg, 1.0, [1.0], [0], 1.0)
    expected = [2, 1 - 1j, 0, 1 + 1j]
    assert all(abs(a - b) < 1e-14 for a, b in zip(lam, expected))
    rate = fdrelay.exact_rate([abs(v) ** 2 for v in lam], cfg)
    assert rate == pytest.approx((math.log2(5) + 2 * math.log2(3)) / 5, rel=1e-12)


def test_preset_csv_and_json_match():
    text = fdrelay.run_preset("fig5", trials=500, seed=4, format="csv", workers=1)
    rows = list(csv.DictReader(io.StringIO(text)))
    assert list(rows[0].keys()) == [
        "param", "param_db", "scheme", "mode", "analytic_p", "mc_p", "mc_stderr", "trials", "seed",
    ]
    assert len(rows) == 3 * 11
    doc = json.loads(fdrelay.run_preset("fig5", trials=500, seed=4, format="json", workers=1))
    for r, j in zip(rows, doc):
        assert r["scheme"] == j["scheme"]
        assert float(r["mc_p"]) == j["mc_p"]
        assert (r["analytic_p"] == "") == (j["analytic_p"] is None)


def test_sweep_document():
    doc = json.dumps({
        "n_relays": 3,
        "p_source_db": 5,
        "e_relay_budget_db": 5,
        "var_sr_db": 8,
        "var_rd_db": 10,
        "var_rsi_db": 0,
        "var_iri_db": 0,
        "sweep": {"param": "var_iri", "values_db": [-5, 0, 5], "schemes": ["multi", "ps"], "trials": 300},
    })
    rows = list(csv.DictReader(io.StringIO(fdrelay.run_sweep_json(doc, workers=1))))
    assert len(rows) == 6
    assert rows[0]["scheme"] == "multi/N=3"
    assert rows[1]["analytic_p"] == ""


@pytest.mark.skipif(not os.environ.get("FDRELAY_CLI"), reason="CLI path not provided")
def test_cli_matches_module():
    out = subprocess.run(
        [os.environ["FDRELAY_CLI"], "--preset", "fig5", "--trials", "500", "--seed", "4", "--workers", "1"],
        check=True, capture_output=True, text=True,
    ).stdout
    assert out == fdrelay.run_preset("fig5", trials=500, seed=4, format="csv", workers=1)
