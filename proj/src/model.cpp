#include "fdrelay/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace fdrelay {

namespace {

void require(bool cond, const char* what) {
    if (!cond) {
        throw ConfigError(what);
    }
}

}  // namespace

SystemConfig validate_config(const SystemConfig& cfg) {
    require(cfg.n_relays >= 1, "n_relays < 1");
    require(cfg.p_source >= 0.0, "p_source < 0");
    require(cfg.e_relay_budget >= 0.0, "e_relay_budget < 0");
    require(cfg.var_sd >= 0.0, "var_sd < 0");
    require(cfg.var_sr >= 0.0, "var_sr < 0");
    require(cfg.var_rd >= 0.0, "var_rd < 0");
    require(cfg.var_rsi >= 0.0, "var_rsi < 0");
    require(cfg.var_iri >= 0.0, "var_iri < 0");
    require(cfg.rate > 0.0, "rate <= 0");
    require(cfg.block_len >= 1, "block_len < 1");
    require(cfg.cp_len >= 0, "cp_len < 0");
    require(static_cast<int>(cfg.delays.size()) == cfg.n_relays, "length(delays) != n_relays");
    for (int d : cfg.delays) {
        require(d >= 0, "negative delay");
    }
    const int max_delay = *std::max_element(cfg.delays.begin(), cfg.delays.end());
    require(cfg.cp_len >= max_delay, "cp_len < max delay");

    if (cfg.sync_mode == SyncMode::asynchronous) {
        std::set<int> seen(cfg.delays.begin(), cfg.delays.end());
        require(seen.size() == cfg.delays.size(), "duplicate delays in asynchronous mode");
        for (int d : cfg.delays) {
            require(d % cfg.block_len != 0, "delay mod block_len == 0 in asynchronous mode");
        }
    } else {
        require(std::all_of(cfg.delays.begin(), cfg.delays.end(),
                            [&](int d) { return d == cfg.delays.front(); }),
                "unequal delays in synchronous mode");
    }
    return cfg;
}

std::vector<int> default_delays(int n_relays, SyncMode mode) {
    std::vector<int> d(static_cast<std::size_t>(std::max(n_relays, 0)));
    for (int k = 0; k < n_relays; ++k) {
        d[static_cast<std::size_t>(k)] = mode == SyncMode::asynchronous ? k + 1 : 1;
    }
    return d;
}

double db_to_linear(double x_db) { return std::pow(10.0, x_db / 10.0); }

double linear_to_db(double x) { return 10.0 * std::log10(x); }

OutageEstimate OutageEstimate::from_counts(std::uint64_t outages, std::uint64_t trials) {
    OutageEstimate e;
    e.trials = trials;
    e.outage_count = outages;
    e.p_hat = trials == 0 ? 0.0 : static_cast<double>(outages) / static_cast<double>(trials);
    e.std_error = trials == 0 ? 0.0 : std::sqrt(e.p_hat * (1.0 - e.p_hat) / static_cast<double>(trials));
    return e;
}

SweepParam parse_sweep_param(const std::string& name) {
    static const std::pair<const char*, SweepParam> table[] = {
        {"p_source", SweepParam::p_source}, {"e_relay_budget", SweepParam::e_relay_budget},
        {"var_sd", SweepParam::var_sd},     {"var_sr", SweepParam::var_sr},
        {"var_rd", SweepParam::var_rd},     {"var_rsi", SweepParam::var_rsi},
        {"var_iri", SweepParam::var_iri},   {"rate", SweepParam::rate},
    };
    for (const auto& [key, value] : table) {
        if (name == key) {
            return value;
        }
    }
    throw ConfigError("unknown sweep parameter '" + name + "'");
}

std::string to_string(SweepParam p) {
    switch (p) {
        case SweepParam::p_source: return "p_source";
        case SweepParam::e_relay_budget: return "e_relay_budget";
        case SweepParam::var_sd: return "var_sd";
        case SweepParam::var_sr: return "var_sr";
        case SweepParam::var_rd: return "var_rd";
        case SweepParam::var_rsi: return "var_rsi";
        case SweepParam::var_iri: return "var_iri";
        case SweepParam::rate: return "rate";
    }
    return "?";
}

std::string to_string(SchemeKind k) {
    switch (k) {
        case SchemeKind::multi_relay: return "multi";
        case SchemeKind::os_selection: return "os";
        case SchemeKind::ps_selection: return "ps";
    }
    return "?";
}

std::string to_string(SyncMode m) { return m == SyncMode::asynchronous ? "async" : "sync"; }

std::string to_string(MiMode m) { return m == MiMode::exact ? "exact" : "approx"; }

std::string to_string(RelayPowerPolicy p) {
    return p == RelayPowerPolicy::shared_budget ? "shared_budget" : "fixed_per_relay";
}

SchemeKind parse_scheme(const std::string& s) {
    if (s == "multi" || s == "multi_relay") return SchemeKind::multi_relay;
    if (s == "os" || s == "os_selection") return SchemeKind::os_selection;
    if (s == "ps" || s == "ps_selection") return SchemeKind::ps_selection;
    throw ConfigError("unknown scheme '" + s + "'");
}

SyncMode parse_sync_mode(const std::string& s) {
    if (s == "async" || s == "asynchronous") return SyncMode::asynchronous;
    if (s == "sync" || s == "synchronous") return SyncMode::synchronous;
    throw ConfigError("unknown sync mode '" + s + "'");
}

MiMode parse_mi_mode(const std::string& s) {
    if (s == "exact") return MiMode::exact;
    if (s == "approx" || s == "approximate") return MiMode::approximate;
    throw ConfigError("unknown mi mode '" + s + "'");
}

RelayPowerPolicy parse_relay_power_policy(const std::string& s) {
    if (s == "shared_budget") return RelayPowerPolicy::shared_budget;
    if (s == "fixed_per_relay") return RelayPowerPolicy::fixed_per_relay;
    throw ConfigError("unknown relay power policy '" + s + "'");
}

bool is_db_param(SweepParam p) { return p != SweepParam::rate; }

SystemConfig with_param(SystemConfig cfg, SweepParam p, double v) {
    switch (p) {
        case SweepParam::p_source: cfg.p_source = v; break;
        case SweepParam::e_relay_budget: cfg.e_relay_budget = v; break;
        case SweepParam::var_sd: cfg.var_sd = v; break;
        case SweepParam::var_sr: cfg.var_sr = v; break;
        case SweepParam::var_rd: cfg.var_rd = v; break;
        case SweepParam::var_rsi: cfg.var_rsi = v; break;
        case SweepParam::var_iri: cfg.var_iri = v; break;
        case SweepParam::rate: cfg.rate = v; break;
    }
    return cfg;
}

void validate_sweep(const SweepSpec& spec) {
    validate_config(spec.base);
    require(!spec.values.empty(), "empty sweep value list");
    require(!spec.schemes.empty(), "empty scheme list");
    require(spec.trials >= 1, "trials < 1");
    require(!(spec.values_in_db && !is_db_param(spec.param)), "parameter is not dB-valued");
    if (spec.values.size() > 1) {
        const bool up = spec.values[1] > spec.values[0];
        for (std::size_t i = 1; i < spec.values.size(); ++i) {
            const bool ok = up ? spec.values[i] > spec.values[i - 1] : spec.values[i] < spec.values[i - 1];
            require(ok, "sweep values not strictly monotone");
        }
    }
    for (int n : spec.relay_counts) {
        require(n >= 1, "relay count < 1");
    }
}

}  // namespace fdrelay
