#include "fdrelay/sweep.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fdrelay/analytic.hpp"
#include "fdrelay/mc.hpp"

namespace fdrelay {

using nlohmann::json;

namespace {

std::vector<double> grid(double first, double last, double step) {
    std::vector<double> v;
    const int count = static_cast<int>(std::lround((last - first) / step)) + 1;
    for (int i = 0; i < count; ++i) {
        v.push_back(first + i * step);
    }
    return v;
}

SystemConfig paper_base() {
    SystemConfig cfg;
    cfg.var_sd = db_to_linear(0.0);
    cfg.rate = 2.0;
    cfg.block_len = 500;
    cfg.cp_len = 10;
    return cfg;
}

std::string fmt9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

double round9(double v) { return std::stod(fmt9(v)); }

}  // namespace

SystemConfig with_sync_mode(SystemConfig cfg, SyncMode mode) {
    cfg.sync_mode = mode;
    cfg.delays = default_delays(cfg.n_relays, mode);
    return cfg;
}

Preset make_preset(const std::string& name) {
    Preset p;
    p.name = name;
    SweepSpec& s = p.sweep;
    s.base = paper_base();
    s.schemes = {SchemeKind::multi_relay, SchemeKind::os_selection, SchemeKind::ps_selection};
    s.values_in_db = true;
    if (name == "fig2" || name == "fig3") {
        s.base.p_source = db_to_linear(5.0);
        s.base.e_relay_budget = db_to_linear(5.0);
        s.base.var_sr = db_to_linear(8.0);
        s.base.var_rd = db_to_linear(10.0);
        s.base.var_rsi = db_to_linear(0.0);
        s.base.var_iri = db_to_linear(0.0);
        s.base.n_relays = 5;
        s.base = with_sync_mode(s.base, name == "fig2" ? SyncMode::asynchronous : SyncMode::synchronous);
        s.param = SweepParam::var_iri;
        s.values = grid(-10.0, 10.0, 2.0);
        s.relay_counts = {5, 10};
    } else if (name == "fig4" || name == "fig5") {
        s.base.p_source = db_to_linear(10.0);
        s.base.e_relay_budget = db_to_linear(10.0);
        s.base.var_rd = db_to_linear(name == "fig4" ? 10.0 : 0.0);
        s.base.var_rsi = db_to_linear(0.0);
        s.base.var_iri = db_to_linear(0.0);
        s.base.var_sr = db_to_linear(0.0);
        s.base.n_relays = 10;
        s.base = with_sync_mode(s.base, SyncMode::asynchronous);
        s.param = SweepParam::var_sr;
        s.values = grid(0.0, 10.0, 1.0);
        s.relay_counts = {10};
    } else {
        throw ConfigError("unknown preset '" + name + "'");
    }
    return p;
}

std::vector<std::string> preset_names() { return {"fig2", "fig3", "fig4", "fig5"}; }

SweepResult run_sweep(const SweepSpec& spec, unsigned workers) {
    validate_sweep(spec);
    SweepResult result;
    result.param = spec.param;
    const std::vector<int> counts = spec.relay_counts.empty() ? std::vector<int>{spec.base.n_relays} : spec.relay_counts;
    for (int n : counts) {
        SystemConfig cfg_n = spec.base;
        if (n != spec.base.n_relays) {
            cfg_n.n_relays = n;
            cfg_n = with_sync_mode(cfg_n, cfg_n.sync_mode);
        }
        for (double v : spec.values) {
            const double linear = spec.values_in_db ? db_to_linear(v) : v;
            const SystemConfig cfg = validate_config(with_param(cfg_n, spec.param, linear));
            for (SchemeKind kind : spec.schemes) {
                SweepRow row;
                row.param = linear;
                row.param_db = spec.values_in_db ? v : (is_db_param(spec.param) ? linear_to_db(linear) : v);
                row.scheme = kind;
                row.n_relays = n;
                row.mode = cfg.sync_mode;
                row.seed = spec.seed;
                if (kind == SchemeKind::multi_relay) {
                    row.analytic_p = total_outage(cfg, cfg.sync_mode);
                }
                row.mc = estimate_outage(cfg, {kind, cfg.mi_mode}, spec.trials, spec.seed, workers);
                result.rows.push_back(row);
            }
        }
    }
    return result;
}

OutputFormat parse_output_format(const std::string& s) {
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    throw ConfigError("unknown output format '" + s + "'");
}

std::string scheme_label(SchemeKind kind, int n_relays) {
    return to_string(kind) + "/N=" + std::to_string(n_relays);
}

void write_csv(const SweepResult& result, std::ostream& os) {
    os << kCsvHeader << '\n';
    for (const SweepRow& r : result.rows) {
        os << fmt9(r.param) << ',' << fmt9(r.param_db) << ',' << scheme_label(r.scheme, r.n_relays) << ','
           << to_string(r.mode) << ',' << (r.analytic_p ? fmt9(*r.analytic_p) : std::string{}) << ','
           << fmt9(r.mc.p_hat) << ',' << fmt9(r.mc.std_error) << ',' << r.mc.trials << ',' << r.seed << '\n';
    }
}

void write_json(const SweepResult& result, std::ostream& os) {
    json rows = json::array();
    for (const SweepRow& r : result.rows) {
        rows.push_back({
            {"param", round9(r.param)},
            {"param_db", round9(r.param_db)},
            {"scheme", scheme_label(r.scheme, r.n_relays)},
            {"mode", to_string(r.mode)},
            {"analytic_p", r.analytic_p ? json(round9(*r.analytic_p)) : json(nullptr)},
            {"mc_p", round9(r.mc.p_hat)},
            {"mc_stderr", round9(r.mc.std_error)},
            {"trials", r.mc.trials},
            {"seed", r.seed},
        });
    }
    os << rows.dump(2) << '\n';
}

std::string to_csv(const SweepResult& result) {
    std::ostringstream os;
    write_csv(result, os);
    return os.str();
}

std::string to_json(const SweepResult& result) {
    std::ostringstream os;
    write_json(result, os);
    return os.str();
}

void emit(const SweepResult& result, OutputFormat format, const std::string& path) {
    auto write = [&](std::ostream& os) {
        format == OutputFormat::csv ? write_csv(result, os) : write_json(result, os);
    };
    if (path == "-") {
        write(std::cout);
        std::cout.flush();
        if (!std::cout) {
            throw std::runtime_error("failed writing to stdout");
        }
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    write(out);
    out.close();
    if (!out) {
        throw std::runtime_error("failed writing '" + path + "'");
    }
}

namespace {

double read_power(const json& doc, const std::string& key, double fallback, std::set<std::string>& used) {
    const bool lin = doc.contains(key);
    const bool db = doc.contains(key + "_db");
    if (lin && db) {
        throw ConfigError("both '" + key + "' and '" + key + "_db' given");
    }
    if (lin) {
        used.insert(key);
        return doc.at(key).get<double>();
    }
    if (db) {
        used.insert(key + "_db");
        return db_to_linear(doc.at(key + "_db").get<double>());
    }
    return fallback;
}

template <typename T>
T read_plain(const json& doc, const std::string& key, T fallback, std::set<std::string>& used) {
    if (!doc.contains(key)) {
        return fallback;
    }
    used.insert(key);
    return doc.at(key).get<T>();
}

SystemConfig parse_config(const json& doc, std::set<std::string>& used) {
    SystemConfig cfg;
    cfg.n_relays = read_plain(doc, "n_relays", cfg.n_relays, used);
    cfg.p_source = read_power(doc, "p_source", cfg.p_source, used);
    cfg.e_relay_budget = read_power(doc, "e_relay_budget", cfg.e_relay_budget, used);
    cfg.var_sd = read_power(doc, "var_sd", cfg.var_sd, used);
    cfg.var_sr = read_power(doc, "var_sr", cfg.var_sr, used);
    cfg.var_rd = read_power(doc, "var_rd", cfg.var_rd, used);
    cfg.var_rsi = read_power(doc, "var_rsi", cfg.var_rsi, used);
    cfg.var_iri = read_power(doc, "var_iri", cfg.var_iri, used);
    cfg.rate = read_plain(doc, "rate", cfg.rate, used);
    cfg.block_len = read_plain(doc, "block_len", cfg.block_len, used);
    cfg.cp_len = read_plain(doc, "cp_len", cfg.cp_len, used);
    cfg.sync_mode = parse_sync_mode(read_plain<std::string>(doc, "sync_mode", "asynchronous", used));
    cfg.mi_mode = parse_mi_mode(read_plain<std::string>(doc, "mi_mode", "approximate", used));
    cfg.relay_power_policy =
        parse_relay_power_policy(read_plain<std::string>(doc, "relay_power_policy", "shared_budget", used));
    cfg.selection_iri = read_plain(doc, "selection_iri", cfg.selection_iri, used);
    cfg.delays = read_plain(doc, "delays", default_delays(cfg.n_relays, cfg.sync_mode), used);
    return cfg;
}

void reject_unknown(const json& doc, const std::set<std::string>& used, const std::string& where) {
    for (const auto& item : doc.items()) {
        if (!used.contains(item.key())) {
            throw ConfigError("unknown field '" + item.key() + "' in " + where);
        }
    }
}

json parse_document(const std::string& text) {
    try {
        json doc = json::parse(text);
        if (!doc.is_object()) {
            throw ConfigError("config document must be a JSON object");
        }
        return doc;
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace

SweepSpec sweep_from_json(const std::string& text) {
    const json doc = parse_document(text);
    std::set<std::string> used{"sweep"};
    SweepSpec spec;
    try {
        spec.base = parse_config(doc, used);
        reject_unknown(doc, used, "config");
        spec.param = SweepParam::var_iri;
        spec.values = {spec.base.var_iri};
        spec.values_in_db = false;
        if (doc.contains("sweep")) {
            const json& sw = doc.at("sweep");
            std::set<std::string> sw_used;
            spec.param = parse_sweep_param(read_plain<std::string>(sw, "param", "var_iri", sw_used));
            const bool lin = sw.contains("values");
            const bool db = sw.contains("values_db");
            if (lin == db) {
                throw ConfigError("sweep needs exactly one of 'values' or 'values_db'");
            }
            spec.values_in_db = db;
            spec.values = read_plain<std::vector<double>>(sw, db ? "values_db" : "values", {}, sw_used);
            spec.relay_counts = read_plain<std::vector<int>>(sw, "relay_counts", {}, sw_used);
            const auto schemes = read_plain<std::vector<std::string>>(sw, "schemes", {"multi"}, sw_used);
            spec.schemes.clear();
            for (const auto& s : schemes) {
                spec.schemes.push_back(parse_scheme(s));
            }
            spec.trials = read_plain<std::uint64_t>(sw, "trials", spec.trials, sw_used);
            spec.seed = read_plain<std::uint64_t>(sw, "seed", spec.seed, sw_used);
            reject_unknown(sw, sw_used, "sweep");
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad config field: ") + e.what());
    }
    return spec;
}

SystemConfig config_from_json(const std::string& text) { return validate_config(sweep_from_json(text).base); }

}  // namespace fdrelay
